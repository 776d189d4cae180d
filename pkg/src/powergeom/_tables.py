"""Transcribed coefficient tables for the closed-form flow expansions.

Each table is a tuple of monomial terms ``(coeff, e_c1, e_s1, e_c2, e_s2)``
denoting ``coeff * c1**e_c1 * s1**e_s1 * c2**e_c2 * s2**e_s2`` with
``c_i = cos(a_i)`` and ``s_i = sin(a_i)``. Term order follows the source
tables so transcriptions stay auditable.

A handful of source exponents were typeset without braces (rendering as a
single-digit exponent followed by a stray digit, which would make the term
vanish); those are read as the full multi-digit exponent, matching the braced
neighbours of the same expression. Every such reading is recorded in
``EXPONENT_REPAIRS`` as ``(term_index, original_fragment, exponent_used)``.
"""


METRIC_R_11_NUM = (
    (-6, 4, 0, 1, 0),
    (6, 3, 1, 2, 1),
    (-1, 0, 0, 3, 0),
    (6, 4, 0, 3, 0),
    (-2, 3, 1, 0, 1),
    (3, 2, 0, 1, 0),
    (-1, 2, 0, 3, 0),
)

METRIC_R_11_DEN = (
    (-1, 6, 0, 0, 0),
    (-15, 2, 0, 4, 0),
    (42, 4, 0, 4, 0),
    (-27, 4, 0, 6, 0),
    (15, 6, 0, 2, 0),
    (-27, 6, 0, 4, 0),
    (15, 2, 0, 6, 0),
    (6, 5, 1, 1, 1),
    (20, 3, 1, 3, 1),
    (-15, 4, 0, 2, 0),
    (6, 1, 1, 5, 1),
    (-1, 0, 0, 6, 0),
    (13, 6, 0, 6, 0),
    (-20, 5, 1, 3, 1),
    (-20, 3, 1, 5, 1),
    (14, 5, 1, 5, 1),
)

METRIC_R_12_NUM = (
    (6, 1, 1, 1, 1),
    (-3, 2, 0, 0, 0),
    (7, 2, 0, 2, 0),
    (-3, 0, 0, 2, 0),
)

METRIC_R_12_DEN = (
    (-1, 6, 0, 0, 0),
    (-15, 2, 0, 4, 0),
    (42, 4, 0, 4, 0),
    (-27, 4, 0, 6, 0),
    (15, 6, 0, 2, 0),
    (-27, 6, 0, 4, 0),
    (15, 2, 0, 6, 0),
    (6, 5, 1, 1, 1),
    (20, 3, 1, 3, 1),
    (-15, 4, 0, 2, 0),
    (6, 1, 1, 5, 1),
    (-1, 0, 0, 6, 0),
    (13, 6, 0, 6, 0),
    (-20, 5, 1, 3, 1),
    (-20, 3, 1, 5, 1),
    (14, 5, 1, 5, 1),
)

METRIC_R_22_NUM = (
    (-1, 3, 0, 2, 0),
    (-1, 3, 0, 0, 0),
    (-2, 0, 1, 3, 1),
    (6, 2, 1, 3, 1),
    (6, 3, 0, 4, 0),
    (-6, 1, 0, 4, 0),
    (3, 1, 0, 2, 0),
)

METRIC_R_22_DEN = (
    (-1, 6, 0, 0, 0),
    (-15, 2, 0, 4, 0),
    (42, 4, 0, 4, 0),
    (-27, 4, 0, 6, 0),
    (15, 6, 0, 2, 0),
    (-27, 6, 0, 4, 0),
    (15, 2, 0, 6, 0),
    (6, 5, 1, 1, 1),
    (20, 3, 1, 3, 1),
    (-15, 4, 0, 2, 0),
    (6, 1, 1, 5, 1),
    (-1, 0, 0, 6, 0),
    (13, 6, 0, 6, 0),
    (-20, 5, 1, 3, 1),
    (-20, 3, 1, 5, 1),
    (14, 5, 1, 5, 1),
)

DET_R_NUM = (
    (12, 4, 1, 4, 1),
    (-4, 3, 0, 3, 0),
    (4, 3, 0, 1, 0),
    (-1, 5, 0, 1, 0),
    (-1, 1, 0, 5, 0),
    (4, 1, 0, 3, 0),
    (-1, 4, 1, 0, 1),
    (-1, 4, 1, 2, 1),
    (-1, 2, 1, 4, 1),
    (-1, 0, 1, 4, 1),
    (-7, 3, 0, 5, 0),
    (-6, 2, 1, 2, 1),
    (-7, 5, 0, 3, 0),
    (12, 5, 0, 5, 0),
)

DET_R_DEN = (
    (-210, 4, 0, 6, 0),
    (-210, 6, 0, 4, 0),
    (910, 6, 0, 6, 0),
    (-1, 10, 0, 0, 0),
    (-1, 0, 0, 10, 0),
    (121, 10, 0, 10, 0),
    (122, 9, 1, 9, 1),
    (252, 5, 1, 5, 1),
    (-584, 5, 1, 7, 1),
    (332, 5, 1, 9, 1),
    (808, 7, 1, 7, 1),
    (120, 7, 1, 3, 1),
    (-120, 9, 1, 3, 1),
    (10, 9, 1, 1, 1),
    (45, 2, 0, 10, 0),
    (-250, 4, 0, 10, 0),
    (490, 6, 0, 10, 0),
    (-405, 8, 0, 10, 0),
    (45, 10, 0, 2, 0),
    (-120, 3, 1, 9, 1),
    (10, 1, 1, 9, 1),
    (-584, 7, 1, 5, 1),
    (-344, 7, 1, 9, 1),
    (-344, 9, 1, 7, 1),
    (332, 9, 1, 5, 1),
    (120, 3, 1, 7, 1),
    (-250, 10, 0, 4, 0),
    (460, 8, 0, 4, 0),
    (-45, 2, 0, 8, 0),
    (490, 10, 0, 6, 0),
    (-1190, 6, 0, 8, 0),
    (1180, 8, 0, 8, 0),
    (-405, 10, 0, 8, 0),
    (-1190, 8, 0, 6, 0),
    (-45, 8, 0, 2, 0),
    (460, 4, 0, 8, 0),
)

CURV_R_NUM = (
    (-42, 4, 0, 6, 0),
    (-42, 6, 0, 4, 0),
    (444, 6, 0, 6, 0),
    (3, 10, 0, 0, 0),
    (3, 0, 0, 10, 0),
    (702, 10, 0, 10, 0),
    (702, 9, 1, 9, 1),
    (84, 5, 1, 5, 1),
    (-280, 5, 1, 7, 1),
    (356, 5, 1, 9, 1),
    (1080, 7, 1, 7, 1),
    (-24, 7, 1, 3, 1),
    (24, 9, 1, 3, 1),
    (-18, 9, 1, 1, 1),
    (-38, 2, 0, 10, 0),
    (-70, 4, 0, 10, 0),
    (752, 6, 0, 10, 0),
    (-1349, 8, 0, 10, 0),
    (-38, 10, 0, 2, 0),
    (24, 3, 1, 9, 1),
    (-18, 1, 1, 9, 1),
    (-280, 7, 1, 5, 1),
    (-1000, 7, 1, 9, 1),
    (-1000, 9, 1, 7, 1),
    (356, 9, 1, 5, 1),
    (-24, 3, 1, 7, 1),
    (-70, 10, 0, 4, 0),
    (72, 8, 0, 4, 0),
    (39, 2, 0, 8, 0),
    (752, 10, 0, 6, 0),
    (-1082, 6, 0, 8, 0),
    (2288, 8, 0, 8, 0),
    (-1349, 10, 0, 8, 0),
    (-1082, 8, 0, 6, 0),
    (39, 8, 0, 2, 0),
    (72, 4, 0, 8, 0),
)

CURV_R_DEN = (
    (-1, 6, 0, 0, 0),
    (6, 5, 1, 1, 1),
    (20, 3, 1, 3, 1),
    (6, 1, 1, 5, 1),
    (8, 5, 1, 3, 1),
    (8, 3, 1, 5, 1),
    (-15, 2, 0, 4, 0),
    (6, 4, 0, 4, 0),
    (53, 4, 0, 6, 0),
    (4, 6, 0, 2, 0),
    (53, 6, 0, 4, 0),
    (4, 2, 0, 6, 0),
    (-15, 4, 0, 2, 0),
    (-48, 6, 0, 6, 0),
    (1, 8, 0, 0, 0),
    (1, 0, 0, 8, 0),
    (-70, 5, 1, 5, 1),
    (-1, 0, 0, 6, 0),
    (-12, 5, 1, 7, 1),
    (72, 7, 1, 7, 1),
    (-12, 7, 1, 3, 1),
    (-12, 7, 1, 5, 1),
    (-12, 3, 1, 7, 1),
    (-11, 8, 0, 4, 0),
    (2, 2, 0, 8, 0),
    (-48, 6, 0, 8, 0),
    (72, 8, 0, 8, 0),
    (-48, 8, 0, 6, 0),
    (2, 8, 0, 2, 0),
    (-11, 4, 0, 8, 0),
)

METRIC_I_11_NUM = (
    (-5, 2, 0, 3, 1),
    (-1, 3, 1, 0, 0),
    (8, 3, 1, 2, 0),
    (-4, 4, 0, 1, 1),
    (3, 2, 0, 1, 1),
    (-3, 1, 1, 2, 0),
    (8, 4, 0, 3, 1),
    (-7, 3, 1, 4, 0),
    (1, 0, 0, 3, 1),
    (1, 1, 1, 4, 0),
)

METRIC_I_11_DEN = (
    (13, 6, 0, 6, 0),
    (14, 5, 1, 5, 1),
    (6, 1, 1, 5, 1),
    (15, 2, 0, 6, 0),
    (6, 5, 1, 1, 1),
    (-20, 3, 1, 5, 1),
    (-20, 5, 1, 3, 1),
    (-15, 2, 0, 4, 0),
    (20, 3, 1, 3, 1),
    (-27, 4, 0, 6, 0),
    (15, 6, 0, 2, 0),
    (-27, 6, 0, 4, 0),
    (42, 4, 0, 4, 0),
    (-15, 4, 0, 2, 0),
    (-1, 0, 0, 6, 0),
    (-1, 6, 0, 0, 0),
)

METRIC_I_12_NUM = (
    (1, 0, 1, 3, 0),
    (3, 2, 1, 1, 0),
    (-1, 3, 0, 0, 1),
    (-7, 2, 1, 3, 0),
    (7, 3, 0, 2, 1),
    (-3, 1, 0, 2, 1),
)

METRIC_I_12_DEN = (
    (13, 6, 0, 6, 0),
    (14, 5, 1, 5, 1),
    (6, 1, 1, 5, 1),
    (15, 2, 0, 6, 0),
    (6, 5, 1, 1, 1),
    (-20, 3, 1, 5, 1),
    (-20, 5, 1, 3, 1),
    (-15, 2, 0, 4, 0),
    (20, 3, 1, 3, 1),
    (-27, 4, 0, 6, 0),
    (15, 6, 0, 2, 0),
    (-27, 6, 0, 4, 0),
    (42, 4, 0, 4, 0),
    (-15, 4, 0, 2, 0),
    (-1, 0, 0, 6, 0),
    (-1, 6, 0, 0, 0),
)

METRIC_I_22_NUM = (
    (-8, 2, 0, 3, 1),
    (-1, 3, 1, 0, 0),
    (5, 3, 1, 2, 0),
    (-1, 4, 0, 1, 1),
    (3, 2, 0, 1, 1),
    (-3, 1, 1, 2, 0),
    (7, 4, 0, 3, 1),
    (-8, 3, 1, 4, 0),
    (1, 0, 0, 3, 1),
    (4, 1, 1, 4, 0),
)

METRIC_I_22_DEN = (
    (13, 6, 0, 6, 0),
    (14, 5, 1, 5, 1),
    (6, 1, 1, 5, 1),
    (15, 2, 0, 6, 0),
    (6, 5, 1, 1, 1),
    (-20, 3, 1, 5, 1),
    (-20, 5, 1, 3, 1),
    (-15, 2, 0, 4, 0),
    (20, 3, 1, 3, 1),
    (-27, 4, 0, 6, 0),
    (15, 6, 0, 2, 0),
    (-27, 6, 0, 4, 0),
    (42, 4, 0, 4, 0),
    (-15, 4, 0, 2, 0),
    (-1, 0, 0, 6, 0),
    (-1, 6, 0, 0, 0),
)

DET_I_NUM = (
    (10, 6, 0, 2, 0),
    (37, 5, 1, 5, 1),
    (-3, 4, 0, 2, 0),
    (-3, 2, 0, 4, 0),
    (-39, 6, 0, 4, 0),
    (28, 4, 0, 4, 0),
    (10, 2, 0, 6, 0),
    (-39, 4, 0, 6, 0),
    (3, 1, 1, 5, 1),
    (-20, 3, 1, 5, 1),
    (-20, 5, 1, 3, 1),
    (3, 5, 1, 1, 1),
    (2, 3, 1, 3, 1),
    (38, 6, 0, 6, 0),
    (-1, 0, 0, 6, 0),
    (-1, 6, 0, 0, 0),
)

DET_I_DEN = (
    (252, 5, 1, 5, 1),
    (910, 6, 0, 6, 0),
    (-210, 4, 0, 6, 0),
    (-210, 6, 0, 4, 0),
    (-1, 10, 0, 0, 0),
    (-1, 0, 0, 10, 0),
    (122, 9, 1, 9, 1),
    (121, 10, 0, 10, 0),
    (10, 1, 1, 9, 1),
    (-120, 3, 1, 9, 1),
    (-120, 9, 1, 3, 1),
    (332, 5, 1, 9, 1),
    (332, 9, 1, 5, 1),
    (-344, 9, 1, 7, 1),
    (-344, 7, 1, 9, 1),
    (490, 6, 0, 10, 0),
    (-405, 8, 0, 10, 0),
    (-250, 10, 0, 4, 0),
    (490, 10, 0, 6, 0),
    (1180, 8, 0, 8, 0),
    (-1190, 8, 0, 6, 0),
    (-1190, 6, 0, 8, 0),
    (-250, 4, 0, 10, 0),
    (-405, 10, 0, 8, 0),
    (-45, 8, 0, 2, 0),
    (-45, 2, 0, 8, 0),
    (460, 8, 0, 4, 0),
    (460, 4, 0, 8, 0),
    (45, 10, 0, 2, 0),
    (45, 2, 0, 10, 0),
    (120, 7, 1, 3, 1),
    (-584, 7, 1, 5, 1),
    (120, 3, 1, 7, 1),
    (-584, 5, 1, 7, 1),
    (10, 9, 1, 1, 1),
    (808, 7, 1, 7, 1),
)

CURV_I_NUM_1 = (
    (-297, 5, 1, 8, 0),
    (2235, 5, 1, 10, 0),
    (4770, 7, 1, 8, 0),
    (-15596, 7, 1, 10, 0),
    (-19538, 9, 1, 8, 0),
    (45624, 9, 1, 10, 0),
    (-7857, 11, 1, 6, 0),
    (-3954, 5, 1, 12, 0),
    (19890, 7, 1, 12, 0),
    (-49482, 9, 1, 12, 0),
    (-947, 4, 0, 11, 1),
    (59571, 11, 1, 12, 0),
    (121, 10, 0, 3, 1),
    (-2235, 10, 0, 5, 1),
    (30498, 11, 1, 8, 0),
    (-3653, 6, 0, 9, 1),
    (-11, 14, 0, 1, 1),
    (15596, 10, 0, 7, 1),
    (-45624, 10, 0, 9, 1),
    (60771, 10, 0, 11, 1),
    (-355, 12, 0, 3, 1),
    (3954, 12, 0, 5, 1),
    (-19890, 12, 0, 7, 1),
    (49482, 12, 0, 9, 1),
    (-59571, 12, 0, 11, 1),
    (-60771, 11, 1, 10, 0),
    (19538, 8, 0, 9, 1),
    (7857, 6, 0, 11, 1),
    (-30498, 8, 0, 11, 1),
    (2080, 5, 1, 14, 0),
    (-8902, 7, 1, 14, 0),
    (20139, 9, 1, 14, 0),
    (-22407, 11, 1, 14, 0),
    (8902, 14, 0, 7, 1),
    (-20139, 14, 0, 9, 1),
    (22407, 14, 0, 11, 1),
)

CURV_I_NUM_2 = (
    (11, 1, 1, 14, 0),
    (-2080, 14, 0, 5, 1),
    (-243, 3, 1, 14, 0),
    (-9450, 14, 0, 13, 1),
    (61, 13, 1, 2, 0),
    (-812, 13, 1, 4, 0),
    (5044, 13, 1, 6, 0),
    (-16769, 13, 1, 8, 0),
    (30165, 13, 1, 10, 0),
    (-27138, 13, 1, 12, 0),
    (9450, 13, 1, 14, 0),
    (-5044, 6, 0, 13, 1),
    (-61, 2, 0, 13, 1),
    (220, 4, 0, 9, 1),
    (-121, 3, 1, 10, 0),
    (947, 11, 1, 4, 0),
    (355, 3, 1, 12, 0),
    (-45, 11, 1, 2, 0),
    (27138, 12, 0, 13, 1),
    (330, 6, 0, 7, 1),
    (3653, 9, 1, 6, 0),
    (-220, 9, 1, 4, 0),
    (-10, 1, 1, 12, 0),
    (297, 8, 0, 5, 1),
    (-330, 7, 1, 6, 0),
    (45, 2, 0, 11, 1),
    (10, 12, 0, 1, 1),
    (-4770, 8, 0, 7, 1),
    (-30165, 10, 0, 13, 1),
    (812, 4, 0, 13, 1),
    (-1, 13, 1, 0, 0),
    (16769, 8, 0, 13, 1),
    (1, 0, 0, 13, 1),
    (243, 14, 0, 3, 1),
)

CURV_I_DEN = (
    (42, 6, 0, 6, 0),
    (1, 0, 0, 12, 0),
    (1, 12, 0, 0, 0),
    (5344, 9, 1, 9, 1),
    (10447, 10, 0, 10, 0),
    (4383, 12, 0, 8, 0),
    (100, 3, 1, 11, 1),
    (-708, 5, 1, 11, 1),
    (100, 11, 1, 3, 1),
    (2528, 7, 1, 11, 1),
    (-4406, 9, 1, 11, 1),
    (2528, 11, 1, 7, 1),
    (-4406, 11, 1, 9, 1),
    (2812, 11, 1, 11, 1),
    (-6, 1, 1, 11, 1),
    (-708, 11, 1, 5, 1),
    (-6, 11, 1, 1, 1),
    (-29, 2, 0, 12, 0),
    (-29, 12, 0, 2, 0),
    (4383, 8, 0, 12, 0),
    (-5813, 10, 0, 12, 0),
    (2813, 12, 0, 12, 0),
    (-1598, 6, 0, 12, 0),
    (-1598, 12, 0, 6, 0),
    (-5813, 12, 0, 10, 0),
    (307, 4, 0, 12, 0),
    (307, 12, 0, 4, 0),
    (-22, 3, 1, 9, 1),
    (-22, 9, 1, 3, 1),
    (368, 5, 1, 9, 1),
    (368, 9, 1, 5, 1),
    (-2132, 9, 1, 7, 1),
    (-2132, 7, 1, 9, 1),
    (1826, 6, 0, 10, 0),
    (-6442, 8, 0, 10, 0),
    (-257, 10, 0, 4, 0),
    (1826, 10, 0, 6, 0),
    (2822, 8, 0, 8, 0),
    (-482, 8, 0, 6, 0),
    (-482, 6, 0, 8, 0),
    (-257, 4, 0, 10, 0),
    (-6442, 10, 0, 8, 0),
    (27, 8, 0, 4, 0),
    (27, 4, 0, 8, 0),
    (15, 10, 0, 2, 0),
    (15, 2, 0, 10, 0),
    (-36, 7, 1, 5, 1),
    (-36, 5, 1, 7, 1),
    (472, 7, 1, 7, 1),
)

METRIC_C_11_NUM = (
    (-1, 0, 0, 3, 1),
    (1, 3, 1, 0, 0),
    (3, 2, 0, 2, 0),
    (-2, 3, 1, 1, 1),
    (5, 2, 0, 3, 1),
    (4, 4, 0, 1, 1),
    (-1, 1, 1, 4, 0),
    (6, 3, 1, 3, 1),
    (-3, 2, 0, 1, 1),
    (7, 3, 1, 4, 0),
    (-8, 4, 0, 3, 1),
    (3, 1, 1, 2, 0),
    (6, 4, 0, 4, 0),
    (-6, 4, 0, 2, 0),
    (-8, 3, 1, 2, 0),
    (-1, 2, 0, 4, 0),
    (-1, 0, 0, 4, 0),
)

METRIC_C_11_DEN = (
    (-20, 5, 1, 3, 1),
    (-1, 0, 0, 6, 0),
    (-1, 6, 0, 0, 0),
    (-27, 6, 0, 4, 0),
    (14, 5, 1, 5, 1),
    (13, 6, 0, 6, 0),
    (6, 1, 1, 5, 1),
    (15, 2, 0, 6, 0),
    (-27, 4, 0, 6, 0),
    (-20, 3, 1, 5, 1),
    (6, 5, 1, 1, 1),
    (20, 3, 1, 3, 1),
    (42, 4, 0, 4, 0),
    (15, 6, 0, 2, 0),
    (-15, 4, 0, 2, 0),
    (-15, 2, 0, 4, 0),
)

METRIC_C_12_NUM = (
    (6, 2, 1, 2, 1),
    (-3, 3, 0, 1, 0),
    (-3, 2, 1, 1, 0),
    (1, 3, 0, 0, 1),
    (-3, 1, 0, 3, 0),
    (7, 3, 0, 3, 0),
    (7, 2, 1, 3, 0),
    (-7, 3, 0, 2, 1),
    (-1, 0, 1, 3, 0),
    (3, 1, 0, 2, 1),
)

METRIC_C_12_DEN = (
    (-20, 5, 1, 3, 1),
    (-1, 0, 0, 6, 0),
    (-1, 6, 0, 0, 0),
    (-27, 6, 0, 4, 0),
    (14, 5, 1, 5, 1),
    (13, 6, 0, 6, 0),
    (6, 1, 1, 5, 1),
    (15, 2, 0, 6, 0),
    (-27, 4, 0, 6, 0),
    (-20, 3, 1, 5, 1),
    (6, 5, 1, 1, 1),
    (20, 3, 1, 3, 1),
    (42, 4, 0, 4, 0),
    (15, 6, 0, 2, 0),
    (-15, 4, 0, 2, 0),
    (-15, 2, 0, 4, 0),
)

METRIC_C_22_NUM = (
    (-1, 0, 0, 3, 1),
    (1, 3, 1, 0, 0),
    (3, 2, 0, 2, 0),
    (8, 2, 0, 3, 1),
    (1, 4, 0, 1, 1),
    (-4, 1, 1, 4, 0),
    (6, 3, 1, 3, 1),
    (-3, 2, 0, 1, 1),
    (8, 3, 1, 4, 0),
    (-7, 4, 0, 3, 1),
    (3, 1, 1, 2, 0),
    (6, 4, 0, 4, 0),
    (-1, 4, 0, 0, 0),
    (-1, 4, 0, 2, 0),
    (-5, 3, 1, 2, 0),
    (-6, 2, 0, 4, 0),
    (-2, 1, 1, 3, 1),
)

METRIC_C_22_DEN = (
    (-20, 5, 1, 3, 1),
    (-1, 0, 0, 6, 0),
    (-1, 6, 0, 0, 0),
    (-27, 6, 0, 4, 0),
    (14, 5, 1, 5, 1),
    (13, 6, 0, 6, 0),
    (6, 1, 1, 5, 1),
    (15, 2, 0, 6, 0),
    (-27, 4, 0, 6, 0),
    (-20, 3, 1, 5, 1),
    (6, 5, 1, 1, 1),
    (20, 3, 1, 3, 1),
    (42, 4, 0, 4, 0),
    (15, 6, 0, 2, 0),
    (-15, 4, 0, 2, 0),
    (-15, 2, 0, 4, 0),
)

DET_C_NUM = (
    (-25, 6, 0, 4, 0),
    (-18, 5, 1, 3, 1),
    (-1, 0, 0, 6, 0),
    (-1, 6, 0, 0, 0),
    (13, 5, 1, 5, 1),
    (-1, 5, 1, 0, 0),
    (1, 0, 0, 5, 1),
    (5, 1, 1, 5, 1),
    (-18, 3, 1, 5, 1),
    (5, 5, 1, 1, 1),
    (12, 2, 0, 6, 0),
    (-25, 4, 0, 6, 0),
    (12, 6, 0, 2, 0),
    (5, 4, 0, 1, 1),
    (-5, 1, 1, 4, 0),
    (-10, 3, 1, 2, 0),
    (-11, 4, 0, 2, 0),
    (-11, 2, 0, 4, 0),
    (10, 2, 0, 3, 1),
    (-60, 5, 1, 6, 0),
    (60, 6, 0, 5, 1),
    (-20, 6, 0, 3, 1),
    (20, 3, 1, 6, 0),
    (-2, 5, 1, 2, 0),
    (-47, 4, 0, 5, 1),
    (2, 2, 0, 5, 1),
    (47, 5, 1, 4, 0),
    (14, 3, 1, 3, 1),
    (14, 6, 0, 6, 0),
    (36, 4, 0, 4, 0),
    (-10, 4, 0, 3, 1),
    (10, 3, 1, 4, 0),
)

DET_C_DEN = (
    (-210, 6, 0, 4, 0),
    (252, 5, 1, 5, 1),
    (460, 4, 0, 8, 0),
    (-1190, 6, 0, 8, 0),
    (460, 8, 0, 4, 0),
    (-1190, 8, 0, 6, 0),
    (-45, 2, 0, 8, 0),
    (-45, 8, 0, 2, 0),
    (45, 2, 0, 10, 0),
    (-250, 4, 0, 10, 0),
    (490, 6, 0, 10, 0),
    (-405, 8, 0, 10, 0),
    (-405, 10, 0, 8, 0),
    (490, 10, 0, 6, 0),
    (45, 10, 0, 2, 0),
    (-250, 10, 0, 4, 0),
    (-584, 5, 1, 7, 1),
    (120, 7, 1, 3, 1),
    (120, 3, 1, 7, 1),
    (-584, 7, 1, 5, 1),
    (10, 9, 1, 1, 1),
    (10, 1, 1, 9, 1),
    (-344, 7, 1, 9, 1),
    (-120, 9, 1, 3, 1),
    (332, 9, 1, 5, 1),
    (-344, 9, 1, 7, 1),
    (-120, 3, 1, 9, 1),
    (332, 5, 1, 9, 1),
    (1180, 8, 0, 8, 0),
    (-210, 4, 0, 6, 0),
    (-1, 10, 0, 0, 0),
    (808, 7, 1, 7, 1),
    (910, 6, 0, 6, 0),
    (-1, 0, 0, 10, 0),
    (121, 10, 0, 10, 0),
    (122, 9, 1, 9, 1),
)

CURV_C_NUM_1 = (
    (-495, 4, 0, 8, 0),
    (-234, 6, 0, 8, 0),
    (-495, 8, 0, 4, 0),
    (-234, 8, 0, 6, 0),
    (-66, 2, 0, 10, 0),
    (162, 4, 0, 10, 0),
    (13566, 6, 0, 10, 0),
    (-91736, 8, 0, 10, 0),
    (-91736, 10, 0, 8, 0),
    (13566, 10, 0, 6, 0),
    (-66, 10, 0, 2, 0),
    (162, 10, 0, 4, 0),
    (792, 5, 1, 7, 1),
    (792, 7, 1, 5, 1),
    (-21064, 7, 1, 9, 1),
    (220, 9, 1, 3, 1),
    (492, 9, 1, 5, 1),
    (-21064, 9, 1, 7, 1),
    (220, 3, 1, 9, 1),
    (492, 5, 1, 9, 1),
    (25506, 8, 0, 8, 0),
    (-1, 12, 0, 0, 0),
    (-1, 0, 0, 12, 0),
    (2, 0, 0, 14, 0),
    (1152, 7, 1, 7, 1),
    (2, 14, 0, 0, 0),
    (-924, 6, 0, 6, 0),
    (175360, 11, 1, 11, 1),
    (233534, 10, 0, 10, 0),
    (85296, 9, 1, 9, 1),
    (186, 13, 1, 2, 0),
    (-1960, 13, 1, 4, 0),
    (5512, 13, 1, 6, 0),
    (3214, 13, 1, 8, 0),
    (-34758, 13, 1, 10, 0),
    (49084, 13, 1, 12, 0),
    (-2054, 4, 0, 11, 1),
    (10386, 6, 0, 11, 1),
    (-9732, 8, 0, 11, 1),
    (-33034, 10, 0, 11, 1),
    (72538, 12, 0, 11, 1),
    (-38450, 14, 0, 11, 1),
    (14436, 8, 0, 9, 1),
)

CURV_C_NUM_2 = (
    (90, 2, 0, 11, 1),
    (-5796, 8, 0, 7, 1),
    (594, 8, 0, 5, 1),
    (-3878, 10, 0, 5, 1),
    (14424, 10, 0, 7, 1),
    (-6944, 10, 0, 9, 1),
    (6996, 12, 0, 5, 1),
    (-12292, 12, 0, 7, 1),
    (-20348, 12, 0, 9, 1),
    (-3600, 14, 0, 5, 1),
    (2428, 14, 0, 7, 1),
    (18194, 14, 0, 9, 1),
    (-14436, 9, 1, 8, 0),
    (6944, 9, 1, 10, 0),
    (20348, 9, 1, 12, 0),
    (-18194, 9, 1, 14, 0),
    (-10386, 11, 1, 6, 0),
    (9732, 11, 1, 8, 0),
    (33034, 11, 1, 10, 0),
    (-72538, 11, 1, 12, 0),
    (38450, 11, 1, 14, 0),
    (-5074, 6, 0, 9, 1),
    (-902, 12, 0, 3, 1),
    (694, 14, 0, 3, 1),
    (5074, 9, 1, 6, 0),
    (440, 4, 0, 9, 1),
    (-30, 14, 0, 1, 1),
    (2054, 11, 1, 4, 0),
    (5796, 7, 1, 8, 0),
    (-14424, 7, 1, 10, 0),
    (-2428, 7, 1, 14, 0),
    (-440, 9, 1, 4, 0),
    (-660, 7, 1, 6, 0),
    (12292, 7, 1, 12, 0),
    (902, 3, 1, 12, 0),
    (-6996, 5, 1, 12, 0),
)

CURV_C_NUM_3 = (
    (3878, 5, 1, 10, 0),
    (3600, 5, 1, 14, 0),
    (-694, 3, 1, 14, 0),
    (242, 10, 0, 3, 1),
    (-594, 5, 1, 8, 0),
    (660, 6, 0, 7, 1),
    (-242, 3, 1, 10, 0),
    (-20, 1, 1, 12, 0),
    (30, 1, 1, 14, 0),
    (20, 12, 0, 1, 1),
    (-90, 11, 1, 2, 0),
    (-49084, 12, 0, 13, 1),
    (34758, 10, 0, 13, 1),
    (1960, 4, 0, 13, 1),
    (-3214, 8, 0, 13, 1),
    (-5512, 6, 0, 13, 1),
    (-186, 2, 0, 13, 1),
    (-32, 3, 1, 11, 1),
    (-288, 3, 1, 13, 1),
    (-5720, 5, 1, 11, 1),
    (5288, 5, 1, 13, 1),
    (44672, 7, 1, 11, 1),
    (-28816, 7, 1, 13, 1),
    (-132516, 9, 1, 11, 1),
    (72372, 9, 1, 13, 1),
    (-132516, 11, 1, 9, 1),
    (-84592, 11, 1, 13, 1),
    (72372, 13, 1, 9, 1),
    (-84592, 13, 1, 11, 1),
    (-28816, 13, 1, 7, 1),
    (-32, 11, 1, 3, 1),
    (-288, 13, 1, 3, 1),
)

CURV_C_NUM_4 = (
    (-5720, 11, 1, 5, 1),
    (44672, 11, 1, 7, 1),
    (5288, 13, 1, 5, 1),
    (12, 11, 1, 1, 1),
    (-12, 13, 1, 1, 1),
    (-12, 1, 1, 13, 1),
    (12, 1, 1, 11, 1),
    (14504, 6, 0, 14, 0),
    (-1552, 4, 0, 14, 0),
    (-26392, 6, 0, 12, 0),
    (122669, 8, 0, 12, 0),
    (-264682, 10, 0, 12, 0),
    (269177, 12, 0, 12, 0),
    (-102868, 14, 0, 12, 0),
    (-26392, 12, 0, 6, 0),
    (122669, 12, 0, 8, 0),
    (-264682, 12, 0, 10, 0),
    (-1552, 14, 0, 4, 0),
    (14504, 14, 0, 6, 0),
    (-56702, 14, 0, 8, 0),
    (110054, 14, 0, 10, 0),
    (-2, 13, 1, 0, 0),
    (6, 14, 0, 2, 0),
    (6, 2, 0, 14, 0),
    (70, 2, 0, 12, 0),
    (1771, 12, 0, 4, 0),
    (70, 12, 0, 2, 0),
    (1771, 4, 0, 12, 0),
    (2, 0, 0, 13, 1),
    (-102868, 12, 0, 14, 0),
    (-56702, 8, 0, 14, 0),
    (110054, 10, 0, 14, 0),
    (36560, 13, 1, 13, 1),
    (-21276, 13, 1, 14, 0),
    (21276, 14, 0, 13, 1),
    (36556, 14, 0, 14, 0),
)

CURV_C_DEN_1 = (
    (-210, 6, 0, 4, 0),
    (252, 5, 1, 5, 1),
    (-68, 4, 0, 8, 0),
    (3660, 6, 0, 8, 0),
    (-68, 8, 0, 4, 0),
    (3660, 8, 0, 6, 0),
    (-45, 2, 0, 8, 0),
    (-45, 8, 0, 2, 0),
    (-31, 2, 0, 10, 0),
    (991, 4, 0, 10, 0),
    (-5074, 6, 0, 10, 0),
    (5257, 8, 0, 10, 0),
    (5257, 10, 0, 8, 0),
    (-5074, 10, 0, 6, 0),
    (-31, 10, 0, 2, 0),
    (991, 10, 0, 4, 0),
    (172, 5, 1, 7, 1),
    (120, 7, 1, 3, 1),
    (120, 3, 1, 7, 1),
    (172, 7, 1, 5, 1),
    (10, 9, 1, 1, 1),
    (10, 1, 1, 9, 1),
    (5916, 7, 1, 9, 1),
    (138, 9, 1, 3, 1),
    (-2132, 9, 1, 5, 1),
    (5916, 9, 1, 7, 1),
    (138, 3, 1, 9, 1),
    (-2132, 5, 1, 9, 1),
    (-10970, 8, 0, 8, 0),
    (-210, 4, 0, 6, 0),
    (-672, 5, 1, 6, 0),
    (672, 6, 0, 5, 1),
    (-1, 10, 0, 0, 0),
    (-4112, 7, 1, 7, 1),
    (70, 6, 0, 6, 0),
    (-1, 0, 0, 10, 0),
    (6836, 11, 1, 11, 1),
    (8265, 10, 0, 10, 0),
)

CURV_C_DEN_2 = (
    (-310, 9, 1, 9, 1),
    (-292, 4, 0, 11, 1),
    (2840, 6, 0, 11, 1),
    (-7846, 8, 0, 11, 1),
    (8556, 10, 0, 11, 1),
    (-3240, 12, 0, 11, 1),
    (8876, 8, 0, 9, 1),
    (-20, 2, 0, 11, 1),
    (-220, 8, 0, 7, 1),
    (-1596, 8, 0, 5, 1),
    (-120, 10, 0, 5, 1),
    (6560, 10, 0, 7, 1),
    (-14604, 10, 0, 9, 1),
    (1116, 12, 0, 5, 1),
    (-4784, 12, 0, 7, 1),
    (6942, 12, 0, 9, 1),
    (-8876, 9, 1, 8, 0),
    (14604, 9, 1, 10, 0),
    (-6942, 9, 1, 12, 0),
    (-2840, 11, 1, 6, 0),
    (7846, 11, 1, 8, 0),
    (-8556, 11, 1, 10, 0),
    (3240, 11, 1, 12, 0),
    (-688, 6, 0, 9, 1),
    (-24, 12, 0, 3, 1),
    (688, 9, 1, 6, 0),
    (-618, 4, 0, 9, 1),
    (292, 11, 1, 4, 0),
    (220, 7, 1, 8, 0),
    (-6560, 7, 1, 10, 0),
    (618, 9, 1, 4, 0),
    (2080, 7, 1, 6, 0),
    (4784, 7, 1, 12, 0),
    (24, 3, 1, 12, 0),
    (-1116, 5, 1, 12, 0),
    (120, 5, 1, 10, 0),
)

CURV_C_DEN_3 = (
    (-284, 10, 0, 3, 1),
    (1596, 5, 1, 8, 0),
    (-2080, 6, 0, 7, 1),
    (284, 3, 1, 10, 0),
    (10, 1, 1, 12, 0),
    (-10, 12, 0, 1, 1),
    (20, 11, 1, 2, 0),
    (-258, 3, 1, 8, 0),
    (-20, 1, 1, 10, 0),
    (258, 8, 0, 3, 1),
    (-492, 7, 1, 4, 0),
    (492, 4, 0, 7, 1),
    (-196, 3, 1, 11, 1),
    (748, 5, 1, 11, 1),
    (768, 7, 1, 11, 1),
    (-6886, 9, 1, 11, 1),
    (-6886, 11, 1, 9, 1),
    (-196, 11, 1, 3, 1),
    (748, 11, 1, 5, 1),
    (768, 11, 1, 7, 1),
    (10, 11, 1, 1, 1),
    (10, 1, 1, 11, 1),
    (794, 6, 0, 12, 0),
    (3366, 8, 0, 12, 0),
    (-10303, 10, 0, 12, 0),
    (6835, 12, 0, 12, 0),
    (794, 12, 0, 6, 0),
    (3366, 12, 0, 8, 0),
    (-10303, 12, 0, 10, 0),
    (53, 2, 0, 12, 0),
    (-489, 12, 0, 4, 0),
    (53, 12, 0, 2, 0),
    (-489, 4, 0, 12, 0),
    (2, 0, 0, 11, 1),
    (-2, 11, 1, 0, 0),
    (92, 2, 0, 9, 1),
    (20, 10, 0, 1, 1),
    (-92, 9, 1, 2, 0),
)

# unbraced multi-digit exponents read whole, per braced neighbours
EXPONENT_REPAIRS = {
    "DET_R_DEN": ((17, "c_2^10", 10), (32, "c_1^10", 10),),
    "CURV_R_NUM": ((18, "c_1^10", 10), (29, "c_1^10", 10),),
    "CURV_I_NUM_1": ((10, "c_2^11", 11),),
    "CURV_I_DEN": ((16, "c_1^11", 11),),
    "CURV_C_NUM_3": ((26, "c_2^13", 13),),
}
