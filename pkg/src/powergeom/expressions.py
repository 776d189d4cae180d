"""Tabulated closed-form expansions of the flow geometry.

Each metric component, determinant and scalar curvature of the three flow
surfaces has a published expansion of the form

    prefactor * (sum of numerator polynomials) / (sum of denominator polynomials)

where the polynomials have integer coefficients in c1, s1, c2, s2 (cosines
and sines of the two angles) and the prefactor is a signed monomial in 2,
c1, c2, V and R0. The tables in :mod:`powergeom._tables` transcribe those
expansions term for term, in source order; this module evaluates them and
pairs each with the jet-engine quantity it claims to equal, so the
verification harness can confirm or flag every single one.

Transcriptions are never corrected to make verification pass: a quantity
whose tabulated form disagrees with the defining Hessian stays encoded as
transcribed and is reported as discrepant, with any strong repair candidate
recorded as a note.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _tables
from .errors import DenominatorZero
from .models import FlowKind

#: A single monomial: (coeff, e_c1, e_s1, e_c2, e_s2).
TrigTerm = tuple

#: Denominator magnitudes at or below DENOM_TOL * coefficient_mass raise
#: DenominatorZero.
DENOM_TOL = 1e-12


@dataclass(frozen=True)
class TrigPolynomial:
    """Integer-coefficient polynomial in c1, s1, c2, s2, in source order."""

    name: str
    terms: tuple[TrigTerm, ...]
    repairs: tuple[tuple[int, str, int], ...] = ()

    @property
    def coefficient_mass(self) -> int:
        """Sum of |coeff|; bounds |value| over the whole circle."""
        return sum(abs(t[0]) for t in self.terms)

    def eval_cs(self, c1: float, s1: float, c2: float, s2: float) -> float:
        total = 0.0
        for coeff, ec1, es1, ec2, es2 in self.terms:
            total += coeff * c1**ec1 * s1**es1 * c2**ec2 * s2**es2
        return total

    def __call__(self, a1: float, a2: float) -> float:
        return self.eval_cs(math.cos(a1), math.sin(a1),
                            math.cos(a2), math.sin(a2))

    def repair_annotations(self) -> list[str]:
        return [f"{self.name} term {idx}: {original!r} read as exponent {exponent}"
                for idx, original, exponent in self.repairs]


def trig_poly_eval(p: TrigPolynomial, a1: float, a2: float) -> float:
    """Evaluate a table at angles (radians); valid on the whole circle."""
    return p(a1, a2)


@dataclass(frozen=True)
class Prefactor:
    """Signed monomial ``sign * 2^pow2 * c1^e_c1 * c2^e_c2 * V^e_v * R0^e_r0``."""

    sign: int
    pow2: int = 0
    e_c1: int = 0
    e_c2: int = 0
    e_v: int = 0
    e_r0: int = 0

    def value(self, c1: float, c2: float, v: float, r0: float) -> float:
        return (self.sign * 2.0**self.pow2 * c1**self.e_c1 * c2**self.e_c2
                * v**self.e_v * r0**self.e_r0)


@dataclass(frozen=True)
class PaperQuantity:
    """One tabulated quantity and which jet-engine value it claims to equal.

    ``target`` is one of ``g11``, ``g12``, ``g22``, ``det``, ``curvature``.
    """

    id: str
    kind: FlowKind
    target: str
    prefactor: Prefactor
    numerators: tuple[TrigPolynomial, ...]
    denominators: tuple[TrigPolynomial, ...]
    notes: tuple[str, ...] = ()

    def denominator_mass(self) -> int:
        return sum(p.coefficient_mass for p in self.denominators)

    def repair_annotations(self) -> list[str]:
        out: list[str] = []
        for poly in self.numerators + self.denominators:
            out.extend(poly.repair_annotations())
        return out


def reconstruct_quantity(q: PaperQuantity, a1: float, a2: float,
                         v: float = 1.0, r0: float = 1.0) -> float:
    """Prefactor times numerator sum over denominator sum at (a1, a2)."""
    c1, s1 = math.cos(a1), math.sin(a1)
    c2, s2 = math.cos(a2), math.sin(a2)
    num = sum(p.eval_cs(c1, s1, c2, s2) for p in q.numerators)
    den = sum(p.eval_cs(c1, s1, c2, s2) for p in q.denominators)
    if abs(den) <= DENOM_TOL * q.denominator_mass():
        raise DenominatorZero(
            f"{q.id}: denominator {den!r} vanishes at ({a1!r}, {a2!r})")
    return q.prefactor.value(c1, c2, v, r0) * num / den


def _poly(name: str, table_name: str) -> TrigPolynomial:
    return TrigPolynomial(
        name=name,
        terms=tuple(getattr(_tables, table_name)),
        repairs=tuple(_tables.EXPONENT_REPAIRS.get(table_name, ())))


def _metric(qid: str, kind: FlowKind, target: str, pf: Prefactor,
            base: str, notes: tuple[str, ...] = ()) -> PaperQuantity:
    return PaperQuantity(
        id=qid, kind=kind, target=target, prefactor=pf,
        numerators=(_poly(f"{qid}.num", base + "_NUM"),),
        denominators=(_poly(f"{qid}.den", base + "_DEN"),),
        notes=notes)


_NOTE_I12 = ("transcribed prefactor is 2*c1^2*c2^2; the Hessian cross term "
             "instead matches this table with prefactor 2*c1*c2")
_NOTE_DET_I = ("transcribed prefactor is -c1^3*c2^3; the Hessian determinant "
               "instead matches this table with prefactor -4*c1^2*c2^2")
_NOTE_CURV_R = ("transcribed prefactor varies as 1/(R0*V^2) while curvature "
                "of the defining Hessian scales as R0/V^2; the two differ by "
                "R0^2 and coincide exactly when R0 = 1")

QUANTITIES: tuple[PaperQuantity, ...] = (
    # real flow
    _metric("METRIC_R_11", FlowKind.REAL, "g11",
            Prefactor(+1, pow2=1, e_c2=3, e_v=2, e_r0=-1), "METRIC_R_11"),
    _metric("METRIC_R_12", FlowKind.REAL, "g12",
            Prefactor(-1, pow2=1, e_c1=2, e_c2=2, e_v=2, e_r0=-1), "METRIC_R_12"),
    _metric("METRIC_R_22", FlowKind.REAL, "g22",
            Prefactor(+1, pow2=1, e_c1=3, e_v=2, e_r0=-1), "METRIC_R_22"),
    _metric("DET_R", FlowKind.REAL, "det",
            Prefactor(+1, pow2=3, e_c1=3, e_c2=3, e_v=4, e_r0=-2), "DET_R"),
    PaperQuantity(
        id="CURV_R", kind=FlowKind.REAL, target="curvature",
        prefactor=Prefactor(+1, pow2=-2, e_c1=-2, e_c2=-2, e_v=-2, e_r0=-1),
        numerators=(_poly("CURV_R.num", "CURV_R_NUM"),),
        denominators=(_poly("CURV_R.den", "CURV_R_DEN"),),
        notes=(_NOTE_CURV_R,)),
    # imaginary flow
    _metric("METRIC_I_11", FlowKind.IMAGINARY, "g11",
            Prefactor(-1, pow2=1, e_c2=2, e_v=2, e_r0=-1), "METRIC_I_11"),
    _metric("METRIC_I_12", FlowKind.IMAGINARY, "g12",
            Prefactor(+1, pow2=1, e_c1=2, e_c2=2, e_v=2, e_r0=-1),
            "METRIC_I_12", notes=(_NOTE_I12,)),
    _metric("METRIC_I_22", FlowKind.IMAGINARY, "g22",
            Prefactor(-1, pow2=1, e_c1=2, e_v=2, e_r0=-1), "METRIC_I_22"),
    _metric("DET_I", FlowKind.IMAGINARY, "det",
            Prefactor(-1, pow2=0, e_c1=3, e_c2=3, e_v=4, e_r0=-2),
            "DET_I", notes=(_NOTE_DET_I,)),
    PaperQuantity(
        id="CURV_I", kind=FlowKind.IMAGINARY, target="curvature",
        prefactor=Prefactor(-1, pow2=-1, e_c1=-2, e_c2=-2, e_v=-2, e_r0=1),
        numerators=(_poly("CURV_I.num1", "CURV_I_NUM_1"),
                    _poly("CURV_I.num2", "CURV_I_NUM_2")),
        denominators=(_poly("CURV_I.den", "CURV_I_DEN"),)),
    # complex flow
    _metric("METRIC_C_11", FlowKind.COMPLEX, "g11",
            Prefactor(+1, pow2=1, e_c2=2, e_v=2, e_r0=-1), "METRIC_C_11"),
    _metric("METRIC_C_12", FlowKind.COMPLEX, "g12",
            Prefactor(-1, pow2=1, e_c1=1, e_c2=1, e_v=2, e_r0=-1), "METRIC_C_12"),
    _metric("METRIC_C_22", FlowKind.COMPLEX, "g22",
            Prefactor(+1, pow2=1, e_c1=2, e_v=2, e_r0=-1), "METRIC_C_22"),
    _metric("DET_C", FlowKind.COMPLEX, "det",
            Prefactor(-1, pow2=2, e_c1=2, e_c2=2, e_v=4, e_r0=-2), "DET_C"),
    PaperQuantity(
        id="CURV_C", kind=FlowKind.COMPLEX, target="curvature",
        prefactor=Prefactor(+1, pow2=-2, e_c1=-2, e_c2=-2, e_v=-2, e_r0=1),
        numerators=(_poly("CURV_C.num1", "CURV_C_NUM_1"),
                    _poly("CURV_C.num2", "CURV_C_NUM_2"),
                    _poly("CURV_C.num3", "CURV_C_NUM_3"),
                    _poly("CURV_C.num4", "CURV_C_NUM_4")),
        denominators=(_poly("CURV_C.den1", "CURV_C_DEN_1"),
                      _poly("CURV_C.den2", "CURV_C_DEN_2"),
                      _poly("CURV_C.den3", "CURV_C_DEN_3"))),
)

_BY_ID = {q.id: q for q in QUANTITIES}


def quantities_for(kind: FlowKind) -> tuple[PaperQuantity, ...]:
    """All tabulated quantities of one flow, in table order."""
    return tuple(q for q in QUANTITIES if q.kind is kind)


def quantity(qid: str) -> PaperQuantity:
    """Look one quantity up by id (e.g. ``METRIC_R_11``)."""
    try:
        return _BY_ID[qid]
    except KeyError:
        raise KeyError(f"unknown quantity id {qid!r}; "
                       f"known: {sorted(_BY_ID)}") from None
