# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled jet kernel for the flow surfaces.

Transliterates the pure-Python jet composition in ``powergeom.backend``
expression for expression and in the same order; together with building
without FP contraction this keeps the two backends bit-identical. Slot
layout matches ``Jet3``: f, f1, f2, f11, f12, f22, f111, f112, f122, f222.
"""

from libc.math cimport tan


cdef void jseed(int var_index, double value, double* o) noexcept nogil:
    cdef int i
    for i in range(10):
        o[i] = 0.0
    o[0] = value
    if var_index == 1:
        o[1] = 1.0
    else:
        o[2] = 1.0


cdef void jlinear(const double* a, const double* b, double alpha, double beta,
                  double* o) noexcept nogil:
    cdef int i
    for i in range(10):
        o[i] = alpha * a[i] + beta * b[i]


cdef void jmul(const double* a, const double* b, double* o) noexcept nogil:
    o[0] = a[0] * b[0]
    o[1] = a[1] * b[0] + a[0] * b[1]
    o[2] = a[2] * b[0] + a[0] * b[2]
    o[3] = a[3] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[3]
    o[4] = a[4] * b[0] + a[1] * b[2] + a[2] * b[1] + a[0] * b[4]
    o[5] = a[5] * b[0] + 2.0 * a[2] * b[2] + a[0] * b[5]
    o[6] = a[6] * b[0] + 3.0 * a[3] * b[1] + 3.0 * a[1] * b[3] + a[0] * b[6]
    o[7] = (a[7] * b[0] + a[3] * b[2] + 2.0 * a[4] * b[1]
            + 2.0 * a[1] * b[4] + a[2] * b[3] + a[0] * b[7])
    o[8] = (a[8] * b[0] + a[5] * b[1] + 2.0 * a[4] * b[2]
            + 2.0 * a[2] * b[4] + a[1] * b[5] + a[0] * b[8])
    o[9] = a[9] * b[0] + 3.0 * a[5] * b[2] + 3.0 * a[2] * b[5] + a[0] * b[9]


cdef void japply(double g0, double g1, double g2, double g3,
                 const double* u, double* o) noexcept nogil:
    o[0] = g0
    o[1] = g1 * u[1]
    o[2] = g1 * u[2]
    o[3] = g2 * u[1] * u[1] + g1 * u[3]
    o[4] = g2 * u[1] * u[2] + g1 * u[4]
    o[5] = g2 * u[2] * u[2] + g1 * u[5]
    o[6] = g3 * u[1] * u[1] * u[1] + 3.0 * g2 * u[1] * u[3] + g1 * u[6]
    o[7] = (g3 * u[1] * u[1] * u[2]
            + g2 * (u[3] * u[2] + 2.0 * u[4] * u[1]) + g1 * u[7])
    o[8] = (g3 * u[1] * u[2] * u[2]
            + g2 * (u[5] * u[1] + 2.0 * u[4] * u[2]) + g1 * u[8])
    o[9] = g3 * u[2] * u[2] * u[2] + 3.0 * g2 * u[2] * u[5] + g1 * u[9]


cdef void jtan(const double* u, double* o) noexcept nogil:
    cdef double t = tan(u[0])
    cdef double sec2 = 1.0 + t * t
    japply(t, sec2, 2.0 * t * sec2, 2.0 * sec2 * (sec2 + 2.0 * t * t), u, o)


cdef void jrecip(const double* b, double* o) noexcept nogil:
    cdef double inv = 1.0 / b[0]
    cdef double inv2 = inv * inv
    cdef double inv3 = inv2 * inv
    cdef double inv4 = inv3 * inv
    japply(inv, -inv2, 2.0 * inv3, -6.0 * inv4, b, o)


cdef void unit_flow(int code, double a1, double a2, double* o) noexcept nogil:
    cdef double x1[10]
    cdef double x2[10]
    cdef double t1[10]
    cdef double t2[10]
    cdef double u[10]
    cdef double one[10]
    cdef double u2[10]
    cdef double den[10]
    cdef double inv[10]
    cdef double numc[10]
    cdef int i
    jseed(1, a1, x1)
    jseed(2, a2, x2)
    jtan(x1, t1)
    jtan(x2, t2)
    jlinear(t1, t2, 1.0, -1.0, u)
    for i in range(10):
        one[i] = 0.0
    one[0] = 1.0
    jmul(u, u, u2)
    jlinear(one, u2, 1.0, 1.0, den)
    jrecip(den, inv)
    if code == 0:
        for i in range(10):
            o[i] = inv[i]
    elif code == 1:
        jmul(u, inv, o)
    else:
        jlinear(one, u, 1.0, 1.0, numc)
        jmul(numc, inv, o)


def unit_slots(int code, double a1, double a2):
    """Unit-scale jet slots of flow ``code`` at one point, as a 10-tuple."""
    cdef double o[10]
    unit_flow(code, a1, a2, o)
    return (o[0], o[1], o[2], o[3], o[4], o[5], o[6], o[7], o[8], o[9])


def batch_slots(int code, double[::1] a1, double[::1] a2,
                double[:, ::1] out, Py_ssize_t start, Py_ssize_t stop):
    """Fill ``out[start:stop]`` with unit-scale slots; releases the GIL."""
    cdef Py_ssize_t i
    with nogil:
        for i in range(start, stop):
            unit_flow(code, a1[i], a2[i], &out[i, 0])
