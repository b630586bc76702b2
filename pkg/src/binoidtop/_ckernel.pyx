# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled exponent-vector reduction kernel.

Semantics must match ``binoidtop._kernel_py.RuleKernel`` exactly: first
applicable rule in list order, restart after every application.  Entries
are kept in C longs; rule data in the pipelines stays tiny, and the
presentation layer never produces exponents anywhere near overflow.
"""

from cpython cimport array
import array

cdef array.array _LONG_TEMPLATE = array.array('l', [])


cdef class RuleKernel:
    cdef public int width
    cdef int nrules
    cdef long[::1] lhs_flat
    cdef long[::1] rhs_flat
    cdef char[::1] is_zero
    cdef public list rules

    def __init__(self, width, rules):
        cdef int n = len(rules)
        self.width = width
        self.nrules = n
        self.rules = [
            (tuple(lhs), None if rhs is None else tuple(rhs)) for lhs, rhs in rules
        ]
        lhs_arr = array.clone(_LONG_TEMPLATE, n * width, zero=True)
        rhs_arr = array.clone(_LONG_TEMPLATE, n * width, zero=True)
        zero_arr = array.array('b', bytes(n))
        cdef int r, i
        for r, (lhs, rhs) in enumerate(self.rules):
            if len(lhs) != width or (rhs is not None and len(rhs) != width):
                raise ValueError("rule width mismatch")
            for i in range(width):
                lhs_arr[r * width + i] = lhs[i]
            if rhs is None:
                zero_arr[r] = 1
            else:
                for i in range(width):
                    rhs_arr[r * width + i] = rhs[i]
        self.lhs_flat = lhs_arr
        self.rhs_flat = rhs_arr
        self.is_zero = zero_arr

    def reduce(self, vec):
        """Normal form of ``vec``; ``None`` for the zero class."""
        cdef int w = self.width
        cdef int n = self.nrules
        cdef array.array buf = array.clone(_LONG_TEMPLATE, w, zero=False)
        cdef long[::1] v = buf
        cdef int i, r
        cdef bint applied, divides
        for i in range(w):
            v[i] = vec[i]
        applied = True
        while applied:
            applied = False
            for r in range(n):
                divides = True
                for i in range(w):
                    if v[i] < self.lhs_flat[r * w + i]:
                        divides = False
                        break
                if divides:
                    if self.is_zero[r]:
                        return None
                    for i in range(w):
                        v[i] += self.rhs_flat[r * w + i] - self.lhs_flat[r * w + i]
                    applied = True
                    break
        return tuple(buf)

    def is_reducible(self, vec):
        cdef int w = self.width
        cdef int n = self.nrules
        cdef int i, r
        cdef bint divides
        for r in range(n):
            divides = True
            for i in range(w):
                if vec[i] < self.lhs_flat[r * w + i]:
                    divides = False
                    break
            if divides:
                return True
        return False
