"""Pure-Python exponent-vector reduction kernel.

This is the reference implementation of the hot loop shared by normal-form
computation, completion, and all bounded searches.  ``binoidtop._ckernel``
is a compiled twin with identical semantics; ``binoidtop._kernel`` picks
one at import time.

A rule set is a list of ``(lhs, rhs)`` pairs of equal-length integer
tuples, with ``rhs is None`` encoding a collapse to the absorbing zero
class.  A rule applies to a vector ``v`` when ``lhs <= v`` componentwise;
application replaces ``v`` by ``v - lhs + rhs``.  Reduction always uses
the first applicable rule in list order and restarts the scan, so both
kernels produce bit-identical reduction sequences even on non-confluent
intermediate rule sets.
"""

from __future__ import annotations


class RuleKernel:
    """Reduction engine over a fixed, ordered rule list."""

    def __init__(self, width, rules):
        self.width = width
        self.rules = [
            (tuple(lhs), None if rhs is None else tuple(rhs)) for lhs, rhs in rules
        ]
        for lhs, rhs in self.rules:
            if len(lhs) != width or (rhs is not None and len(rhs) != width):
                raise ValueError("rule width mismatch")

    def reduce(self, vec):
        """Normal form of ``vec``; ``None`` for the zero class."""
        v = list(vec)
        rules = self.rules
        while True:
            for lhs, rhs in rules:
                for a, b in zip(v, lhs):
                    if a < b:
                        break
                else:
                    if rhs is None:
                        return None
                    for i, (b, c) in enumerate(zip(lhs, rhs)):
                        v[i] += c - b
                    break
            else:
                return tuple(v)

    def is_reducible(self, vec):
        for lhs, _ in self.rules:
            for a, b in zip(vec, lhs):
                if a < b:
                    break
            else:
                return True
        return False
