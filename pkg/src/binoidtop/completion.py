"""Completion of commutative exponent-vector rewriting systems.

A finitely generated commutative binoid congruence is handled as a
rewriting system on exponent vectors.  Relations are oriented by a
degree-then-lex monomial order and closed under critical pairs in the
style of Knuth-Bendix (equivalently, Buchberger S-pairs for binomial
relations).  Rules come in two shapes:

* binomial rules ``lhs -> rhs``: replace a divisible vector ``v`` by
  ``v - lhs + rhs``;
* zero rules ``lhs -> None``: any multiple of ``lhs`` is the zero class.

Every rule strictly decreases the monomial order, so reduction always
terminates; once no critical pair is left the system is confluent and two
vectors are congruent iff they share a normal form.  Completion is run
under a step budget; presentations whose completion exhausts the budget
are flagged untamed and rejected by downstream operations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from ._kernel import RuleKernel

DEFAULT_BUDGET = 10_000


def make_order_key(lex_perm):
    """Degree-then-lex comparison key; lex reads slots in ``lex_perm`` order."""

    def key(vec):
        return (sum(vec), tuple(vec[i] for i in lex_perm))

    return key


def divides(small, big) -> bool:
    return all(a <= b for a, b in zip(small, big))


def vec_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def apply_rule(vec, lhs, rhs):
    if rhs is None:
        return None
    return tuple(a - b + c for a, b, c in zip(vec, lhs, rhs))


@dataclass(frozen=True)
class CompletedSystem:
    """Confluent rule set plus its reduction kernel."""

    width: int
    rules: tuple
    lex_perm: tuple
    complete: bool
    steps: int
    kernel: RuleKernel = field(compare=False, repr=False)

    def reduce(self, vec):
        return self.kernel.reduce(vec)

    def is_normal_form(self, vec) -> bool:
        return not self.kernel.is_reducible(vec)

    @property
    def binomial_rules(self):
        return [(l, r) for l, r in self.rules if r is not None]

    @property
    def zero_rules(self):
        return [l for l, r in self.rules if r is None]

    def finite_box(self) -> Optional[tuple]:
        """Per-slot bound when the normal-form language is finite.

        The irreducible vectors form a finite set iff every slot has a
        pure-power rule left-hand side; the returned box bounds every
        normal form strictly.
        """
        bounds = [None] * self.width
        for lhs, _ in self.rules:
            support = [i for i, e in enumerate(lhs) if e > 0]
            if len(support) == 1:
                i = support[0]
                if bounds[i] is None or lhs[i] < bounds[i]:
                    bounds[i] = lhs[i]
        if any(b is None for b in bounds):
            return None
        return tuple(bounds)


def _orient(u, v, order_key):
    """Orient an equation into a rule, or None when trivial."""
    if u == v:
        return None
    if u is None:
        return (v, None)
    if v is None:
        return (u, None)
    if order_key(u) > order_key(v):
        return (u, v)
    return (v, u)


def complete(equations, width, lex_perm, budget=DEFAULT_BUDGET):
    """Run completion on a list of vector equations.

    Equations are ``(u, v)`` pairs of exponent vectors, ``v`` possibly None
    for zero relations.  Returns a CompletedSystem whose ``complete`` flag
    is False when the budget ran out (partial rules are still usable for
    diagnostics, never for answers).
    """
    order_key = make_order_key(lex_perm)
    rules = []  # kept interreduced on left-hand sides

    def kernel_of(rule_list):
        return RuleKernel(width, sorted(rule_list, key=lambda lr: order_key(lr[0])))

    def reduce_now(vec):
        if vec is None:
            return None
        v = list(vec)
        while True:
            for lhs, rhs in rules:
                if divides(lhs, v):
                    if rhs is None:
                        return None
                    for i in range(width):
                        v[i] += rhs[i] - lhs[i]
                    break
            else:
                return tuple(v)

    pending = deque(equations)
    steps = 0
    while pending:
        steps += 1
        if steps > budget:
            return CompletedSystem(
                width, tuple(rules), tuple(lex_perm), False, steps, kernel_of(rules)
            )
        u, v = pending.popleft()
        rule = _orient(reduce_now(u), reduce_now(v), order_key)
        if rule is None:
            continue
        lhs, rhs = rule
        # Interreduce: rules whose lhs the new rule divides get requeued.
        kept = []
        for l2, r2 in rules:
            if divides(lhs, l2):
                pending.append((l2, r2))
            else:
                kept.append((l2, r2))
        kept.append((lhs, rhs))
        rules = kept
        # Critical pairs with every other rule; disjoint supports always
        # resolve (product criterion) and are skipped.
        for l2, r2 in rules[:-1]:
            if all(min(a, b) == 0 for a, b in zip(lhs, l2)):
                continue
            overlap = vec_lcm(lhs, l2)
            pending.append((apply_rule(overlap, lhs, rhs), apply_rule(overlap, l2, r2)))

    # Normalize right-hand sides against the final rule set; a rule's own
    # lhs can never divide its rhs (the rhs is strictly smaller in a
    # degree-compatible order), so reducing by the full set is safe.
    final = []
    for lhs, rhs in rules:
        if rhs is not None:
            rhs = _reduce_with(rhs, rules, width)
        final.append((lhs, rhs))
    final.sort(key=lambda lr: order_key(lr[0]))
    return CompletedSystem(
        width, tuple(final), tuple(lex_perm), True, steps, kernel_of(final)
    )


def _reduce_with(vec, rule_list, width):
    if vec is None:
        return None
    v = list(vec)
    while True:
        for lhs, rhs in rule_list:
            if divides(lhs, v):
                if rhs is None:
                    return None
                for i in range(width):
                    v[i] += rhs[i] - lhs[i]
                break
        else:
            return tuple(v)


def iter_vectors_up_to_degree(width, max_degree):
    """All non-negative vectors of total degree <= max_degree, degree order."""
    if width == 0:
        yield ()
        return

    def rec(prefix, remaining, slots_left):
        if slots_left == 1:
            yield tuple(prefix + [remaining])
            return
        for e in range(remaining + 1):
            yield from rec(prefix + [e], remaining - e, slots_left - 1)

    for d in range(max_degree + 1):
        yield from rec([], d, width)


def iter_normal_forms(system: CompletedSystem, max_degree):
    """Irreducible vectors of total degree <= max_degree, in degree order."""
    kern = system.kernel
    for vec in iter_vectors_up_to_degree(system.width, max_degree):
        if not kern.is_reducible(vec):
            yield vec


def all_normal_forms(system: CompletedSystem, cap=1_000_000):
    """Every normal form of a finite-language system; None when infinite.

    The ``cap`` guards the box enumeration; hitting it is treated like an
    infinite language.
    """
    box = system.finite_box()
    if box is None:
        return None
    total = 1
    for b in box:
        total *= b
        if total > cap:
            return None
    out = []
    kern = system.kernel

    def rec(prefix, i):
        if i == len(box):
            vec = tuple(prefix)
            if not kern.is_reducible(vec):
                out.append(vec)
            return
        for e in range(box[i]):
            rec(prefix + [e], i + 1)

    rec([], 0)
    out.sort(key=make_order_key(system.lex_perm))
    return out
