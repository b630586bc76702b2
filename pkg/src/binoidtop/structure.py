"""Idempotents, prime spectra, admissible decomposition, and unit groups.

Bounded searches come with a completeness certificate built from four
facts:

* A non-negative weight vector that is homogeneous on every binomial rule
  vanishes on every unit and every idempotent normal form (reductions
  between nonzero classes only use binomial rules), and the zero-weight
  slots cut out a sub-presentation closed under reduction, so both
  questions restrict there.
* If the normal-form language is finite, searches are exhaustive.
* Booleanization classes are support joins and each class contains at
  most one idempotent, so a found idempotent settles its whole class, and
  classes that do not use every slot restrict recursively.
* Powers of the all-generator product either cycle, locating the
  top class idempotent, or leave that class honestly unresolved.

Presentations where none of this applies keep ``complete=False`` and the
admissible decomposition refuses to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .completion import make_order_key
from .errors import (
    EnumerationCapExceeded,
    IncompleteIdempotents,
    InvalidBlock,
    UnitExpressionFailure,
)
from .linalg import lp_feasible_point, smith_normal_form
from .presentation import DEFAULT_DEGREE_BOUND, BinoidPresentation, Element

POWER_BUDGET = 64
SPEC_GENERATOR_CAP = 20


def _cache(pres: BinoidPresentation) -> dict:
    if not hasattr(pres, "_structure_cache"):
        pres._structure_cache = {}
    return pres._structure_cache


# ---------------------------------------------------------------------------
# weight certificate


def homogeneous_weights(pres: BinoidPresentation):
    """Support-maximal non-negative weights homogeneous on binomial rules.

    The feasible weights form a rational cone, so the union of supports of
    feasible points is attained by a sum of per-slot feasibility
    solutions; each of those is an exact micro-LP.
    """
    key = "weights"
    cache = _cache(pres)
    if key in cache:
        return cache[key]
    width = pres.width
    diffs = [
        tuple(l[i] - r[i] for i in range(width))
        for l, r in pres.system.binomial_rules
    ]
    if not diffs:
        total = tuple(Fraction(1) for _ in range(width))
        cache[key] = total
        return total
    total = [Fraction(0)] * width
    for i in range(width):
        if total[i] > 0:
            continue
        rows = [list(map(Fraction, d)) for d in diffs]
        rows.append([Fraction(1 if k == i else 0) for k in range(width)])
        rhs = [Fraction(0)] * len(diffs) + [Fraction(1)]
        point = lp_feasible_point(rows, rhs)
        if point is not None:
            total = [a + b for a, b in zip(total, point)]
    total = tuple(total)
    cache[key] = total
    return total


# ---------------------------------------------------------------------------
# unit slots


def _supported_normal_forms(pres, slots, max_degree):
    """Normal forms of degree <= max_degree supported on the given slots.

    Divisibility is monotone in the exponents, so a reducible prefix
    prunes its whole subtree.
    """
    slots = sorted(slots)
    kern = pres.system.kernel
    out = []

    def rec(vec, idx, remaining):
        if idx == len(slots):
            out.append(tuple(vec))
            return
        for e in range(remaining + 1):
            vec[slots[idx]] = e
            if e and kern.is_reducible(tuple(vec)):
                break  # larger exponents here stay reducible
            rec(vec, idx + 1, remaining - e)
        vec[slots[idx]] = 0

    if not kern.is_reducible(tuple([0] * pres.width)):
        rec([0] * pres.width, 0, max_degree)
    out.sort(key=make_order_key(pres._lex_perm))
    return out


def unit_witnesses(
    pres: BinoidPresentation,
    degree_bound=DEFAULT_DEGREE_BOUND,
    probe_slots=None,
):
    """Map slot index -> inverse witness vector, closed under consequence.

    Closure: slots occurring in a witness are invertible, and a binomial
    rule whose left side is unit-supported forces its right side to be
    unit-supported too; both directions yield constructive witnesses.
    Invertible slots have weight zero under every homogeneous weight
    vector, so the search may soundly probe only ``probe_slots``.
    """
    width = pres.width
    if pres.is_degenerate or width == 0:
        return {}
    one = tuple([0] * width)
    witnesses = {}
    for i, j in pres.paired_slot.items():
        w = [0] * width
        w[j] = 1
        witnesses[i] = pres.nf(tuple(w))
    probe = set(range(width)) if probe_slots is None else set(probe_slots)
    pending = sorted(probe - set(witnesses))
    if pending:
        candidates = _supported_normal_forms(pres, probe, degree_bound)
        for i in pending:
            e = [0] * width
            e[i] = 1
            e = tuple(e)
            for cand in candidates:
                if pres.nf(tuple(a + b for a, b in zip(e, cand))) == one:
                    witnesses[i] = cand
                    break
    changed = True
    while changed:
        changed = False
        for i, w in list(witnesses.items()):
            for h, eh in enumerate(w):
                if eh and h not in witnesses:
                    nw = list(w)
                    nw[h] -= 1
                    nw[i] += 1
                    witnesses[h] = pres.nf(tuple(nw))
                    changed = True
        for l, r in pres.system.binomial_rules:
            if all(e == 0 or i in witnesses for i, e in enumerate(l)):
                for h, eh in enumerate(r):
                    if eh and h not in witnesses:
                        inv_l = [0] * width
                        for g, eg in enumerate(l):
                            if eg:
                                wg = witnesses[g]
                                for k in range(width):
                                    inv_l[k] += eg * wg[k]
                        nw = list(r)
                        nw[h] -= 1
                        witnesses[h] = pres.nf(
                            tuple(a + b for a, b in zip(nw, inv_l))
                        )
                        changed = True
    return witnesses


# ---------------------------------------------------------------------------
# idempotents


@dataclass(frozen=True)
class IdempotentsResult:
    elements: tuple
    complete: bool
    unresolved: tuple = ()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _restriction(pres: BinoidPresentation, slot_set):
    """Sub-presentation on a reduction-closed slot subset."""
    names = {pres.slots[i] for i in slot_set}
    gens = [g for g in pres.gens if g in names]
    inverses = {g: inv for g, inv in pres.inverses.items() if g in names}
    relations = []
    for l, r in pres.system.rules:
        if all(e == 0 or i in slot_set for i, e in enumerate(l)):
            lhs = {pres.slots[i]: e for i, e in enumerate(l) if e}
            if r is None:
                relations.append((lhs, "ZERO"))
            else:
                rhs = {pres.slots[i]: e for i, e in enumerate(r) if e}
                if any(k not in names for k in rhs):
                    raise AssertionError("restriction slots not reduction-closed")
                relations.append((lhs, rhs))
    sub = BinoidPresentation(gens, relations, inverses, pres.completion_budget)
    return sub


def _embed_vec(sub: BinoidPresentation, pres: BinoidPresentation, vec):
    out = [0] * pres.width
    for i, e in enumerate(vec):
        out[pres.slot_index[sub.slots[i]]] = e
    return tuple(out)


def _restrict_vec(pres: BinoidPresentation, sub: BinoidPresentation, vec):
    out = [0] * sub.width
    for i, e in enumerate(vec):
        if e:
            out[sub.slot_index[pres.slots[i]]] = e
    return tuple(out)


def _power_cycle_idempotent(pres: BinoidPresentation, budget=POWER_BUDGET):
    """Idempotent among powers of the all-slot product, if they cycle."""
    s = pres.nf(tuple([1] * pres.width))
    if s is None:
        return ("absent", None)
    seen = {}
    powers = [None, s]
    v = s
    k = 1
    while k <= budget:
        if v in seen:
            start = seen[v]
            period = k - start
            m = period * ((max(start, 1) + period - 1) // period)
            e = powers[m]
            if pres.nf(tuple(2 * x for x in e)) == e:
                return ("found", e)
            return ("unknown", None)
        seen[v] = k
        v = pres.nf(tuple(a + b for a, b in zip(v, s)))
        if v is None:
            return ("absent", None)
        powers.append(v)
        k += 1
    return ("unknown", None)


def _idempotent_analysis(pres: BinoidPresentation, degree_bound, memo):
    """Nonzero idempotent normal forms plus per-class resolution status."""
    key = frozenset(pres.slots)
    if key in memo:
        return memo[key]
    if pres.is_degenerate:
        memo[key] = (set(), set())
        return memo[key]

    one = tuple([0] * pres.width)
    found = {one}
    weights = homogeneous_weights(pres)
    zero_slots = {i for i, w in enumerate(weights) if w == 0}
    if zero_slots < set(range(pres.width)):
        # idempotents are supported on zero-weight slots and that slice is
        # closed under reduction, so the whole question restricts
        sub = _restriction(pres, zero_slots)
        sub_found, sub_unresolved = _idempotent_analysis(sub, degree_bound, memo)
        found = {_embed_vec(sub, pres, v) for v in sub_found} | {one}
        unresolved = {_embed_vec(sub, pres, c) for c in sub_unresolved}
        memo[key] = (found, unresolved)
        return memo[key]

    witnesses = unit_witnesses(pres, degree_bound)
    if len(witnesses) == pres.width:
        # grouplike: a nonzero idempotent is a unit and hence equals 1
        memo[key] = (found, set())
        return memo[key]

    finite = pres.all_normal_forms()
    search_space = finite if finite is not None else pres.normal_forms_up_to(degree_bound)
    for v in search_space:
        if pres.nf(tuple(2 * e for e in v)) == v:
            found.add(v)

    unresolved = set()
    if finite is None:
        unit_class = pres.sl_class_of(one)
        for cls in pres.sl_classes():
            if cls == unit_class:
                continue  # idempotent of the unit class is 1
            if any(pres.sl_class_of(v) == cls for v in found):
                continue  # at most one idempotent per class
            slots = frozenset(
                i
                for i in range(pres.width)
                if pres.sl_class_of(
                    tuple(c + (1 if k == i else 0) for k, c in enumerate(cls))
                )
                == cls
            )
            if len(slots) < pres.width:
                sub = _restriction(pres, slots)
                sub_found, sub_unresolved = _idempotent_analysis(
                    sub, degree_bound, memo
                )
                for v in sub_found:
                    found.add(_embed_vec(sub, pres, v))
                sub_cls = sub.sl_class_of(_restrict_vec(pres, sub, cls))
                if sub_cls in sub_unresolved:
                    unresolved.add(cls)
                continue
            status, idem = _power_cycle_idempotent(pres)
            if status == "found":
                found.add(idem)
                if pres.sl_class_of(idem) != cls:
                    unresolved.add(cls)
                continue
            if status == "absent":
                continue
            unresolved.add(cls)

    memo[key] = (found, unresolved)
    return memo[key]


def idempotents(pres: BinoidPresentation, degree_bound=DEFAULT_DEGREE_BOUND) -> IdempotentsResult:
    """All idempotent elements, with a completeness certificate flag."""
    cache = _cache(pres)
    key = ("idempotents", degree_bound)
    if key in cache:
        return cache[key]
    pres._require_tame()
    if pres.is_degenerate:
        result = IdempotentsResult((Element(pres, None),), True)
        cache[key] = result
        return result
    found, unresolved = _idempotent_analysis(pres, degree_bound, {})
    order = make_order_key(pres._lex_perm)
    elements = [Element(pres, None)] + [
        Element(pres, v) for v in sorted(found, key=order)
    ]
    result = IdempotentsResult(
        tuple(elements),
        not unresolved,
        tuple(pres.render_vec(c) for c in sorted(unresolved, key=order)),
    )
    cache[key] = result
    return result


# ---------------------------------------------------------------------------
# prime spectrum


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    zero_gens: tuple

    def __contains__(self, gen):
        return gen in self.zero_gens

    def leq(self, other: "PrimeIdeal") -> bool:
        return set(self.zero_gens) <= set(other.zero_gens)

    def __str__(self):
        return "(" + ",".join(self.zero_gens) + ")" if self.zero_gens else "(0)"


@dataclass(frozen=True)
class SpecPoset:
    primes: tuple

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def leq(self, p, q):
        return p.leq(q)


def spec(pres: BinoidPresentation, generator_cap=SPEC_GENERATOR_CAP) -> SpecPoset:
    """All prime ideals, as subsets of generators killed by the
    characteristic map to {0,1}; ordered by inclusion."""
    pres._require_tame()
    unpaired = [g for g in pres.gens if pres.slot_index[g] not in pres.paired_slot]
    if len(unpaired) > generator_cap:
        raise EnumerationCapExceeded(
            f"{len(unpaired)} generators exceed the 2^n spectrum cap {generator_cap}"
        )

    def chi(vec, zeros):
        return 0 if any(e and pres.slots[i] in zeros for i, e in enumerate(vec)) else 1

    primes = []
    for mask in range(1 << len(unpaired)):
        zeros = {unpaired[i] for i in range(len(unpaired)) if (mask >> i) & 1}
        ok = True
        for l, r in pres.relations:
            if r is None:
                if chi(l, zeros) != 0:
                    ok = False
                    break
            elif chi(l, zeros) != chi(r, zeros):
                ok = False
                break
        if ok:
            primes.append(PrimeIdeal(tuple(sorted(zeros))))
    primes.sort(key=lambda p: (len(p.zero_gens), p.zero_gens))
    return SpecPoset(tuple(primes))


# ---------------------------------------------------------------------------
# separatedness


@dataclass(frozen=True)
class SeparationResult:
    separated: bool
    witness: Optional[tuple]
    complete: bool


def is_separated(pres: BinoidPresentation, degree_bound=DEFAULT_DEGREE_BOUND) -> SeparationResult:
    """Search for a pivotal pair (x nonzero, y != 1 with x*y = x)."""
    pres._require_tame()
    if pres.is_degenerate:
        return SeparationResult(True, None, True)
    finite = pres.all_normal_forms()
    space = finite if finite is not None else pres.normal_forms_up_to(degree_bound)
    one = tuple([0] * pres.width)
    for x in space:
        for y in space:
            if y == one:
                continue
            if pres.nf(tuple(a + b for a, b in zip(x, y))) == x:
                return SeparationResult(
                    False, (Element(pres, x), Element(pres, y)), True
                )
    if finite is not None:
        return SeparationResult(True, None, True)
    witnesses = unit_witnesses(pres, degree_bound)
    if len(witnesses) == pres.width:
        # grouplike: cancel to get y = 1
        return SeparationResult(True, None, True)
    weights = homogeneous_weights(pres)
    if all(w > 0 for w in weights):
        return SeparationResult(True, None, True)
    return SeparationResult(True, None, False)


# ---------------------------------------------------------------------------
# admissible decomposition


@dataclass(frozen=True)
class AdmBlock:
    r: tuple
    r_complement: tuple

    @property
    def label(self) -> str:
        inner = ",".join(str(e) for e in self.r if not e.is_zero)
        return f"({inner})" if inner else "(0)"

    def __str__(self):
        return self.label


def adm(pres: BinoidPresentation, degree_bound=DEFAULT_DEGREE_BOUND):
    """Prime decompositions of the (finite) idempotent sub-binoid."""
    cache = _cache(pres)
    key = ("adm", degree_bound)
    if key in cache:
        return cache[key]
    idem = idempotents(pres, degree_bound)
    if not idem.complete:
        raise IncompleteIdempotents(
            f"unresolved idempotent classes: {', '.join(idem.unresolved)}"
        )
    if pres.is_degenerate:
        cache[key] = []
        return []
    zero = Element(pres, None)
    others = [e for e in idem.elements if not e.is_zero and not e.is_one]
    all_idems = [e for e in idem.elements]
    blocks = []
    for mask in range(1 << len(others)):
        chosen = [others[i] for i in range(len(others)) if (mask >> i) & 1]
        r = {zero, *chosen}
        comp = [e for e in all_idems if e not in r]
        # r must be an ideal of Idem(M) and its complement a submonoid.
        if any((e * f) not in r for e in r for f in all_idems):
            continue
        if any((e * f) in r for e in comp for f in comp):
            continue
        blocks.append(
            AdmBlock(
                tuple(sorted(r, key=lambda e: (not e.is_zero, str(e)))),
                tuple(sorted(comp, key=lambda e: (not e.is_one, str(e)))),
            )
        )
    blocks.sort(key=lambda b: (len(b.r), tuple(str(e) for e in b.r)))
    cache[key] = blocks
    return blocks


def component(pres: BinoidPresentation, block: AdmBlock, degree_bound=DEFAULT_DEGREE_BOUND) -> BinoidPresentation:
    """The component binoid: block idempotents to 0, their complement to 1."""
    if block not in adm(pres, degree_bound):
        raise InvalidBlock(f"{block.label} is not an admissible block")
    extra = []
    for e in block.r:
        if not e.is_zero:
            extra.append((pres._vec_map(e.vec), "ZERO"))
    for e in block.r_complement:
        if not e.is_one:
            extra.append((pres._vec_map(e.vec), {}))
    return BinoidPresentation(
        pres.gens,
        list(pres._relation_dicts()) + extra,
        pres.inverses,
        pres.completion_budget,
    )


# ---------------------------------------------------------------------------
# unit group


@dataclass(frozen=True)
class AbelianGroupData:
    """Rank and invariant factors d1 | d2 | ... (each >= 2)."""

    rank: int
    torsion: tuple = ()

    def torsion_order(self) -> int:
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def n_signs(self) -> int:
        return self.rank + sum(1 for d in self.torsion if d % 2 == 0)

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"


@dataclass(frozen=True)
class UnitBasisVector:
    modulus: Optional[int]  # None for a free factor
    expr: tuple  # signed exponents over the unit slots
    name: str


class UnitGroupResult:
    """Unit group structure plus coordinate machinery for sign data."""

    def __init__(self, pres, group, complete, unit_slot_names, witnesses, basis, qt_rows):
        self.presentation = pres
        self.group = group
        self.complete = complete
        self.unit_slot_names = unit_slot_names
        self.witnesses = witnesses
        self.basis = basis
        self._qt_rows = qt_rows  # canonical coord i = qt_rows[i] . x_units
        self._slot_pos = {
            pres.slot_index[name]: pos for pos, name in enumerate(unit_slot_names)
        }

    @property
    def sign_basis(self):
        return tuple(
            i
            for i, b in enumerate(self.basis)
            if b.modulus is None or b.modulus % 2 == 0
        )

    def sign_basis_names(self):
        return tuple(self.basis[i].name for i in self.sign_basis)

    def coords(self, vec) -> tuple:
        """Canonical coordinates of a (signed) exponent vector of a unit."""
        x = [0] * len(self.unit_slot_names)
        for i, e in enumerate(vec):
            if not e:
                continue
            if i not in self._slot_pos:
                raise UnitExpressionFailure(
                    f"{self.presentation.slots[i]} is not a certified unit slot"
                )
            x[self._slot_pos[i]] = e
        out = []
        for b, row in zip(self.basis, self._qt_rows):
            y = sum(r * v for r, v in zip(row, x))
            out.append(y % b.modulus if b.modulus else y)
        return tuple(out)

    def sign_coords(self, vec) -> tuple:
        c = self.coords(vec)
        return tuple(c[i] % 2 for i in self.sign_basis)

    def gen_coords(self) -> dict:
        """Each unit slot expressed in the canonical basis."""
        out = {}
        for name in self.unit_slot_names:
            e = [0] * self.presentation.width
            e[self.presentation.slot_index[name]] = 1
            out[name] = self.coords(tuple(e))
        return out


def unit_group(pres: BinoidPresentation, degree_bound=DEFAULT_DEGREE_BOUND) -> UnitGroupResult:
    """Structure of the group of invertible elements.

    Units are exactly the monomials supported on invertible slots, so the
    group is the integer lattice on those slots modulo the unit-supported
    rule differences; Smith normal form yields rank, invariant factors,
    and the canonical basis.
    """
    cache = _cache(pres)
    key = ("units", degree_bound)
    if key in cache:
        return cache[key]
    pres._require_tame()
    if pres.is_degenerate or pres.width == 0:
        result = UnitGroupResult(
            pres, AbelianGroupData(0, ()), True, (), {}, (), ()
        )
        cache[key] = result
        return result

    weights = homogeneous_weights(pres)
    zero_slots = {i for i, w in enumerate(weights) if w == 0}
    if zero_slots < set(range(pres.width)):
        # units live in the zero-weight slice, which is reduction-closed,
        # so the unit group is the unit group of the restriction
        sub = _restriction(pres, zero_slots)
        inner = unit_group(sub, degree_bound)
        witness_elements = {
            name: Element(pres, _embed_vec(sub, pres, e.vec))
            for name, e in inner.witnesses.items()
        }
        result = UnitGroupResult(
            pres,
            inner.group,
            inner.complete,
            inner.unit_slot_names,
            witness_elements,
            inner.basis,
            inner._qt_rows,
        )
        cache[key] = result
        return result

    witnesses = unit_witnesses(pres, degree_bound)
    complete = (
        len(witnesses) == pres.width or pres.system.finite_box() is not None
    )

    u_slots = sorted(witnesses, key=lambda i: pres.slots[i])
    names = tuple(pres.slots[i] for i in u_slots)
    k = len(u_slots)
    if k == 0:
        result = UnitGroupResult(pres, AbelianGroupData(0, ()), complete, (), {}, (), ())
        cache[key] = result
        return result

    rows = []
    for l, r in pres.system.binomial_rules:
        involved = [i for i in range(pres.width) if l[i] or r[i]]
        if all(i in witnesses for i in involved):
            rows.append([l[i] - r[i] for i in u_slots])
    if not rows:
        rows = [[0] * k]
    snf = smith_normal_form(rows)
    diag = snf.diagonal
    basis = []
    qt_rows = []
    q_t = [[snf.q[j][i] for j in range(k)] for i in range(k)]
    for i in range(k):
        modulus = diag[i] if i < len(diag) and diag[i] else None
        if modulus == 1:
            continue
        expr = tuple(snf.qinv[i])
        name = _render_signed(names, expr)
        basis.append(UnitBasisVector(modulus, expr, name))
        qt_rows.append(q_t[i])
    rank = sum(1 for b in basis if b.modulus is None)
    torsion = tuple(b.modulus for b in basis if b.modulus)
    group = AbelianGroupData(rank, torsion)
    witness_elements = {
        pres.slots[i]: Element(pres, w) for i, w in witnesses.items()
    }
    result = UnitGroupResult(
        pres, group, complete, names, witness_elements, tuple(basis), tuple(qt_rows)
    )
    cache[key] = result
    return result


def _render_signed(names, expr) -> str:
    parts = []
    for name, e in zip(names, expr):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"
