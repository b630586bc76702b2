"""Sign-cube model of the real points of a binoid spectrum.

The real realization of a finitely generated binoid is homotopy discrete:
one block per admissible idempotent decomposition, each block a cube of
sign vectors indexed by the C2 content of the block's unit group (free
rank plus even invariant factors).  Binoid homomorphisms act
contravariantly: blocks route through idempotent preimages and each
block-to-block map is F2-linear on sign bits.

Sign bits use 0 for +1 and 1 for -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceeded, UnitExpressionFailure
from .presentation import DEFAULT_DEGREE_BOUND, BinoidHom, BinoidPresentation
from .structure import AbelianGroupData, _cache, adm, component, unit_group


@dataclass(frozen=True)
class Pi0Block:
    label: str
    n: int
    basis: tuple

    @property
    def size(self) -> int:
        return 1 << self.n


class Pi0Set:
    """Disjoint union of sign cubes, one per admissible block."""

    def __init__(self, presentation, blocks, internals):
        self.presentation = presentation
        self.blocks = tuple(blocks)
        # internals: per block (AdmBlock, component presentation, UnitGroupResult)
        self._internals = tuple(internals)

    @property
    def size(self) -> int:
        return sum(b.size for b in self.blocks)

    def points(self):
        out = []
        for bi, block in enumerate(self.blocks):
            for mask in range(block.size):
                out.append((bi, tuple((mask >> i) & 1 for i in range(block.n))))
        return out

    def point_label(self, point) -> str:
        bi, bits = point
        signs = ",".join("-" if b else "+" for b in bits)
        return f"{self.blocks[bi].label}:{signs}" if bits else f"{self.blocks[bi].label}:()"

    def block_of(self, admblock):
        for i, (blk, _, _) in enumerate(self._internals):
            if blk == admblock:
                return i
        raise KeyError(admblock)


def n_r(group: AbelianGroupData) -> int:
    """Number of C2 factors contributed by an abelian unit group."""
    return group.n_signs()


def pi0_affine(pres: BinoidPresentation, degree_bound=DEFAULT_DEGREE_BOUND) -> Pi0Set:
    """The block/sign-cube decomposition of the real points.

    Cached per presentation, so repeated calls share one Pi0Set instance.
    """
    cache = _cache(pres)
    key = ("pi0", degree_bound)
    if key in cache:
        return cache[key]
    blocks = []
    internals = []
    for blk in adm(pres, degree_bound):
        comp = component(pres, blk, degree_bound)
        ug = unit_group(comp, degree_bound)
        if not ug.complete:
            raise BoundExceeded(
                f"unit search incomplete for block {blk.label}"
            )
        blocks.append(Pi0Block(blk.label, ug.group.n_signs(), ug.sign_basis_names()))
        internals.append((blk, comp, ug))
    result = Pi0Set(pres, blocks, internals)
    cache[key] = result
    return result


class Pi0Map:
    """Contravariant point map between two Pi0Sets.

    ``routing[i]`` is the target block for source block ``i`` and
    ``matrices[i]`` the F2 matrix (rows indexed by the target basis) that
    carries source sign bits to target sign bits.
    """

    def __init__(self, source: Pi0Set, target: Pi0Set, routing, matrices):
        self.source = source
        self.target = target
        self.routing = tuple(routing)
        self.matrices = tuple(matrices)

    def apply(self, point):
        bi, bits = point
        tb = self.routing[bi]
        matrix = self.matrices[bi]
        out = tuple(sum(row[j] * bits[j] for j in range(len(bits))) % 2 for row in matrix)
        return (tb, out)

    def __call__(self, point):
        return self.apply(point)

    def compose(self, inner: "Pi0Map") -> "Pi0Map":
        """self after inner (source of inner, target of self)."""
        if inner.target is not self.source:
            raise ValueError("composition endpoints do not match")
        routing = []
        matrices = []
        for bi in range(len(inner.source.blocks)):
            mid = inner.routing[bi]
            routing.append(self.routing[mid])
            a = self.matrices[mid]
            b = inner.matrices[bi]
            rows = len(a)
            inner_dim = len(b)
            cols = len(b[0]) if b else inner.source.blocks[bi].n
            prod = tuple(
                tuple(
                    sum(a[i][k] * b[k][j] for k in range(inner_dim)) % 2
                    for j in range(cols)
                )
                for i in range(rows)
            )
            matrices.append(prod)
        return Pi0Map(inner.source, self.target, routing, matrices)


def induced_pi0_map(
    hom: BinoidHom,
    source_pi0: Pi0Set = None,
    target_pi0: Pi0Set = None,
    degree_bound=DEFAULT_DEGREE_BOUND,
) -> Pi0Map:
    """Point map Pi0(N) -> Pi0(M) induced by a homomorphism M -> N.

    Each block of N routes to the block of M cut out by the idempotent
    preimage; unit basis elements of the M component are pushed through
    the homomorphism and expressed in the N component's unit basis, and
    the mod-2 coordinates give the sign matrix.
    """
    m_pres, n_pres = hom.source, hom.target
    pi0_m = target_pi0 if target_pi0 is not None else pi0_affine(m_pres, degree_bound)
    pi0_n = source_pi0 if source_pi0 is not None else pi0_affine(n_pres, degree_bound)

    routing = []
    matrices = []
    for n_block, n_comp, n_units in pi0_n._internals:
        r_set = set(n_block.r)
        # idempotent preimage: which idempotents of M land in the block ideal
        m_idems = {e for blk, _, _ in pi0_m._internals for e in blk.r + blk.r_complement}
        pulled = frozenset(e for e in m_idems if hom.apply(e) in r_set)
        ti = None
        for i, (m_block, _, _) in enumerate(pi0_m._internals):
            if frozenset(m_block.r) == pulled:
                ti = i
                break
        if ti is None:
            raise UnitExpressionFailure(
                "idempotent preimage is not an admissible block"
            )
        m_block, m_comp, m_units = pi0_m._internals[ti]
        # Push each sign-basis element of the M component through the
        # homomorphism, reading images inside the N component.
        slot_images = [
            None if vec is None else n_comp.nf(vec) for vec in hom.slot_images
        ]
        rows = []
        for idx in m_units.sign_basis:
            expr = m_units.basis[idx].expr  # signed, over m unit slots
            acc = [0] * n_comp.width
            for name, coeff in zip(m_units.unit_slot_names, expr):
                if not coeff:
                    continue
                img = slot_images[m_comp.slot_index[name]]
                if img is None:
                    raise UnitExpressionFailure(
                        f"unit generator {name} maps to zero"
                    )
                for k, v in enumerate(img):
                    acc[k] += coeff * v
            rows.append(n_units.sign_coords(tuple(acc)))
        routing.append(ti)
        matrices.append(tuple(rows))
    return Pi0Map(pi0_n, pi0_m, routing, matrices)


def complex_component_count(pres: BinoidPresentation, degree_bound=DEFAULT_DEGREE_BOUND) -> int:
    """Number of connected components of the complex realization.

    Each admissible block contributes the order of the torsion subgroup of
    its unit group (free parts are connected over the complex numbers).
    """
    total = 0
    for blk in adm(pres, degree_bound):
        comp = component(pres, blk, degree_bound)
        ug = unit_group(comp, degree_bound)
        if not ug.complete:
            raise BoundExceeded(f"unit search incomplete for block {blk.label}")
        total += ug.group.torsion_order()
    return total


def real_component_count(pres: BinoidPresentation, degree_bound=DEFAULT_DEGREE_BOUND) -> int:
    """Number of connected components of the real realization."""
    return pi0_affine(pres, degree_bound).size
