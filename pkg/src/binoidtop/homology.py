"""Integral homology of the real realization via the nerve chain complex.

Every section of a scheme has homotopy-discrete real points, so the
covering spectral sequence collapses onto the nerve chain complex with
component coefficients: the p-chains are generated by (nerve p-simplex,
component of that section) pairs and the boundary alternates over facets
through the induced point maps.  Homology comes out of Smith normal form
over arbitrary-precision integers.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from .linalg import smith_normal_form
from .presentation import DEFAULT_DEGREE_BOUND
from .pi0 import induced_pi0_map
from .scheme import SchemeDiagram, _index_key, point_component_classes
from .structure import AbelianGroupData


@dataclass
class ChainComplexData:
    """Bases and boundary matrices of the nerve complex.

    ``bases[p]`` lists ``(index set, point)`` pairs; ``boundaries[p]`` is
    the integer matrix of d_p with rows indexed by ``bases[p-1]``.
    """

    bases: list
    boundaries: list
    component_of: dict

    @property
    def top_degree(self) -> int:
        return len(self.bases) - 1

    def dimension(self, p) -> int:
        if 0 <= p <= self.top_degree:
            return len(self.bases[p])
        return 0

    def boundary_matrix(self, p):
        return self.boundaries[p]

    def check_dd_zero(self) -> bool:
        for p in range(2, self.top_degree + 1):
            d_p = self.boundaries[p]
            d_prev = self.boundaries[p - 1]
            if not d_p or not d_prev:
                continue
            cols = len(d_p[0])
            rows = len(d_prev)
            for j in range(cols):
                for i in range(rows):
                    total = sum(
                        d_prev[i][k] * d_p[k][j] for k in range(len(d_p))
                    )
                    if total != 0:
                        return False
        return True

    def boundary_csv(self, p) -> str:
        out = io.StringIO()
        matrix = self.boundaries[p]
        for row in matrix:
            out.write(",".join(str(x) for x in row))
            out.write("\n")
        return out.getvalue()


def chain_complex(scheme: SchemeDiagram, degree_bound=DEFAULT_DEGREE_BOUND) -> ChainComplexData:
    """Nerve chain complex with component coefficients."""
    classes, pi0_data = point_component_classes(scheme, degree_bound)

    by_degree = {}
    for elem in scheme.elements:
        by_degree.setdefault(len(elem) - 1, []).append(elem)
    top = max(by_degree) if by_degree else 0

    bases = []
    index = []
    for p in range(top + 1):
        basis = []
        for elem in sorted(by_degree.get(p, []), key=lambda e: sorted(e)):
            for pt in pi0_data[elem].points():
                basis.append((elem, pt))
        bases.append(basis)
        index.append({key: i for i, key in enumerate(basis)})

    maps = {}

    def point_map(large, small):
        if (large, small) not in maps:
            maps[(large, small)] = induced_pi0_map(
                scheme.restriction(small, large),
                source_pi0=pi0_data[large],
                target_pi0=pi0_data[small],
                degree_bound=degree_bound,
            )
        return maps[(large, small)]

    boundaries = [[]]
    for p in range(1, top + 1):
        rows = len(bases[p - 1])
        cols = len(bases[p])
        matrix = [[0] * cols for _ in range(rows)]
        for j, (elem, pt) in enumerate(bases[p]):
            vertices = sorted(elem)
            for i, v in enumerate(vertices):
                face = elem - {v}
                image = point_map(elem, face).apply(pt)
                matrix[index[p - 1][(face, image)]][j] += (-1) ** i
        boundaries.append(matrix)

    component_of = {
        key: classes[(_index_key(key[0]), key[1])]
        for p in range(top + 1)
        for key in bases[p]
    }
    return ChainComplexData(bases, boundaries, component_of)


def _rank(matrix) -> int:
    if not matrix or not matrix[0]:
        return 0
    return smith_normal_form(matrix).rank


def homology_of_complex(data: ChainComplexData):
    """H_p for 0 <= p <= top degree, as rank plus invariant factors."""
    out = []
    for p in range(data.top_degree + 1):
        dim = data.dimension(p)
        rank_p = _rank(data.boundaries[p]) if p >= 1 else 0
        rank_next = 0
        torsion = ()
        if p + 1 <= data.top_degree:
            next_matrix = data.boundaries[p + 1]
            if next_matrix and next_matrix[0]:
                snf = smith_normal_form(next_matrix)
                rank_next = snf.rank
                torsion = tuple(snf.invariant_factors())
        out.append(AbelianGroupData(dim - rank_p - rank_next, torsion))
    return out


def homology(scheme: SchemeDiagram, degree_bound=DEFAULT_DEGREE_BOUND):
    """Integral homology groups of the real realization."""
    return homology_of_complex(chain_complex(scheme, degree_bound))


def homology_by_component(scheme: SchemeDiagram, degree_bound=DEFAULT_DEGREE_BOUND):
    """Homology split along the connected components of the realization.

    The boundary maps preserve components, so the complex block-splits
    over the set-level component classes.
    """
    data = chain_complex(scheme, degree_bound)
    components = sorted(set(data.component_of.values()))
    out = {}
    for comp in components:
        bases = []
        index = []
        for p in range(data.top_degree + 1):
            basis = [key for key in data.bases[p] if data.component_of[key] == comp]
            bases.append(basis)
            index.append({key: i for i, key in enumerate(basis)})
        boundaries = [[]]
        for p in range(1, data.top_degree + 1):
            rows = len(bases[p - 1])
            cols = len(bases[p])
            matrix = [[0] * cols for _ in range(rows)]
            for j, key in enumerate(bases[p]):
                full_j = data.bases[p].index(key)
                for full_i, row in enumerate(data.boundaries[p]):
                    if row[full_j]:
                        matrix[index[p - 1][data.bases[p - 1][full_i]]][j] = row[full_j]
            boundaries.append(matrix)
        out[comp] = homology_of_complex(
            ChainComplexData(bases, boundaries, data.component_of)
        )
    return out
