"""Nerve chain complexes and integral homology."""

import json
from importlib import resources

from binoidtop.homology import (
    chain_complex,
    homology,
    homology_by_component,
    homology_of_complex,
)
from binoidtop.scheme import load_scheme, pi0_scheme
from binoidtop.stanley_reisner import SimplicialComplexData, sr_scheme


def example1():
    text = resources.files("binoidtop.data").joinpath("example1_scheme.json").read_text()
    return load_scheme(json.loads(text))


HOLLOW = SimplicialComplexData.from_facets(3, [[1, 2], [1, 3], [2, 3]])


def groups_str(groups):
    return [(h.rank, h.torsion) for h in groups]


class TestExample1:
    def test_homology_groups(self):
        assert groups_str(homology(example1())) == [(1, ()), (2, ()), (0, ())]

    def test_chain_dimensions_and_dd(self):
        data = chain_complex(example1())
        assert [data.dimension(p) for p in range(3)] == [3, 8, 4]
        assert data.check_dd_zero()

    def test_boundary_matrix_matches_reduced_form(self):
        # dropping the doubled intersection columns recovers the familiar
        # 3x4 matrix, up to the global face-orientation sign
        data = chain_complex(example1())
        keep = [
            j
            for j, (elem, _) in enumerate(data.bases[1])
            if sorted(elem) in ([1, 2], [2, 3])
        ]
        reduced = [[row[j] for j in keep] for row in data.boundaries[1]]
        expected = [
            [1, 1, 0, 0],
            [-1, -1, 1, 1],
            [0, 0, -1, -1],
        ]
        negated = [[-x for x in row] for row in reduced]
        assert reduced == expected or negated == expected

    def test_euler_characteristic(self):
        data = chain_complex(example1())
        groups = homology_of_complex(data)
        chi_chain = sum(
            (-1) ** p * data.dimension(p) for p in range(data.top_degree + 1)
        )
        chi_homology = sum((-1) ** p * h.rank for p, h in enumerate(groups))
        assert chi_chain == chi_homology


class TestSmallSchemes:
    def test_single_chart_concentrated_in_degree_zero(self):
        doc = {
            "charts": {
                "1": {
                    "gens": ["x", "y"],
                    "relations": [{"lhs": {"x": 2, "y": 1}, "rhs": {"x": 1}}],
                }
            }
        }
        scheme = load_scheme(doc)
        groups = homology(scheme)
        assert groups_str(groups) == [(3, ())]

    def test_two_charts_empty_intersection(self):
        doc = {
            "charts": {
                "1": {"gens": [], "relations": []},
                "2": {"gens": [], "relations": []},
            }
        }
        scheme = load_scheme(doc)
        data = chain_complex(scheme)
        assert data.top_degree == 0
        assert groups_str(homology_of_complex(data)) == [(2, ())]


class TestHollowTriangle:
    def test_homology(self):
        scheme = sr_scheme(HOLLOW)
        data = chain_complex(scheme)
        assert [data.dimension(p) for p in range(2)] == [6, 12]
        groups = homology_of_complex(data)
        assert groups_str(groups) == [(1, ()), (7, ())]

    def test_h0_matches_pi0(self):
        for cx in [
            HOLLOW,
            SimplicialComplexData.from_facets(3, [[1, 2], [3]]),
            SimplicialComplexData.from_facets(2, [[1, 2]]),
        ]:
            scheme = sr_scheme(cx)
            assert homology(scheme)[0].rank == pi0_scheme(scheme)[0]


class TestPerComponent:
    def test_example1_single_component(self):
        by_comp = homology_by_component(example1())
        assert len(by_comp) == 1
        (groups,) = by_comp.values()
        assert groups_str(groups) == [(1, ()), (2, ()), (0, ())]

    def test_disjoint_union_splits(self):
        cx = SimplicialComplexData.from_facets(3, [[1, 2], [3]])
        scheme = sr_scheme(cx)
        by_comp = homology_by_component(scheme)
        total_h0 = sum(g[0].rank for g in by_comp.values())
        assert total_h0 == homology(scheme)[0].rank
        for groups in by_comp.values():
            assert groups[0].rank == 1


def test_torsion_from_boundary():
    # a synthetic complex with a doubled boundary has torsion homology
    from binoidtop.homology import ChainComplexData

    data = ChainComplexData(
        bases=[["v"], ["e"]],
        boundaries=[[], [[2]]],
        component_of={},
    )
    groups = homology_of_complex(data)
    assert (groups[0].rank, groups[0].torsion) == (0, (2,))
    assert (groups[1].rank, groups[1].torsion) == (0, ())


def test_punctured_full_simplex_is_a_sphere():
    # the real punctured spectrum of the full simplex on n vertices is
    # homotopy equivalent to the (n-1)-sphere
    for n in (2, 3, 4):
        cx = SimplicialComplexData.from_facets(n, [list(range(1, n + 1))])
        groups = homology(sr_scheme(cx))
        expected = [(1, ())] + [(0, ())] * (n - 2) + [(1, ())]
        assert [(h.rank, h.torsion) for h in groups] == expected
