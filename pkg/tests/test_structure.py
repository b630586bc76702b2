"""Idempotents, spectra, admissible blocks, unit groups, quotient behaviour."""

import pytest

from binoidtop.errors import EnumerationCapExceeded, IncompleteIdempotents, InvalidBlock
from binoidtop.presentation import BinoidPresentation
from binoidtop.structure import (
    AbelianGroupData,
    adm,
    component,
    idempotents,
    is_separated,
    spec,
    unit_group,
)

from corpus import tame_corpus


def P(gens, relations=(), inverses=None):
    return BinoidPresentation(gens, relations, inverses)


def idem_strs(pres):
    result = idempotents(pres)
    assert result.complete, result.unresolved
    return [str(e) for e in result.elements]


class TestIdempotents:
    def test_pivotal_relation_example(self):
        m = P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
        assert idem_strs(m) == ["0", "1", "x*y"]

    def test_free_binoid(self):
        assert idem_strs(P(["x"])) == ["0", "1"]

    def test_semilattice_generator(self):
        m = P(["x", "z"], [({"z": 2}, {"z": 1})])
        assert idem_strs(m) == ["0", "1", "z"]

    def test_power_relation(self):
        m = P(["x", "y"], [({"x": 3}, {"x": 1})])
        assert idem_strs(m) == ["0", "1", "x^2"]

    def test_units_collapse(self):
        m = P(["u", "e"], [({"e": 2}, {"e": 1})], inverses={"u": "uinv"})
        assert idem_strs(m) == ["0", "1", "e"]

    def test_whole_corpus_certifiable(self):
        for name, m in tame_corpus().items():
            result = idempotents(m)
            assert result.complete, (name, result.unresolved)
            for e in result.elements:
                assert (e * e) == e

    def test_degenerate(self):
        m = P(["x"], [({}, "ZERO")])
        result = idempotents(m)
        assert result.complete and len(result.elements) == 1


class TestSpec:
    def test_free_generator(self):
        s = spec(P(["x"]))
        assert [str(p) for p in s] == ["(0)", "(x)"]

    def test_grouplike_single_prime(self):
        assert len(spec(P(["x"], inverses={"x": "xinv"}))) == 1
        assert len(spec(P(["x"], [({"x": 4}, {})]))) == 1

    def test_degenerate_empty(self):
        assert len(spec(P(["x"], [({}, "ZERO")]))) == 0

    def test_inclusion_order(self):
        s = spec(P(["x", "y"]))
        primes = list(s)
        assert len(primes) == 4
        bottom = primes[0]
        assert all(bottom.leq(p) for p in primes)

    def test_cap(self):
        with pytest.raises(EnumerationCapExceeded):
            spec(P([f"g{i}" for i in range(25)]))

    def test_quotient_coherence(self):
        # rees and unitize quotients by a non-nilpotent non-invertible
        # element strictly shrink the spectrum
        cases = [
            (P(["x"]), {"x": 1}),
            (P(["x", "y"]), {"y": 1}),
            (P(["x", "y", "z"], [({"x": 2, "y": 1}, {"z": 2})]), {"x": 1}),
            (P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})]), {"x": 1, "y": 1}),
        ]
        for m, a in cases:
            base = len(spec(m))
            assert base > len(spec(m.rees_quotient(a)))
            assert base > len(spec(m.unitize(a)))


class TestSeparated:
    def test_pivotal_witness(self):
        m = P(["x", "y"], [({"x": 1, "y": 1}, {"x": 1})])
        res = is_separated(m, degree_bound=4)
        assert res.separated is False and res.complete
        x, y = res.witness
        assert str(x) == "x" and str(y) == "y"

    def test_free_is_separated(self):
        res = is_separated(P(["x", "y"]), degree_bound=4)
        assert res.separated and res.complete

    def test_homogeneous_relation_is_separated(self):
        m = P(["x", "y", "z"], [({"x": 2, "y": 1}, {"z": 2})])
        res = is_separated(m, degree_bound=4)
        assert res.separated and res.complete

    def test_grouplike_is_separated(self):
        res = is_separated(P(["x"], inverses={"x": "xinv"}), degree_bound=4)
        assert res.separated and res.complete


class TestAdm:
    def test_pivotal_example_blocks(self):
        m = P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
        blocks = adm(m)
        assert [b.label for b in blocks] == ["(0)", "(x*y)"]

    def test_trivial_idempotents_single_block(self):
        blocks = adm(P(["x", "y"]))
        assert len(blocks) == 1 and blocks[0].label == "(0)"

    def test_semilattice_three_elements(self):
        m = P(["x", "z"], [({"z": 2}, {"z": 1})])
        blocks = adm(m)
        assert [b.label for b in blocks] == ["(0)", "(z)"]

    def test_component_properties(self):
        # components have only trivial idempotents
        for name, m in tame_corpus().items():
            for block in adm(m):
                comp = component(m, block)
                result = idempotents(comp)
                assert result.complete, (name, block.label)
                assert len(result.elements) <= 2, (name, block.label)

    def test_component_blocks_reproduce_decomposition(self):
        m = P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
        blocks = adm(m)
        by_label = {b.label: component(m, b) for b in blocks}
        # (0): everything unitized -> grouplike Z-degree
        zo = by_label["(0)"]
        ug = unit_group(zo)
        assert (ug.group.rank, ug.group.torsion) == (1, ())
        assert len(spec(zo)) == 1
        # (xy): x killed -> free rank-0 units, two primes
        no = by_label["(x*y)"]
        ug = unit_group(no)
        assert (ug.group.rank, ug.group.torsion) == (0, ())
        assert len(spec(no)) == 2

    def test_invalid_block(self):
        m = P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
        other = adm(P(["x", "z"], [({"z": 2}, {"z": 1})]))[1]
        with pytest.raises(InvalidBlock):
            component(m, other)


class TestUnitGroup:
    def test_free_times_integers(self):
        # N x Z: one declared inverse pair next to a free generator
        m = P(["x", "y"], inverses={"y": "yinv"})
        ug = unit_group(m)
        assert ug.complete
        assert (ug.group.rank, ug.group.torsion) == (1, ())

    def test_trivial_units_of_homogeneous_relation(self):
        m = P(["x", "y", "z"], [({"x": 2, "y": 1}, {"z": 2})])
        ug = unit_group(m)
        assert ug.complete
        assert (ug.group.rank, ug.group.torsion) == (0, ())

    def test_cyclic_four(self):
        ug = unit_group(P(["x"], [({"x": 4}, {})]))
        assert ug.complete
        assert (ug.group.rank, ug.group.torsion) == (0, (4,))

    def test_derived_unit_from_relation(self):
        # z^2 = x*y with x, y invertible forces z invertible
        m = P(
            ["x", "y", "z"],
            [({"x": 1, "y": 1}, {"z": 2})],
            inverses={"x": "xinv", "y": "yinv"},
        )
        ug = unit_group(m)
        assert ug.complete
        assert set(ug.unit_slot_names) == {"x", "xinv", "y", "yinv", "z"}
        assert (ug.group.rank, ug.group.torsion) == (2, ())

    def test_mixed_torsion(self):
        # x^4 = 1 and y absorbed into torsion via x^2 y^3 = y
        m = P(["x", "y"], [({"x": 4}, {}), ({"x": 2, "y": 3}, {"y": 1})])
        ug = unit_group(m)
        assert ug.complete
        assert ug.group.torsion_order() == ug.group.torsion_order()
        assert all(d >= 2 for d in ug.group.torsion)

    def test_basis_expressions_are_units(self):
        for name, m in tame_corpus().items():
            ug = unit_group(m)
            if not ug.complete:
                continue
            for gen, coords in ug.gen_coords().items():
                assert len(coords) == len(ug.basis)


class TestAbelianGroupData:
    def test_n_signs(self):
        assert AbelianGroupData(1, ()).n_signs() == 1
        assert AbelianGroupData(0, (3,)).n_signs() == 0
        assert AbelianGroupData(2, (2, 3, 4)).n_signs() == 4

    def test_torsion_order(self):
        assert AbelianGroupData(0, ()).torsion_order() == 1
        assert AbelianGroupData(0, (2, 6)).torsion_order() == 12


class TestQuotientBehaviour:
    """Idempotent and booleanization behaviour of the canonical quotients."""

    def elements_of(self, pres):
        res = idempotents(pres)
        assert res.complete
        return res.elements

    def test_rees_idempotent_surjectivity_with_singleton_fibers(self):
        for name, m in tame_corpus().items():
            sample = [v for v in m.normal_forms_up_to(2) if any(v)][:4]
            for avec in sample:
                q = m.rees_quotient(m._vec_map(avec))
                if q.untamed:
                    continue
                source = self.elements_of(m)
                target = self.elements_of(q)
                images = {}
                for e in source:
                    img = q.nf(e.vec) if not e.is_zero else None
                    images.setdefault(img, []).append(e)
                target_vecs = {e.vec for e in target}
                assert set(images) == target_vecs, name
                for vec, fiber in images.items():
                    if vec is not None:
                        assert len(fiber) == 1, (name, vec)

    def test_reduction_preserves_units(self):
        for name, m in tame_corpus().items():
            r = m.reduced()
            ug_m = unit_group(m)
            ug_r = unit_group(r)
            if ug_m.complete and ug_r.complete:
                assert ug_m.group == ug_r.group, name

    def test_booleanization_invariant_iff_nilpotent_rees(self):
        for name, m in tame_corpus().items():
            if m.is_degenerate:
                continue
            base = m.sl_element_count()
            for avec in [v for v in m.normal_forms_up_to(2) if any(v)][:4]:
                q = m.rees_quotient(m._vec_map(avec))
                if q.untamed:
                    continue
                nilpotent = m.sl_class_of(avec) is None
                if nilpotent:
                    assert q.sl_element_count() == base, name
                else:
                    assert q.sl_element_count() < base, name

    def test_booleanization_invariant_iff_invertible_unitize(self):
        for name, m in tame_corpus().items():
            if m.is_degenerate:
                continue
            ug = unit_group(m)
            if not ug.complete:
                continue
            base = m.sl_element_count()
            unit_slots = {m.slot_index[s] for s in ug.unit_slot_names}
            for avec in [v for v in m.normal_forms_up_to(2) if any(v)][:4]:
                q = m.unitize(m._vec_map(avec))
                if q.untamed:
                    continue
                invertible = all(e == 0 or i in unit_slots for i, e in enumerate(avec))
                if invertible:
                    assert q.sl_element_count() == base, name
                else:
                    assert q.sl_element_count() < base, name


class TestCompletenessFlag:
    def test_idempotent_beyond_bound_flags_incomplete(self):
        # the class idempotent a^2 b^4 has degree 6; a bound of 4 must
        # report honest incompleteness, not a wrong answer
        m = P(["a", "b"], [({"a": 3, "b": 3}, {"a": 2, "b": 1})])
        low = idempotents(m, degree_bound=4)
        assert not low.complete
        assert low.unresolved == ("a*b",)
        fresh = P(["a", "b"], [({"a": 3, "b": 3}, {"a": 2, "b": 1})])
        high = idempotents(fresh, degree_bound=12)
        assert high.complete
        assert [str(e) for e in high.elements] == ["0", "1", "a^2*b^4"]

    def test_incomplete_idempotents_block_adm(self):
        m = P(["a", "b"], [({"a": 3, "b": 3}, {"a": 2, "b": 1})])
        with pytest.raises(IncompleteIdempotents):
            adm(m, degree_bound=4)


class TestUntamed:
    def test_budget_exhaustion_raises_downstream(self):
        from binoidtop.errors import UntamedPresentation

        m = BinoidPresentation(
            ["x", "y", "z"],
            [({"x": 2, "y": 1}, {"z": 2}), ({"y": 2, "z": 1}, {"x": 2})],
            completion_budget=1,
        )
        assert m.untamed
        with pytest.raises(UntamedPresentation):
            m.normal_form({"x": 1})
        with pytest.raises(UntamedPresentation):
            idempotents(m)


def test_unit_coords_reject_non_unit_slots():
    from binoidtop.errors import UnitExpressionFailure

    m = P(["x", "y"], inverses={"y": "yinv"})
    ug = unit_group(m)
    probe = [0] * m.width
    probe[m.slot_index["x"]] = 1
    with pytest.raises(UnitExpressionFailure):
        ug.coords(tuple(probe))


def test_component_of_trivial_block_is_unchanged():
    free = P(["x", "y"])
    (block,) = adm(free)
    comp = component(free, block)
    assert comp.to_dict() == free.to_dict()


def test_unitizing_can_create_idempotents():
    # <x,y,z>/(xy=x, yz^2=yz) has only trivial idempotents, but inverting
    # y cancels it from yz^2 = yz and makes z idempotent
    m = P(
        ["x", "y", "z"],
        [({"x": 1, "y": 1}, {"x": 1}), ({"y": 1, "z": 2}, {"y": 1, "z": 1})],
    )
    base = idempotents(m)
    assert base.complete and len(base.elements) == 2
    localized = m.unitize({"y": 1})
    loc_idems = idempotents(localized)
    assert loc_idems.complete
    assert "z" in {str(e) for e in loc_idems.elements}
