"""Normal forms, quotients, and homomorphisms of binoid presentations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binoidtop.errors import (
    NotAHomomorphism,
    ParseError,
    UnknownGenerator,
    ZeroArgument,
)
from binoidtop.presentation import BinoidHom, BinoidPresentation

from corpus import tame_corpus


def P(gens, relations=(), inverses=None):
    return BinoidPresentation(gens, relations, inverses)


class TestNormalForm:
    def test_chain_reduction(self):
        # x^3 y^2 -> x (x^2 y) y -> x^2 y -> x
        m = P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
        assert str(m.normal_form({"x": 3, "y": 2})) == "x"

    def test_empty_word_is_identity(self):
        for m in tame_corpus().values():
            assert m.normal_form({}).is_one or m.is_degenerate

    def test_absorbing_element(self):
        m = P(["x", "y"], [({"x": 1, "y": 1}, "ZERO")])
        assert m.normal_form({"x": 2, "y": 1}).is_zero

    def test_unknown_generator(self):
        m = P(["x"])
        with pytest.raises(UnknownGenerator):
            m.normal_form({"t": 1})

    def test_idempotent_normalization(self):
        for m in tame_corpus().values():
            for vec in m.normal_forms_up_to(4):
                elt = m.normal_form(m._vec_map(vec))
                again = m.normal_form({} if elt.is_zero else elt.exponents)
                if not elt.is_zero:
                    assert again == elt

    def test_zero_absorbs_under_multiplication(self):
        m = P(["x", "y"], [({"x": 1, "y": 1}, "ZERO")])
        zero = m.zero()
        for vec in m.normal_forms_up_to(3):
            assert (m.normal_form(m._vec_map(vec)) * zero).is_zero

    def test_congruent_words_share_normal_form(self):
        # one relation application on either side of a context
        for m in tame_corpus().values():
            for lvec, rvec in m.relations:
                for ctx in m.normal_forms_up_to(2):
                    left = m.nf(tuple(a + b for a, b in zip(lvec, ctx)))
                    if rvec is None:
                        assert left is None
                    else:
                        right = m.nf(tuple(a + b for a, b in zip(rvec, ctx)))
                        assert left == right

    def test_signed_exponents_for_declared_inverses(self):
        m = P(["x"], inverses={"x": "xinv"})
        elt = m.normal_form({"x": -2})
        assert elt.exponents == {"x": -2}
        assert str(elt) == "x^-2"
        assert (elt * m.normal_form({"x": 3})).exponents == {"x": 1}


class TestQuotients:
    def test_rees_collapses_relation(self):
        m = P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
        q = m.rees_quotient({"x": 1})
        # isomorphic to the free binoid on y
        assert q.normal_form({"x": 1}).is_zero
        nfs = q.normal_forms_up_to(5)
        assert nfs == [tuple([0, b]) for b in range(6)]

    def test_rees_of_free_generator(self):
        m = P(["x"])
        q = m.rees_quotient({"x": 1})
        assert q.normal_forms_up_to(4) == [(0,)]

    def test_rees_substitutes_into_relations(self):
        m = P(["x", "y", "z"], [({"x": 2, "y": 1}, {"z": 2})])
        q = m.rees_quotient({"x": 1})
        assert q.normal_form({"z": 2}).is_zero
        assert not q.normal_form({"y": 3}).is_zero

    def test_rees_zero_argument(self):
        m = P(["x"], [({"x": 2}, "ZERO")])
        with pytest.raises(ZeroArgument):
            m.rees_quotient({"x": 2})

    def test_unitize_makes_grouplike_integers(self):
        from binoidtop.structure import unit_group

        m = P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
        q = m.unitize({"x": 1, "y": 1})
        ug = unit_group(q)
        assert ug.complete
        assert (ug.group.rank, ug.group.torsion) == (1, ())
        # every generator became invertible
        assert len(ug.unit_slot_names) == q.width

    def test_unitize_by_identity_is_noop_up_to_iso(self):
        m = P(["x"])
        q = m.unitize({})
        assert [sum(v) for v in q.normal_forms_up_to(3)] == [
            sum(v) for v in m.normal_forms_up_to(3)
        ]

    def test_unitize_single_generator_declares_inverse(self):
        from binoidtop.structure import unit_group

        m = P(["x", "y", "z"], [({"x": 1, "y": 1}, {"z": 2})])
        q = m.unitize({"y": 1})
        assert "y" in q.inverses
        ug = unit_group(q)
        assert ug.complete
        assert ug.group.rank == 1 and ug.group.torsion == ()

    def test_reduced_kills_nilpotents_only(self):
        m = P(["x"], [({"x": 3}, "ZERO")])
        r = m.reduced()
        assert r.normal_form({"x": 1}).is_zero
        assert r.normal_forms_up_to(3) == [(0,)]

        free = P(["x", "y"])
        assert free.reduced() is free

        mixed = P(["x", "y"], [({"x": 2}, "ZERO")])
        r = mixed.reduced()
        assert r.normal_form({"x": 1}).is_zero
        assert not r.normal_form({"y": 4}).is_zero

    def test_reduced_is_idempotent(self):
        for m in tame_corpus().values():
            r = m.reduced()
            assert r.reduced() is r
            # no nonzero nilpotents survive
            for s in r.sl_zero_supports():
                vec = tuple(1 if i in s else 0 for i in range(r.width))
                assert r.nf(vec) is None

    def test_booleanization_counts(self):
        free = P(["x"])
        assert free.booleanization().sl_element_count() == 3  # 0, 1, x

        grouplike = P(["x"], inverses={"x": "xinv"})
        assert grouplike.booleanization().sl_element_count() == 2  # 0, 1

        zero_div = P(["x", "y"], [({"x": 1, "y": 1}, "ZERO")])
        assert zero_div.booleanization().sl_element_count() == 4  # 0,1,x,y


class TestSerialization:
    def test_round_trip(self):
        for m in tame_corpus().values():
            doc = m.to_dict()
            again = BinoidPresentation.from_dict(doc)
            assert again.to_dict() == doc
            assert again.normal_forms_up_to(4) == m.normal_forms_up_to(4)

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            BinoidPresentation.from_dict({"relations": []})
        with pytest.raises(ParseError):
            BinoidPresentation(["x", "x"])
        with pytest.raises(ParseError):
            BinoidPresentation(["x"], inverses={"x": "x"})


class TestHomomorphisms:
    def test_validates_relations(self):
        m = P(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
        n = P(["t"])
        with pytest.raises(NotAHomomorphism):
            BinoidHom(m, n, {"x": {"t": 1}, "y": {"t": 1}})
        # x -> 0, y -> anything works: 0 = 0
        BinoidHom(m, n, {"x": "ZERO", "y": {"t": 1}})

    def test_zero_preserved(self):
        m = P(["x", "y"], [({"x": 1, "y": 1}, "ZERO")])
        n = P(["t", "u"], [({"t": 1, "u": 1}, "ZERO")])
        f = BinoidHom(m, n, {"x": {"t": 1}, "y": {"u": 1}})
        assert f({"x": 1, "y": 1}).is_zero

    def test_composition_and_identity(self):
        m = P(["x"])
        n = P(["t"], inverses={"t": "tinv"})
        f = BinoidHom(m, n, {"x": {"t": 2}})
        ident = BinoidHom.identity(n)
        assert ident.compose(f).same_map_as(f)
        assert f({"x": 3}).exponents == {"t": 6}

    def test_inverse_image_derived_by_search(self):
        m = P(["x"], inverses={"x": "xinv"})
        n = P(["t"], [({"t": 4}, {})])
        f = BinoidHom(m, n, {"x": {"t": 1}})
        assert f({"x": -1}).exponents == {"t": 3}

    def test_invertible_to_zero_rejected(self):
        m = P(["x"], inverses={"x": "xinv"})
        n = P(["t"], [({"t": 1}, "ZERO")])
        with pytest.raises(NotAHomomorphism):
            BinoidHom(m, n, {"x": {"t": 1}})


@settings(max_examples=60, deadline=None)
@given(
    exps=st.lists(st.integers(min_value=0, max_value=4), min_size=2, max_size=2),
    other=st.lists(st.integers(min_value=0, max_value=4), min_size=2, max_size=2),
)
def test_multiplication_matches_vector_addition(exps, other):
    m = BinoidPresentation(["x", "y"], [({"x": 2, "y": 1}, {"x": 1})])
    a = m.normal_form({"x": exps[0], "y": exps[1]})
    b = m.normal_form({"x": other[0], "y": other[1]})
    direct = m.normal_form({"x": exps[0] + other[0], "y": exps[1] + other[1]})
    assert a * b == direct
