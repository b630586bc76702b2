"""Finitely presented commutative binoids.

A binoid here is a commutative monoid with identity 1 and an absorbing
element 0, given by generators and relations.  Relations are pairs of
monomials (as exponent maps) or a monomial equated with zero.  Generators
may be declared mutually inverse; the inverse name becomes an extra
internal slot and the pair contributes the relation ``g * g_inv = 1``.
Elements are stored as non-negative exponent vectors over the slots, the
absorbing element as ``None``; signed exponents appear only at the API
surface, where a normal form never carries both a generator and its
declared inverse.

All values are immutable after construction; operations are pure, so
presentations and elements can be shared freely across threads.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional

from . import completion
from .completion import CompletedSystem, iter_normal_forms
from .errors import (
    NotAHomomorphism,
    ParseError,
    UnknownGenerator,
    UntamedPresentation,
    ZeroArgument,
)

ZERO = "ZERO"
DEFAULT_DEGREE_BOUND = 12
SL_ENUM_CAP = 20  # slots; booleanization class enumeration is 2**slots


class BinoidPresentation:
    """Generators, declared inverse pairs, and monomial relations."""

    def __init__(
        self,
        gens: Iterable[str],
        relations: Iterable = (),
        inverses: Optional[dict] = None,
        completion_budget: int = completion.DEFAULT_BUDGET,
        name: Optional[str] = None,
    ):
        self.gens = tuple(gens)
        self.inverses = dict(inverses or {})
        self.completion_budget = completion_budget
        self.name = name

        if len(set(self.gens)) != len(self.gens):
            raise ParseError("duplicate generator names")
        for g, ginv in self.inverses.items():
            if g not in self.gens:
                raise UnknownGenerator(f"inverse declared for unknown generator {g!r}")
            if ginv in self.gens or ginv in self.inverses:
                raise ParseError(f"inverse name {ginv!r} clashes with a generator")
        if len(set(self.inverses.values())) != len(self.inverses):
            raise ParseError("duplicate inverse names")

        self.slots = self.gens + tuple(self.inverses[g] for g in self.gens if g in self.inverses)
        self.slot_index = {s: i for i, s in enumerate(self.slots)}
        self.width = len(self.slots)
        # paired_slot[i] = j when slots i and j are declared mutually inverse
        self.paired_slot = {}
        for g, ginv in self.inverses.items():
            i, j = self.slot_index[g], self.slot_index[ginv]
            self.paired_slot[i] = j
            self.paired_slot[j] = i

        self.relations = tuple(self._parse_relation(rel) for rel in relations)
        self._lex_perm = tuple(sorted(range(self.width), key=lambda i: self.slots[i]))
        self._system: Optional[CompletedSystem] = None
        self._nf_cache: dict = {}

    # -- construction helpers -------------------------------------------------

    def _parse_relation(self, rel):
        if isinstance(rel, dict):
            lhs, rhs = rel.get("lhs"), rel.get("rhs")
        else:
            lhs, rhs = rel
        lvec = self.vector_of(lhs)
        if lvec is None:
            raise ParseError("relation left-hand side cannot be ZERO")
        if rhs == ZERO or rhs is None:
            return (lvec, None)
        rvec = self.vector_of(rhs)
        return (lvec, rvec)

    def vector_of(self, word) -> Optional[tuple]:
        """Exponent vector of a word: an exp map, a generator list, or an Element.

        Exp maps may use inverse names and negative values on generators
        with a declared inverse.
        """
        if isinstance(word, Element):
            if word.presentation is not self:
                raise UnknownGenerator("element belongs to a different presentation")
            return word.vec
        if word == ZERO:
            return None
        vec = [0] * self.width
        if isinstance(word, str):
            word = [word]
        if isinstance(word, dict):
            items = word.items()
        else:
            items = ((g, 1) for g in word)
        for g, e in items:
            if g not in self.slot_index:
                raise UnknownGenerator(f"unknown generator {g!r}")
            e = int(e)
            i = self.slot_index[g]
            if e >= 0:
                vec[i] += e
            else:
                if i not in self.paired_slot:
                    raise UnknownGenerator(
                        f"negative exponent on {g!r}, which has no declared inverse"
                    )
                vec[self.paired_slot[i]] += -e
        return tuple(vec)

    # -- rewriting ------------------------------------------------------------

    @property
    def system(self) -> CompletedSystem:
        if self._system is None:
            eqs = list(self.relations)
            for g, ginv in self.inverses.items():
                pair = [0] * self.width
                pair[self.slot_index[g]] = 1
                pair[self.slot_index[ginv]] = 1
                eqs.append((tuple(pair), tuple([0] * self.width)))
            self._system = completion.complete(
                eqs, self.width, self._lex_perm, self.completion_budget
            )
        return self._system

    @property
    def untamed(self) -> bool:
        return not self.system.complete

    def _require_tame(self):
        if self.untamed:
            raise UntamedPresentation(
                f"completion budget {self.completion_budget} exhausted"
            )

    def nf(self, vec) -> Optional[tuple]:
        """Normal form of a raw exponent vector (None in, None out)."""
        self._require_tame()
        if vec is None:
            return None
        cached = self._nf_cache.get(vec)
        if cached is None and vec not in self._nf_cache:
            cached = self.system.reduce(vec)
            self._nf_cache[vec] = cached
        return cached

    def normal_form(self, word) -> "Element":
        return Element(self, self.nf(self.vector_of(word)))

    def element(self, word) -> "Element":
        return self.normal_form(word)

    def one(self) -> "Element":
        return Element(self, self.nf(tuple([0] * self.width)))

    def zero(self) -> "Element":
        return Element(self, None)

    @property
    def is_degenerate(self) -> bool:
        """True when 1 = 0, i.e. the binoid collapsed to a point."""
        return self.nf(tuple([0] * self.width)) is None

    def normal_forms_up_to(self, max_degree):
        """Normal-form vectors of total degree <= max_degree, degree order."""
        self._require_tame()
        return list(iter_normal_forms(self.system, max_degree))

    def all_normal_forms(self):
        """Every normal-form vector when the language is finite, else None."""
        self._require_tame()
        return completion.all_normal_forms(self.system)

    # -- display --------------------------------------------------------------

    def render_vec(self, vec) -> str:
        if vec is None:
            return "0"
        parts = []
        skip = set()
        for i, e in enumerate(vec):
            if i in skip or e == 0:
                continue
            j = self.paired_slot.get(i)
            if j is not None and self.slots[i] not in self.gens:
                # show inverse slots as negative powers of the primary
                parts.append(self._power(self.slots[j], -e + vec[j]))
                skip.add(j)
                continue
            if j is not None:
                net = e - vec[j]
                skip.add(j)
                if net == 0:
                    continue
                parts.append(self._power(self.slots[i], net))
            else:
                parts.append(self._power(self.slots[i], e))
        return "*".join(parts) if parts else "1"

    @staticmethod
    def _power(name, e):
        return name if e == 1 else f"{name}^{e}"

    def __repr__(self):
        rels = len(self.relations)
        label = self.name or ",".join(self.gens)
        return f"BinoidPresentation(<{label}>, {rels} relations)"

    # -- quotients ------------------------------------------------------------

    def rees_quotient(self, a) -> "BinoidPresentation":
        """Collapse the ideal generated by ``a`` to zero."""
        avec = self.nf(self.vector_of(a))
        if avec is None:
            raise ZeroArgument("rees quotient of the zero class")
        return BinoidPresentation(
            self.gens,
            list(self._relation_dicts()) + [(self._vec_map(avec), ZERO)],
            self.inverses,
            self.completion_budget,
        )

    def unitize(self, a) -> "BinoidPresentation":
        """Adjoin an inverse for ``a`` (the localization at ``a``).

        A single generator without a declared inverse gets a declared
        pairing; any other monomial gets a fresh generator ``<slug>_inv``
        with the relation ``a * a_inv = 1``.
        """
        avec = self.nf(self.vector_of(a))
        if avec is None:
            raise ZeroArgument("cannot invert the zero class")
        support = [i for i, e in enumerate(avec) if e]
        if len(support) == 1 and avec[support[0]] == 1:
            slot = support[0]
            gname = self.slots[slot]
            if slot in self.paired_slot:
                return self  # already invertible by declaration
            if gname in self.gens:
                inverses = dict(self.inverses)
                inverses[gname] = self._fresh_name(gname + "_inv")
                return BinoidPresentation(
                    self.gens,
                    self._relation_dicts(),
                    inverses,
                    self.completion_budget,
                )
        slug = "".join(
            f"{self.slots[i]}{avec[i] if avec[i] != 1 else ''}" for i in support
        )
        fresh = self._fresh_name((slug or "one") + "_inv")
        lhs = self._vec_map(avec)
        lhs[fresh] = 1
        return BinoidPresentation(
            self.gens + (fresh,),
            list(self._relation_dicts()) + [(lhs, {})],
            self.inverses,
            self.completion_budget,
        )

    def reduced(self) -> "BinoidPresentation":
        """Quotient by the ideal of nilpotent elements.

        Nilpotency depends only on the support of a monomial (its class in
        the booleanization), so the nilradical is generated by the minimal
        supports whose booleanized product is zero.  This makes the
        reduction exact; no degree bound is involved.
        """
        supports = [
            s
            for s in self.sl_zero_supports()
            if self.nf(tuple(1 if i in s else 0 for i in range(self.width))) is not None
        ]
        if not supports:
            return self
        extra = [({self.slots[i]: 1 for i in s}, ZERO) for s in supports]
        return BinoidPresentation(
            self.gens,
            list(self._relation_dicts()) + extra,
            self.inverses,
            self.completion_budget,
        )

    def booleanization(self) -> "BinoidPresentation":
        """Force every generator idempotent (the associated semilattice)."""
        extra = [({s: 2}, {s: 1}) for s in self.slots]
        return BinoidPresentation(
            self.gens,
            list(self._relation_dicts()) + extra,
            self.inverses,
            self.completion_budget,
        )

    def _relation_dicts(self):
        return [
            (self._vec_map(l), ZERO if r is None else self._vec_map(r))
            for l, r in self.relations
        ]

    def _vec_map(self, vec) -> dict:
        return {self.slots[i]: e for i, e in enumerate(vec) if e}

    def _fresh_name(self, base):
        name = base
        k = 2
        while name in self.slot_index:
            name = f"{base}{k}"
            k += 1
        return name

    # -- booleanization classes ----------------------------------------------

    @property
    def _bool_system(self) -> CompletedSystem:
        if not hasattr(self, "_bool_system_cache"):
            eqs = list(self.relations)
            for g, ginv in self.inverses.items():
                pair = [0] * self.width
                pair[self.slot_index[g]] = 1
                pair[self.slot_index[ginv]] = 1
                eqs.append((tuple(pair), tuple([0] * self.width)))
            for i in range(self.width):
                sq = [0] * self.width
                sq[i] = 2
                lin = [0] * self.width
                lin[i] = 1
                eqs.append((tuple(sq), tuple(lin)))
            self._bool_system_cache = completion.complete(
                eqs, self.width, self._lex_perm, self.completion_budget
            )
        return self._bool_system_cache

    def sl_class_of(self, vec) -> Optional[tuple]:
        """Booleanization class of a vector; None is the zero class."""
        self._require_tame()
        if not self._bool_system.complete:
            raise UntamedPresentation("booleanization completion exhausted budget")
        if vec is None:
            return None
        return self._bool_system.reduce(vec)

    def sl_classes(self):
        """Distinct nonzero booleanization classes (the zero class is implicit)."""
        if self.width > SL_ENUM_CAP:
            raise UntamedPresentation(
                f"booleanization enumeration needs 2^{self.width} subsets"
            )
        seen = {}
        for mask in range(1 << self.width):
            vec = tuple((mask >> i) & 1 for i in range(self.width))
            c = self.sl_class_of(vec)
            if c is not None and c not in seen:
                seen[c] = vec
        return sorted(seen, key=completion.make_order_key(self._lex_perm))

    def sl_element_count(self) -> int:
        """Number of elements of the booleanization, zero included."""
        if self.is_degenerate:
            return 1
        return len(self.sl_classes()) + 1

    def sl_zero_supports(self):
        """Minimal slot subsets whose product is nilpotent."""
        if self.width > SL_ENUM_CAP:
            raise UntamedPresentation(
                f"nilpotent support enumeration needs 2^{self.width} subsets"
            )
        minimal = []
        subsets = sorted(
            range(1, 1 << self.width), key=lambda m: (bin(m).count("1"), m)
        )
        for mask in subsets:
            s = frozenset(i for i in range(self.width) if (mask >> i) & 1)
            if any(m <= s for m in minimal):
                continue
            vec = tuple(1 if i in s else 0 for i in range(self.width))
            if self.sl_class_of(vec) is None:
                minimal.append(s)
        return minimal

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        doc = {"gens": list(self.gens)}
        if self.inverses:
            doc["inverses"] = dict(self.inverses)
        doc["relations"] = [
            {"lhs": lhs, "rhs": rhs} for lhs, rhs in self._relation_dicts()
        ]
        if self.name:
            doc["id"] = self.name
        return doc

    @classmethod
    def from_dict(cls, doc, completion_budget=completion.DEFAULT_BUDGET):
        if not isinstance(doc, dict) or "gens" not in doc:
            raise ParseError("binoid document needs a 'gens' list")
        try:
            return cls(
                doc["gens"],
                doc.get("relations", ()),
                doc.get("inverses"),
                completion_budget,
                doc.get("id"),
            )
        except (TypeError, ValueError) as exc:
            raise ParseError(f"malformed binoid document: {exc}") from exc

    @classmethod
    def from_json(cls, text, **kw):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(doc, **kw)


class Element:
    """A normalized element: the zero class or an exponent vector."""

    __slots__ = ("presentation", "vec")

    def __init__(self, presentation: BinoidPresentation, vec: Optional[tuple]):
        self.presentation = presentation
        self.vec = vec

    @property
    def is_zero(self) -> bool:
        return self.vec is None

    @property
    def is_one(self) -> bool:
        return self.vec is not None and not any(self.vec)

    def degree(self) -> Optional[int]:
        return None if self.vec is None else sum(self.vec)

    @property
    def exponents(self) -> dict:
        """Signed exponents per declared generator (inverse slots netted)."""
        if self.vec is None:
            raise ZeroArgument("the zero class has no exponent vector")
        pres = self.presentation
        out = {}
        for g in pres.gens:
            i = pres.slot_index[g]
            e = self.vec[i]
            j = pres.paired_slot.get(i)
            if j is not None:
                e -= self.vec[j]
            if e:
                out[g] = e
        return out

    def __mul__(self, other: "Element") -> "Element":
        if self.presentation is not other.presentation:
            raise UnknownGenerator("elements from different presentations")
        if self.vec is None or other.vec is None:
            return Element(self.presentation, None)
        return Element(
            self.presentation,
            self.presentation.nf(tuple(a + b for a, b in zip(self.vec, other.vec))),
        )

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative powers need an explicit inverse element")
        if self.vec is None:
            return self if n > 0 else self.presentation.one()
        return Element(
            self.presentation,
            self.presentation.nf(tuple(n * a for a in self.vec)),
        )

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.presentation is other.presentation
            and self.vec == other.vec
        )

    def __hash__(self):
        return hash((id(self.presentation), self.vec))

    def __str__(self):
        return self.presentation.render_vec(self.vec)

    def __repr__(self):
        return f"Element({self})"


class BinoidHom:
    """A binoid homomorphism given by generator images."""

    def __init__(
        self,
        source: BinoidPresentation,
        target: BinoidPresentation,
        images: dict,
        check: bool = True,
        inverse_search_bound: int = DEFAULT_DEGREE_BOUND,
    ):
        self.source = source
        self.target = target
        self._raw_images = dict(images)
        self.slot_images = self._build_slot_images(images, inverse_search_bound)
        if check:
            self.validate()

    def _build_slot_images(self, images, bound):
        slot_images = [None] * self.source.width
        given = set()
        for name, value in images.items():
            if name not in self.source.slot_index:
                raise UnknownGenerator(f"image given for unknown generator {name!r}")
            i = self.source.slot_index[name]
            vec = None if value == ZERO else self.target.nf(self.target.vector_of(value))
            slot_images[i] = ("zero", None) if value == ZERO else ("vec", vec)
            given.add(i)
        for g in self.source.gens:
            if self.source.slot_index[g] not in given:
                raise NotAHomomorphism(f"no image for generator {g!r}")
        # Inverse slots: explicit image, or search the target for one.
        for i, j in self.source.paired_slot.items():
            if i in given or self.source.slots[i] in self.source.gens:
                continue
            kind, primary = slot_images[j]
            if kind == "zero":
                raise NotAHomomorphism(
                    f"generator {self.source.slots[j]!r} is invertible but maps to zero"
                )
            inv = self._find_inverse(primary, bound)
            if inv is None:
                raise NotAHomomorphism(
                    f"no image found for inverse generator {self.source.slots[i]!r}"
                )
            slot_images[i] = ("vec", inv)
        return [
            None if kind == "zero" else vec for kind, vec in slot_images
        ]

    def _find_inverse(self, vec, bound):
        one = tuple([0] * self.target.width)
        if self.target.nf(vec) is None:
            return None
        for cand in self.target.normal_forms_up_to(bound):
            combined = tuple(a + b for a, b in zip(vec, cand))
            if self.target.nf(combined) == one:
                return cand
        return None

    def apply_vec(self, vec) -> Optional[tuple]:
        if vec is None:
            return None
        acc = [0] * self.target.width
        for i, e in enumerate(vec):
            if not e:
                continue
            img = self.slot_images[i]
            if img is None:
                return None
            for k, v in enumerate(img):
                acc[k] += e * v
        return self.target.nf(tuple(acc))

    def apply(self, elt: Element) -> Element:
        if elt.presentation is not self.source:
            raise UnknownGenerator("element does not belong to the source")
        return Element(self.target, self.apply_vec(elt.vec))

    def __call__(self, word) -> Element:
        if isinstance(word, Element):
            return self.apply(word)
        return Element(self.target, self.apply_vec(self.source.vector_of(word)))

    def validate(self):
        for lvec, rvec in self.source.relations:
            left = self.apply_vec(lvec)
            right = None if rvec is None else self.apply_vec(rvec)
            if left != right:
                raise NotAHomomorphism(
                    f"relation {self.source.render_vec(lvec)} = "
                    f"{self.source.render_vec(rvec)} is not respected"
                )
        one_s = tuple([0] * self.source.width)
        one_t = tuple([0] * self.target.width)
        for g, ginv in self.source.inverses.items():
            pair = list(one_s)
            pair[self.source.slot_index[g]] = 1
            pair[self.source.slot_index[ginv]] = 1
            if self.apply_vec(tuple(pair)) != self.target.nf(one_t):
                raise NotAHomomorphism(f"inverse pair {g!r} is not respected")

    def compose(self, inner: "BinoidHom") -> "BinoidHom":
        """self after inner (source of ``inner``, target of ``self``)."""
        if inner.target is not self.source:
            raise NotAHomomorphism("composition endpoints do not match")
        out = BinoidHom.__new__(BinoidHom)
        out.source = inner.source
        out.target = self.target
        out._raw_images = None
        out.slot_images = [
            None if vec is None else self.apply_vec(vec) for vec in inner.slot_images
        ]
        return out

    @classmethod
    def identity(cls, pres: BinoidPresentation) -> "BinoidHom":
        out = cls.__new__(cls)
        out.source = pres
        out.target = pres
        out._raw_images = None
        out.slot_images = []
        for i in range(pres.width):
            vec = [0] * pres.width
            vec[i] = 1
            out.slot_images.append(pres.nf(tuple(vec)))
        return out

    def same_map_as(self, other: "BinoidHom") -> bool:
        return (
            self.source is other.source
            and self.target is other.target
            and self.slot_images == other.slot_images
        )

    def to_dict(self) -> dict:
        images = {}
        for g in self.source.gens:
            vec = self.slot_images[self.source.slot_index[g]]
            images[g] = ZERO if vec is None else self.target._vec_map(vec)
        doc = {"images": images}
        if self.source.name:
            doc["from"] = self.source.name
        if self.target.name:
            doc["to"] = self.target.name
        return doc

    @classmethod
    def from_dict(cls, doc, source, target, **kw):
        if not isinstance(doc, dict) or "images" not in doc:
            raise ParseError("homomorphism document needs an 'images' map")
        if "from" in doc and source.name and doc["from"] != source.name:
            raise ParseError(f"homomorphism source {doc['from']!r} does not match")
        if "to" in doc and target.name and doc["to"] != target.name:
            raise ParseError(f"homomorphism target {doc['to']!r} does not match")
        return cls(source, target, doc["images"], **kw)
