"""Simplicial complexes and the direct groupoid model of their punctured spectra.

The monomial binoid of a complex kills minimal nonface products.  For the
real punctured spectrum, the fundamental groupoid is built directly from
combinatorics: objects are sign-decorated facets, generating isomorphisms
connect facets that agree at a shared vertex, and the only relations
equate the vertex-indexed paths of pairs agreeing at two or more shared
vertices.  This bypasses the generic scheme pipeline; the pipeline itself
remains available through :func:`sr_scheme` for cross-checking.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .errors import ParseError
from .groupoid import GroupoidPresentation, GroupPresentationResult, skeletonize
from .presentation import BinoidHom, BinoidPresentation
from .scheme import SchemeDiagram

OBJECT_CAP = 1_000_000


@dataclass(frozen=True)
class SimplicialComplexData:
    """Vertices 1..n and pairwise incomparable facets covering every vertex."""

    n: int
    facets: tuple

    @classmethod
    def from_facets(cls, n, facets) -> "SimplicialComplexData":
        cleaned = []
        sets = [frozenset(f) for f in facets]
        for f in sets:
            if not f:
                raise ParseError("empty facet")
            if any(v < 1 or v > n for v in f):
                raise ParseError(f"facet {sorted(f)} is out of vertex range 1..{n}")
        for f in sets:
            if any(f < g for g in sets):
                warnings.warn(f"redundant face {sorted(f)} dropped", stacklevel=2)
                continue
            if f not in cleaned:
                cleaned.append(f)
        covered = set().union(*cleaned) if cleaned else set()
        if covered != set(range(1, n + 1)):
            missing = sorted(set(range(1, n + 1)) - covered)
            raise ParseError(
                f"vertices {missing} are in no facet; declare them as singletons"
            )
        return cls(n, tuple(sorted(cleaned, key=sorted)))

    @classmethod
    def from_dict(cls, doc) -> "SimplicialComplexData":
        if not isinstance(doc, dict) or "n" not in doc or "facets" not in doc:
            raise ParseError("complex document needs 'n' and 'facets'")
        return cls.from_facets(int(doc["n"]), doc["facets"])

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [sorted(f) for f in self.facets]}

    def is_face(self, subset) -> bool:
        s = frozenset(subset)
        return bool(s) and any(s <= f for f in self.facets)

    def faces(self):
        out = set()
        for f in self.facets:
            members = sorted(f)
            for k in range(1, len(members) + 1):
                for combo in itertools.combinations(members, k):
                    out.add(frozenset(combo))
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def minimal_nonfaces(self):
        out = []
        for k in range(1, self.n + 1):
            for combo in itertools.combinations(range(1, self.n + 1), k):
                s = frozenset(combo)
                if self.is_face(s):
                    continue
                if any(m <= s for m in out):
                    continue
                out.append(s)
        return out

    def signed_facet_objects(self):
        total = sum(1 << len(f) for f in self.facets)
        if total > OBJECT_CAP:
            raise ParseError(f"{total} signed facet objects exceed the cap")
        out = []
        for f in self.facets:
            members = tuple(sorted(f))
            for mask in range(1 << len(members)):
                signs = {
                    v: "-" if (mask >> i) & 1 else "+" for i, v in enumerate(members)
                }
                out.append((f, signs))
        return out


def _facet_label(facet) -> str:
    return "".join(str(v) for v in sorted(facet))


def _object_label(facet, signs) -> str:
    return _facet_label(facet) + ":" + "".join(signs[v] for v in sorted(facet))


def sr_binoid(complex_data: SimplicialComplexData) -> BinoidPresentation:
    """Monomial binoid of the complex: nonface products are zero."""
    gens = [f"X{i}" for i in range(1, complex_data.n + 1)]
    relations = [
        ({f"X{i}": 1 for i in sorted(nonface)}, "ZERO")
        for nonface in complex_data.minimal_nonfaces()
    ]
    return BinoidPresentation(gens, relations)


def sr_groupoid(complex_data: SimplicialComplexData, full_relations=False) -> GroupoidPresentation:
    """Groupoid of sign-decorated facets.

    Default mode keeps a spanning tree of generators inside each
    (vertex, sign) class, so composites forced by the triangle relations
    are never materialized; the relations then come only from object pairs
    agreeing at two or more shared vertices, equating the per-vertex
    canonical paths.  ``full_relations`` instantiates every generator, all
    triangle relations, and the pairwise vertex-agreement relations, for
    cross-validation.
    """
    objects = complex_data.signed_facet_objects()
    labels = [_object_label(f, s) for f, s in objects]
    by_label = dict(zip(labels, objects))

    def class_members(vertex, sign):
        return sorted(
            lab
            for lab, (f, s) in zip(labels, objects)
            if vertex in f and s[vertex] == sign
        )

    def gen_name(vertex, a, b):
        lo, hi = sorted((a, b))
        return f"a{vertex}[{lo}|{hi}]"

    gens = []
    relations = []
    if full_relations:
        for vertex in range(1, complex_data.n + 1):
            for sign in "+-":
                members = class_members(vertex, sign)
                for a, b in itertools.combinations(members, 2):
                    gens.append((gen_name(vertex, a, b), a, b))
                for a, b, c in itertools.combinations(members, 3):
                    relations.append(
                        (
                            ((gen_name(vertex, a, b), 1), (gen_name(vertex, b, c), 1)),
                            ((gen_name(vertex, a, c), 1),),
                        )
                    )
        for (la, (fa, sa)), (lb, (fb, sb)) in itertools.combinations(
            zip(labels, objects), 2
        ):
            agree = sorted(
                v for v in fa & fb if sa[v] == sb[v]
            )
            for i, j in itertools.combinations(agree, 2):
                relations.append(
                    (
                        ((gen_name(i, la, lb), 1),),
                        ((gen_name(j, la, lb), 1),),
                    )
                )
        return GroupoidPresentation(labels, gens, relations)

    # reduced mode: star-shaped spanning tree per (vertex, sign) class
    tree_paths = {}  # (vertex, sign) -> {label: word from class root}
    for vertex in range(1, complex_data.n + 1):
        for sign in "+-":
            members = class_members(vertex, sign)
            if not members:
                continue
            root = members[0]
            paths = {root: ()}
            for other in members[1:]:
                name = gen_name(vertex, root, other)
                gens.append((name, root, other))
                paths[other] = ((name, 1),)
            tree_paths[(vertex, sign)] = paths

    def class_path(vertex, sign, a, b):
        paths = tree_paths[(vertex, sign)]
        ra = paths[a]
        rb = paths[b]
        word = tuple((n, -s) for n, s in reversed(ra)) + rb
        return word

    for (la, (fa, sa)), (lb, (fb, sb)) in itertools.combinations(
        zip(labels, objects), 2
    ):
        agree = sorted(v for v in fa & fb if sa[v] == sb[v])
        for i, j in itertools.combinations(agree, 2):
            relations.append(
                (
                    class_path(i, sa[i], la, lb),
                    class_path(j, sa[j], la, lb),
                )
            )
    return GroupoidPresentation(labels, gens, relations)


def sr_fundamental_groups(
    complex_data: SimplicialComplexData, full_relations=False
) -> GroupPresentationResult:
    """Fundamental groups of the real punctured spectrum, per component."""
    return skeletonize(sr_groupoid(complex_data, full_relations))


def face_subgroupoid(complex_data: SimplicialComplexData, face) -> GroupoidPresentation:
    """Sub-groupoid of sign-decorated facets containing a fixed face.

    Generators connect objects agreeing on the face; triangle relations
    keep at most one morphism per pair, so the result is equivalent to the
    discrete groupoid on the sign assignments of the face.
    """
    face = frozenset(face)
    objects = [
        (f, s)
        for f, s in complex_data.signed_facet_objects()
        if face <= f
    ]
    labels = [_object_label(f, s) for f, s in objects]
    gens = []
    relations = []

    def name(a, b):
        lo, hi = sorted((a, b))
        return f"p[{lo}|{hi}]"

    agreeing = {}
    for (la, (fa, sa)), (lb, (fb, sb)) in itertools.combinations(zip(labels, objects), 2):
        if all(sa[v] == sb[v] for v in face):
            gens.append((name(la, lb), *sorted((la, lb))))
            agreeing.setdefault(
                tuple(sa[v] for v in sorted(face)), []
            ).append((la, lb))
    for key, pairs in agreeing.items():
        members = sorted({x for pair in pairs for x in pair})
        for a, b, c in itertools.combinations(members, 3):
            relations.append(
                (
                    ((name(a, b), 1), (name(b, c), 1)),
                    ((name(a, c), 1),),
                )
            )
    return GroupoidPresentation(labels, gens, relations)


def geometric_realization_groupoid(complex_data: SimplicialComplexData) -> GroupoidPresentation:
    """Edge-path style groupoid of the geometric realization.

    Objects are facets; every shared vertex gives a generator between a
    facet pair and pairs sharing two or more vertices identify them.
    """
    labels = [_facet_label(f) for f in complex_data.facets]
    gens = []
    relations = []
    pairs = itertools.combinations(zip(labels, complex_data.facets), 2)
    for (la, fa), (lb, fb) in pairs:
        shared = sorted(fa & fb)
        for v in shared:
            gens.append((f"e{v}[{la}|{lb}]", la, lb))
        for i, j in itertools.combinations(shared, 2):
            relations.append(
                (
                    ((f"e{i}[{la}|{lb}]", 1),),
                    ((f"e{j}[{la}|{lb}]", 1),),
                )
            )
    return GroupoidPresentation(labels, gens, relations)


def sr_scheme(complex_data: SimplicialComplexData) -> SchemeDiagram:
    """Punctured-spectrum cover by the basic opens of single generators.

    Chart alpha is the monomial binoid localized at the alpha-product,
    present exactly when alpha is a face; restrictions are the inclusion
    homomorphisms.
    """
    nonfaces = complex_data.minimal_nonfaces()

    def localized(face):
        gens = [f"X{i}" for i in range(1, complex_data.n + 1)]
        inverses = {f"X{i}": f"X{i}_inv" for i in sorted(face)}
        relations = [
            ({f"X{i}": 1 for i in sorted(nf)}, "ZERO") for nf in nonfaces
        ]
        return BinoidPresentation(
            gens, relations, inverses, name=f"loc_{_facet_label(face)}"
        )

    sections = {}
    for face in complex_data.faces():
        sections[face] = localized(face)
    restrictions = {}
    for small in sections:
        for large in sections:
            if small < large and not any(
                small < mid < large for mid in sections
            ):
                src, tgt = sections[small], sections[large]
                images = {g: {g: 1} for g in src.gens}
                for g, ginv in src.inverses.items():
                    images[ginv] = {ginv: 1}
                restrictions[(small, large)] = BinoidHom(src, tgt, images, check=False)
    return SchemeDiagram(complex_data.n, sections, restrictions)
