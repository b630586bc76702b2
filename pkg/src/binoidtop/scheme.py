"""Binoid schemes as Cech-poset diagrams of presentations with gluing data.

A scheme document supplies the affine charts, the nonempty intersections
(indexed by sorted digit strings), and restriction homomorphisms along
covering relations.  Sections may share a binoid by id, intersections must
be downward closed, and all restriction squares have to commute.  On top
of the validated diagram this module runs the whole pipeline: the
realization as a diagram of discrete groupoids, condition checking plus
stretching, the groupoid colimit, and skeletonization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import MissingIntersection, NonFunctorial, NotAHomomorphism, ParseError
from .groupoid import (
    CechGroupoidDiagram,
    GroupoidFunctorData,
    GroupoidPresentation,
    GroupPresentationResult,
    check_colimit_conditions,
    colimit,
    skeletonize,
    stretch_until_conditions_hold,
)
from .presentation import DEFAULT_DEGREE_BOUND, BinoidHom, BinoidPresentation
from .pi0 import Pi0Set, induced_pi0_map, pi0_affine


def _parse_index_key(key: str, n: int) -> frozenset:
    if not key.isdigit() or len(set(key)) != len(key) or "".join(sorted(key)) != key:
        raise ParseError(f"intersection key {key!r} is not a sorted digit string")
    idx = frozenset(int(c) for c in key)
    if not idx or any(i < 1 or i > n for i in idx):
        raise ParseError(f"intersection key {key!r} is out of cover range 1..{n}")
    return idx


def _index_key(elem) -> str:
    return "".join(str(i) for i in sorted(elem))


class SchemeDiagram:
    """Validated Cech diagram of binoid presentations."""

    def __init__(self, cover_size, sections, restrictions):
        self.cover_size = cover_size
        self.sections = dict(sections)  # frozenset -> BinoidPresentation
        self.elements = sorted(self.sections, key=lambda e: (len(e), sorted(e)))
        self._validate_closure()
        self.restrictions = {}
        self._build_restrictions(restrictions)

    def _validate_closure(self):
        present = set(self.sections)
        for i in range(1, self.cover_size + 1):
            if frozenset([i]) not in present:
                raise MissingIntersection(f"chart {i} is missing")
        for elem in present:
            for i in sorted(elem):
                sub = elem - {i}
                if sub and sub not in present:
                    raise MissingIntersection(
                        f"intersection {_index_key(sub)} is required by "
                        f"{_index_key(elem)} but not declared"
                    )

    def _build_restrictions(self, given):
        for (small, large), hom in given.items():
            self.restrictions[(small, large)] = hom
        # identity for same-section covering pairs left implicit
        for small in self.elements:
            for large in self.elements:
                if not small < large or (small, large) in self.restrictions:
                    continue
                if self.sections[small] is self.sections[large] and self._is_covering(
                    small, large
                ):
                    self.restrictions[(small, large)] = BinoidHom.identity(
                        self.sections[small]
                    )
        # composites along chains; validated for path independence
        for large in sorted(self.elements, key=len):
            for small in sorted(self.elements, key=lambda e: -len(e)):
                if not small < large or (small, large) in self.restrictions:
                    continue
                candidates = []
                for mid in self.elements:
                    if (
                        small < mid < large
                        and (small, mid) in self.restrictions
                        and (mid, large) in self.restrictions
                    ):
                        candidates.append(
                            self.restrictions[(mid, large)].compose(
                                self.restrictions[(small, mid)]
                            )
                        )
                if not candidates:
                    raise MissingIntersection(
                        f"no restriction path {_index_key(small)} -> {_index_key(large)}"
                    )
                first = candidates[0]
                for other in candidates[1:]:
                    if not first.same_map_as(other):
                        raise NonFunctorial(
                            f"restrictions {_index_key(small)} -> {_index_key(large)} "
                            "disagree along different paths"
                        )
                self.restrictions[(small, large)] = first
        for (small, large), hom in self.restrictions.items():
            for mid in self.elements:
                if small < mid < large:
                    via = self.restrictions[(mid, large)].compose(
                        self.restrictions[(small, mid)]
                    )
                    if not hom.same_map_as(via):
                        raise NonFunctorial(
                            f"square {_index_key(small)} -> {_index_key(mid)} -> "
                            f"{_index_key(large)} does not commute"
                        )

    def _is_covering(self, small, large) -> bool:
        return small < large and not any(
            small < mid < large for mid in self.elements
        )

    def restriction(self, small, large) -> BinoidHom:
        return self.restrictions[(small, large)]

    def section(self, elem) -> BinoidPresentation:
        return self.sections[elem]


def load_scheme(doc, completion_budget=None) -> SchemeDiagram:
    """Parse and validate a scheme document (dict or JSON text)."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "charts" not in doc:
        raise ParseError("scheme document needs a 'charts' map")
    charts = doc["charts"]
    n = len(charts)
    if set(charts) != {str(i) for i in range(1, n + 1)}:
        raise ParseError("charts must be keyed '1'..'n'")

    registry = {}

    def resolve(value):
        if isinstance(value, str):
            if value not in registry:
                raise ParseError(f"unknown binoid id {value!r}")
            return registry[value]
        kw = {"completion_budget": completion_budget} if completion_budget else {}
        pres = BinoidPresentation.from_dict(value, **kw)
        if pres.name:
            if pres.name in registry:
                raise ParseError(f"duplicate binoid id {pres.name!r}")
            registry[pres.name] = pres
        return pres

    sections = {}
    for key in sorted(charts):
        sections[_parse_index_key(key, n)] = resolve(charts[key])
    for key in sorted(doc.get("intersections", {})):
        idx = _parse_index_key(key, n)
        if len(idx) < 2:
            raise ParseError(f"intersection key {key!r} names a single chart")
        sections[idx] = resolve(doc["intersections"][key])

    restrictions = {}
    for key in sorted(doc.get("restrictions", {})):
        if "<" not in key:
            raise ParseError(f"restriction key {key!r} must look like 'a<ab'")
        small_key, large_key = key.split("<", 1)
        small = _parse_index_key(small_key, n)
        large = _parse_index_key(large_key, n)
        if not small < large:
            raise ParseError(f"restriction key {key!r} is not a strict inclusion")
        if small not in sections or large not in sections:
            raise MissingIntersection(f"restriction {key!r} references absent sections")
        try:
            hom = BinoidHom.from_dict(
                doc["restrictions"][key], sections[small], sections[large]
            )
        except NotAHomomorphism as exc:
            raise NonFunctorial(f"restriction {key!r}: {exc}") from exc
        restrictions[(small, large)] = hom
    return SchemeDiagram(n, sections, restrictions)


# ---------------------------------------------------------------------------
# realization


def _point_object_label(pi0: Pi0Set, point) -> str:
    bi, bits = point
    return f"b{bi}|" + "".join("-" if b else "+" for b in bits)


def realization_functor(scheme: SchemeDiagram, degree_bound=DEFAULT_DEGREE_BOUND):
    """Discrete-groupoid diagram of the scheme's real points.

    Returns the Cech groupoid diagram together with the per-element Pi0Set
    data (shared by the homology pipeline).
    """
    pi0_data = {}
    values = {}
    for elem in scheme.elements:
        p = pi0_affine(scheme.section(elem), degree_bound)
        pi0_data[elem] = p
        values[elem] = GroupoidPresentation(
            [_point_object_label(p, pt) for pt in p.points()]
        )
    arrows = {}
    for small in scheme.elements:
        for large in scheme.elements:
            if small < large and scheme._is_covering(small, large):
                pmap = induced_pi0_map(
                    scheme.restriction(small, large),
                    source_pi0=pi0_data[large],
                    target_pi0=pi0_data[small],
                    degree_bound=degree_bound,
                )
                omap = {
                    _point_object_label(pi0_data[large], pt): _point_object_label(
                        pi0_data[small], pmap.apply(pt)
                    )
                    for pt in pi0_data[large].points()
                }
                arrows[(large, small)] = GroupoidFunctorData(
                    values[large], values[small], omap, {}, verify_relations=False
                )
    diagram = CechGroupoidDiagram(scheme.cover_size, values, arrows)
    return diagram, pi0_data


@dataclass(frozen=True)
class SchemePi1Result:
    groups: GroupPresentationResult
    colimit_presentation: GroupoidPresentation
    condition_report: tuple
    injections: dict

    @property
    def component_count(self) -> int:
        return self.groups.component_count


def fundamental_groupoid(
    scheme: SchemeDiagram, degree_bound=DEFAULT_DEGREE_BOUND
) -> SchemePi1Result:
    """Fundamental groupoid of the real realization, one group per component.

    Stretches the realization diagram until the colimit conditions hold,
    takes the groupoid colimit, and skeletonizes.
    """
    diagram, _ = realization_functor(scheme, degree_bound)
    stretch_until_conditions_hold(diagram)
    report = tuple(check_colimit_conditions(diagram))
    pres, injections = colimit(diagram)
    groups = skeletonize(pres)
    return SchemePi1Result(groups, pres, report, injections)


def pi0_scheme(scheme: SchemeDiagram, degree_bound=DEFAULT_DEGREE_BOUND):
    """Connected component count and labels of the real realization."""
    result = fundamental_groupoid(scheme, degree_bound)
    labels = tuple(c.representative for c in result.groups.components)
    return len(labels), labels


def point_component_classes(scheme: SchemeDiagram, degree_bound=DEFAULT_DEGREE_BOUND):
    """Set-level component class of every (element, point) pair.

    This is the object colimit without any groupoid bookkeeping; the
    partition agrees with the components of the fundamental groupoid and
    feeds the per-component homology splitting.
    """
    diagram, pi0_data = realization_functor(scheme, degree_bound)
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    def key_of(elem, pt):
        return (_index_key(elem), pt)

    for elem in scheme.elements:
        for pt in pi0_data[elem].points():
            parent[key_of(elem, pt)] = key_of(elem, pt)
    for (large, small), functor in list(diagram.arrows.items()):
        pl, ps = pi0_data[large], pi0_data[small]
        label_to_point = {_point_object_label(ps, pt): pt for pt in ps.points()}
        for pt in pl.points():
            image_label = functor.apply_object(_point_object_label(pl, pt))
            union(key_of(large, pt), key_of(small, label_to_point[image_label]))
    classes = {key: find(key) for key in parent}
    return classes, pi0_data
