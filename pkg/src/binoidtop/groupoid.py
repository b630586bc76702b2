"""Finite groupoid presentations, poset colimits, and skeletonization.

A groupoid presentation lists objects, generating isomorphisms, and
relations (pairs of parallel signed words).  Diagrams indexed by the Cech
poset of a cover support three operations: the injectivity conditions
under which the 1-colimit computes the homotopy colimit, the stretching
construction that repairs failed conditions by duplicating target objects
along connecting isomorphisms, and the colimit itself (with the merge
simplification: objects joined by an isomorphism are identified, a
spanning forest of isomorphisms becomes identities, the rest become
automorphism generators).

Words are tuples of ``(name, +1|-1)`` letters, composed left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConditionCheckFailed, NonCommutingDiagram, ParseError

TIETZE_BUDGET = 10_000


def invert_word(word):
    return tuple((g, -s) for g, s in reversed(word))


def free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word):
    word = free_reduce(word)
    while len(word) >= 2 and word[0][0] == word[-1][0] and word[0][1] == -word[-1][1]:
        word = word[1:-1]
    return word


@dataclass(frozen=True)
class GenIso:
    name: str
    src: str
    tgt: str


class GroupoidPresentation:
    """Objects, generating isomorphisms, and parallel-word relations."""

    def __init__(self, objects, gen_isos=(), relations=()):
        self.objects = tuple(objects)
        self.gen_isos = tuple(
            g if isinstance(g, GenIso) else GenIso(*g) for g in gen_isos
        )
        self.relations = tuple(
            (tuple(lhs), tuple(rhs)) for lhs, rhs in relations
        )
        if len(set(self.objects)) != len(self.objects):
            raise ParseError("duplicate object labels")
        names = [g.name for g in self.gen_isos]
        if len(set(names)) != len(names):
            raise ParseError("duplicate generator names")
        self._by_name = {g.name: g for g in self.gen_isos}
        objset = set(self.objects)
        for g in self.gen_isos:
            if g.src not in objset or g.tgt not in objset:
                raise ParseError(f"generator {g.name} has unknown endpoints")
        for lhs, rhs in self.relations:
            le = self.word_endpoints(lhs)
            re_ = self.word_endpoints(rhs)
            if le is not None and re_ is not None and le != re_:
                raise ParseError("relation sides have different endpoints")

    def gen(self, name) -> GenIso:
        return self._by_name[name]

    def word_endpoints(self, word) -> Optional[tuple]:
        """(source, target) of a signed word; None for the empty word."""
        if not word:
            return None
        points = None
        for name, sign in word:
            g = self._by_name[name]
            s, t = (g.src, g.tgt) if sign == 1 else (g.tgt, g.src)
            if points is None:
                points = (s, t)
            else:
                if points[1] != s:
                    raise ParseError(f"word is not composable at {name}")
                points = (points[0], t)
        return points

    def to_dot(self) -> str:
        lines = ["digraph groupoid {"]
        for o in self.objects:
            lines.append(f'  "obj:{o}";')
        for g in self.gen_isos:
            lines.append(f'  "obj:{g.src}" -> "obj:{g.tgt}" [label="iso:{g.name}"];')
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self):
        return (
            f"GroupoidPresentation({len(self.objects)} objects, "
            f"{len(self.gen_isos)} isos, {len(self.relations)} relations)"
        )


class GroupoidFunctorData:
    """A functor between presentations: object map plus generator words."""

    def __init__(self, source, target, object_map, gen_map=None, verify_relations=True):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.gen_map = {g: tuple(w) for g, w in (gen_map or {}).items()}
        for o in source.objects:
            if o not in self.object_map or self.object_map[o] not in target.objects:
                raise ParseError(f"object {o!r} has no valid image")
        for g in source.gen_isos:
            word = self.gen_map.get(g.name, ())
            end = target.word_endpoints(word)
            expected = (self.object_map[g.src], self.object_map[g.tgt])
            if end is None:
                if expected[0] != expected[1]:
                    raise ParseError(
                        f"generator {g.name} maps to an identity with unequal endpoints"
                    )
            elif end != expected:
                raise ParseError(f"generator {g.name} image has wrong endpoints")
        self.relations_verified = True
        if verify_relations:
            self.relations_verified = all(
                free_reduce(self.apply_word(l) + invert_word(self.apply_word(r))) == ()
                for l, r in source.relations
            )
            # a non-freely-trivial image may still follow from target
            # relations; callers treat the flag as an assumption marker

    def apply_word(self, word):
        out = []
        for name, sign in word:
            img = self.gen_map.get(name, ())
            out.extend(img if sign == 1 else invert_word(img))
        return free_reduce(tuple(out))

    def apply_object(self, obj):
        return self.object_map[obj]

    def compose(self, inner: "GroupoidFunctorData") -> "GroupoidFunctorData":
        """self after inner."""
        omap = {o: self.object_map[v] for o, v in inner.object_map.items()}
        gmap = {
            g.name: self.apply_word(inner.gen_map.get(g.name, ()))
            for g in inner.source.gen_isos
        }
        return GroupoidFunctorData(
            inner.source, self.target, omap, gmap, verify_relations=False
        )

    def is_injective_on_objects(self) -> bool:
        vals = list(self.object_map.values())
        return len(set(vals)) == len(vals)

    def same_as(self, other: "GroupoidFunctorData") -> bool:
        if self.object_map != other.object_map:
            return False
        names = {g.name for g in self.source.gen_isos}
        return all(
            free_reduce(self.gen_map.get(n, ())) == free_reduce(other.gen_map.get(n, ()))
            for n in names
        )

    @classmethod
    def identity(cls, pres):
        return cls(
            pres,
            pres,
            {o: o for o in pres.objects},
            {g.name: ((g.name, 1),) for g in pres.gen_isos},
            verify_relations=False,
        )


def stretch(functor: GroupoidFunctorData):
    """Make a functor injective on objects by duplicating target objects.

    Every colliding source object beyond the first (in label order) gets a
    fresh target object ``<base>#k`` and a connecting isomorphism
    ``st:<base>#k`` from the base object.  Returns the adjusted functor
    together with the enlarged target presentation.
    """
    hits = {}
    for o in sorted(functor.source.objects):
        hits.setdefault(functor.object_map[o], []).append(o)
    new_objects = list(functor.target.objects)
    new_gens = list(functor.target.gen_isos)
    object_map = dict(functor.object_map)
    gen_map = {g: w for g, w in functor.gen_map.items()}
    conn_of = {}
    for base in sorted(hits):
        group = hits[base]
        for k, obj in enumerate(group[1:], start=1):
            fresh = f"{base}#{k}"
            conn = f"st:{fresh}"
            new_objects.append(fresh)
            new_gens.append(GenIso(conn, base, fresh))
            object_map[obj] = fresh
            conn_of[obj] = conn
    target = GroupoidPresentation(
        new_objects, new_gens, functor.target.relations
    )
    for g in functor.source.gen_isos:
        word = list(gen_map.get(g.name, ()))
        if g.src in conn_of:
            word = [(conn_of[g.src], -1)] + word
        if g.tgt in conn_of:
            word = word + [(conn_of[g.tgt], 1)]
        gen_map[g.name] = free_reduce(tuple(word))
    out = GroupoidFunctorData(
        functor.source, target, object_map, gen_map, verify_relations=False
    )
    return out, target


# ---------------------------------------------------------------------------
# Cech-poset diagrams


def _elem_key(elem) -> str:
    return "".join(str(i) for i in sorted(elem))


class CechGroupoidDiagram:
    """Contravariant groupoid diagram over the nonempty-intersection poset.

    ``values`` maps index sets (frozensets of cover indices) to groupoid
    presentations; ``arrows`` maps ``(finer, coarser)`` pairs of comparable
    index sets to functors.  Arrows are stored for every comparable pair
    and validated to commute.
    """

    def __init__(self, cover_size, values, covering_arrows):
        self.cover_size = cover_size
        self.values = dict(values)
        self.elements = sorted(self.values, key=lambda e: (len(e), sorted(e)))
        self.arrows = {}
        self._build_arrows(covering_arrows)

    def _build_arrows(self, covering_arrows):
        for (src, dst), f in covering_arrows.items():
            self.arrows[(src, dst)] = f
        # fill in composites, checking path independence; within one source,
        # larger destinations first so intermediate composites exist
        for src in sorted(self.elements, key=len):
            for dst in sorted(self.elements, key=lambda d: -len(d)):
                if not dst < src:
                    continue
                if (src, dst) in self.arrows:
                    continue
                candidates = []
                for mid in self.elements:
                    if dst < mid < src and (src, mid) in self.arrows and (mid, dst) in self.arrows:
                        candidates.append(
                            self.arrows[(mid, dst)].compose(self.arrows[(src, mid)])
                        )
                if candidates:
                    first = candidates[0]
                    for other in candidates[1:]:
                        if not first.same_as(other):
                            raise NonCommutingDiagram(
                                f"paths {_elem_key(src)} -> {_elem_key(dst)} disagree"
                            )
                    self.arrows[(src, dst)] = first
        self.validate_commutativity()

    def validate_commutativity(self):
        for (src, dst), f in self.arrows.items():
            for mid in self.elements:
                if dst < mid < src:
                    via = self.arrows[(mid, dst)].compose(self.arrows[(src, mid)])
                    if not f.same_as(via):
                        raise NonCommutingDiagram(
                            f"square {_elem_key(src)} -> {_elem_key(mid)} -> "
                            f"{_elem_key(dst)} does not commute"
                        )

    def arrow(self, src, dst) -> GroupoidFunctorData:
        return self.arrows[(src, dst)]


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the lexicographically least label as representative
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@dataclass(frozen=True)
class ConditionCheck:
    index_set: tuple
    fixed_subset: tuple
    target: tuple
    passes: bool
    collisions: tuple


def required_condition_pairs(n):
    """(I, J) pairs whose colimit-to-value maps must be object-injective."""
    pairs = []
    seen = set()
    for k in (n - 1, n - 2):
        if k >= 1:
            key = (frozenset(range(1, k + 1)), frozenset())
            if key not in seen:
                seen.add(key)
                pairs.append(key)
    for k in range(1, n - 1):
        tail = list(range(k + 2, n + 1))
        for mask in range(1 << len(tail)):
            j = frozenset(tail[i] for i in range(len(tail)) if (mask >> i) & 1)
            if len(j) < n - k - 2:
                continue
            key = (frozenset(range(1, k + 1)) | j, j)
            if key not in seen:
                seen.add(key)
                pairs.append(key)
    full = frozenset(range(1, n + 1))
    return sorted(
        pairs, key=lambda ij: (-(len(full - ij[0])), sorted(full - ij[0]), sorted(ij[1]))
    )


def _member_elements(diagram, i_set, j_set):
    full = frozenset(range(1, diagram.cover_size + 1))
    target = full - i_set
    j_comp = full - j_set
    members = [
        e for e in diagram.elements if target < e and e <= j_comp
    ]
    return target, members


def _colimit_classes(diagram, members):
    """Union-find of the object sets of a subdiagram."""
    uf = _UnionFind()
    for e in members:
        for o in diagram.values[e].objects:
            uf.add((_elem_key(e), o))
    for a in members:
        for b in members:
            if b < a:
                f = diagram.arrow(a, b)
                for o in diagram.values[a].objects:
                    uf.union((_elem_key(a), o), (_elem_key(b), f.apply_object(o)))
    return uf


def check_colimit_conditions(diagram: CechGroupoidDiagram):
    """Report of every required (I, J) injectivity condition."""
    report = []
    for i_set, j_set in required_condition_pairs(diagram.cover_size):
        target, members = _member_elements(diagram, i_set, j_set)
        if target not in diagram.values:
            report.append(
                ConditionCheck(
                    tuple(sorted(i_set)), tuple(sorted(j_set)), tuple(sorted(target)), True, ()
                )
            )
            continue
        uf = _colimit_classes(diagram, members)
        image = {}
        collisions = {}
        for e in members:
            f = diagram.arrow(e, target)
            for o in diagram.values[e].objects:
                cls = uf.find((_elem_key(e), o))
                hit = f.apply_object(o)
                if cls in image:
                    continue
                image[cls] = hit
        hits = {}
        for cls, obj in image.items():
            hits.setdefault(obj, []).append(cls)
        for obj, classes in hits.items():
            if len(classes) > 1:
                collisions[obj] = len(classes)
        report.append(
            ConditionCheck(
                tuple(sorted(i_set)),
                tuple(sorted(j_set)),
                tuple(sorted(target)),
                not collisions,
                tuple(sorted(collisions.items())),
            )
        )
    return report


def _stretch_diagram_target(diagram: CechGroupoidDiagram, target):
    """Stretch one value against the colimit of all its strict supersets.

    With every source participating in the colimit, the redirect of each
    arrow into the target is determined by its colimit class, so the
    adjusted diagram commutes strictly by construction.
    """
    members = [e for e in diagram.elements if e > target]
    if target not in diagram.values or not members:
        return False
    uf = _colimit_classes(diagram, members)

    # canonical map on classes
    image = {}
    for e in members:
        f = diagram.arrow(e, target)
        for o in diagram.values[e].objects:
            cls = uf.find((_elem_key(e), o))
            if cls not in image:
                image[cls] = f.apply_object(o)
            elif image[cls] != f.apply_object(o):
                raise NonCommutingDiagram("canonical map is not class-constant")
    hits = {}
    for cls in sorted(image):
        hits.setdefault(image[cls], []).append(cls)
    collided = {obj: classes for obj, classes in hits.items() if len(classes) > 1}
    if not collided:
        return False

    # enlarge the target value
    value = diagram.values[target]
    new_objects = list(value.objects)
    new_gens = list(value.gen_isos)
    redirect = {}  # class -> (new object, connecting generator)
    for obj in sorted(collided):
        for k, cls in enumerate(collided[obj][1:], start=1):
            fresh = f"{obj}#{k}"
            conn = f"st:{fresh}"
            new_objects.append(fresh)
            new_gens.append(GenIso(conn, obj, fresh))
            redirect[cls] = (fresh, conn)
    new_value = GroupoidPresentation(new_objects, new_gens, value.relations)
    diagram.values[target] = new_value

    # rebuild arrows into the target
    for e in members:
        if (e, target) not in diagram.arrows:
            continue
        old = diagram.arrows[(e, target)]
        omap = {}
        conn_word = {}
        for o in diagram.values[e].objects:
            cls = uf.find((_elem_key(e), o))
            if cls in redirect:
                fresh, conn = redirect[cls]
                omap[o] = fresh
                conn_word[o] = ((conn, 1),)
            else:
                omap[o] = old.apply_object(o)
                conn_word[o] = ()
        gmap = {}
        for g in diagram.values[e].gen_isos:
            # conjugate the old image by the connecting isomorphisms
            new_word = (
                invert_word(conn_word[g.src])
                + old.gen_map.get(g.name, ())
                + conn_word[g.tgt]
            )
            gmap[g.name] = free_reduce(new_word)
        diagram.arrows[(e, target)] = GroupoidFunctorData(
            diagram.values[e], new_value, omap, gmap, verify_relations=False
        )
    # extend arrows out of the target over the new objects
    for (src, dst), f in list(diagram.arrows.items()):
        if src != target:
            continue
        omap = dict(f.object_map)
        gmap = {g: w for g, w in f.gen_map.items()}
        for obj in sorted(collided):
            for k, cls in enumerate(collided[obj][1:], start=1):
                fresh = f"{obj}#{k}"
                omap[fresh] = f.object_map[obj]
                gmap[f"st:{fresh}"] = ()
        diagram.arrows[(src, dst)] = GroupoidFunctorData(
            new_value, diagram.values[dst], omap, gmap, verify_relations=False
        )
    return True


def stretch_until_conditions_hold(diagram: CechGroupoidDiagram):
    """Stretch every value against its supersets, then verify the conditions.

    Processing targets in decreasing size keeps earlier stretches valid:
    a stretch only modifies its target and the arrows touching it, and
    later targets are strictly smaller.  Stretching against all supersets
    is more than the minimal required pairs, but each step replaces a
    value by an equivalent groupoid, and it makes every canonical map of
    the required (I, J) family injective on objects.
    """
    for target in sorted(diagram.elements, key=lambda e: (-len(e), sorted(e))):
        _stretch_diagram_target(diagram, target)
    diagram.validate_commutativity()
    failing = [c for c in check_colimit_conditions(diagram) if not c.passes]
    if failing:
        raise ConditionCheckFailed(
            f"conditions still fail after stretching: {failing}"
        )


# ---------------------------------------------------------------------------
# colimit


def colimit(diagram: CechGroupoidDiagram):
    """Colimit presentation of a commuting poset diagram, plus injections.

    Objects are identified along the functors, then the merge
    simplification runs: objects joined by a generating isomorphism are
    equated, a spanning forest of isomorphisms is set to the identity, and
    surviving isomorphisms become automorphism-style generators.
    """
    uf = _UnionFind()
    for e in diagram.elements:
        for o in diagram.values[e].objects:
            uf.add((_elem_key(e), o))
    for (src, dst), f in diagram.arrows.items():
        for o in diagram.values[src].objects:
            uf.union((_elem_key(src), o), (_elem_key(dst), f.apply_object(o)))

    gens = []  # (qualified name, class src, class tgt)
    for e in diagram.elements:
        for g in diagram.values[e].gen_isos:
            qname = f"{_elem_key(e)}/{g.name}"
            gens.append(
                (
                    qname,
                    uf.find((_elem_key(e), g.src)),
                    uf.find((_elem_key(e), g.tgt)),
                )
            )

    def qualify_word(e, word):
        return tuple((f"{_elem_key(e)}/{name}", s) for name, s in word)

    relation_pairs = []
    for e in diagram.elements:
        for lhs, rhs in diagram.values[e].relations:
            relation_pairs.append((qualify_word(e, lhs), qualify_word(e, rhs)))
    for (src, dst), f in diagram.arrows.items():
        for g in diagram.values[src].gen_isos:
            relation_pairs.append(
                (
                    qualify_word(src, ((g.name, 1),)),
                    qualify_word(dst, f.gen_map.get(g.name, ())),
                )
            )

    # merge step: spanning forest of generator edges becomes identities
    merge = _UnionFind()
    for e in diagram.elements:
        for o in diagram.values[e].objects:
            merge.add(uf.find((_elem_key(e), o)))
    tree = set()
    for qname, csrc, ctgt in sorted(gens):
        if merge.find(csrc) != merge.find(ctgt):
            merge.union(csrc, ctgt)
            tree.add(qname)

    def final_object(cls):
        rep = merge.find(cls)
        return f"{rep[0]}/{rep[1]}"

    objects = sorted({final_object(uf.find(x)) for x in uf.parent})
    final_gens = [
        GenIso(qname, final_object(csrc), final_object(ctgt))
        for qname, csrc, ctgt in gens
        if qname not in tree
    ]

    def strip(word):
        return free_reduce(tuple((n, s) for n, s in word if n not in tree))

    relations = []
    for lhs, rhs in relation_pairs:
        l, r = strip(lhs), strip(rhs)
        if l != r:
            relations.append((l, r))
    result = GroupoidPresentation(objects, final_gens, relations)

    injections = {}
    for e in diagram.elements:
        omap = {
            o: final_object(uf.find((_elem_key(e), o)))
            for o in diagram.values[e].objects
        }
        gmap = {
            g.name: strip(qualify_word(e, ((g.name, 1),)))
            for g in diagram.values[e].gen_isos
        }
        injections[e] = (omap, gmap)
    return result, injections


# ---------------------------------------------------------------------------
# skeletonization


@dataclass(frozen=True)
class GroupComponent:
    representative: str
    objects: tuple
    generators: tuple
    relators: tuple
    free_rank: Optional[int]

    @property
    def object_count(self) -> int:
        return len(self.objects)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0


@dataclass(frozen=True)
class GroupPresentationResult:
    components: tuple

    @property
    def component_count(self) -> int:
        return len(self.components)

    def free_ranks(self):
        return tuple(c.free_rank for c in self.components)


def skeletonize(pres: GroupoidPresentation, tietze_budget=TIETZE_BUDGET) -> GroupPresentationResult:
    """One group presentation per connected component.

    A lexicographically minimal spanning tree is contracted, remaining
    generators become loops at the component root, and the loop relators
    go through Tietze simplification.  ``free_rank`` is only set when no
    relators survive.
    """
    uf = _UnionFind()
    for o in pres.objects:
        uf.add(o)
    for g in pres.gen_isos:
        uf.union(g.src, g.tgt)
    comps = uf.classes()

    results = []
    for root in sorted(comps):
        members = set(comps[root])
        root_obj = min(members)
        edges = sorted(
            (g for g in pres.gen_isos if g.src in members), key=lambda g: g.name
        )
        # BFS spanning tree with lexicographically smallest edge names first
        parent = {root_obj: ()}
        frontier = [root_obj]
        tree = set()
        while frontier:
            nxt = []
            for g in edges:
                if g.name in tree:
                    continue
                if g.src in parent and g.tgt not in parent:
                    parent[g.tgt] = parent[g.src] + ((g.name, 1),)
                    tree.add(g.name)
                    nxt.append(g.tgt)
                elif g.tgt in parent and g.src not in parent:
                    parent[g.src] = parent[g.tgt] + ((g.name, -1),)
                    tree.add(g.name)
                    nxt.append(g.src)
            if not nxt:
                break
            frontier = nxt

        loop_gens = [g.name for g in edges if g.name not in tree]

        def image(word):
            # Conjugating to the root turns each non-tree generator into a
            # loop generator of the same name and kills tree generators, so
            # the relator image just drops the tree letters.
            return free_reduce(
                tuple(
                    (name, sign)
                    for name, sign in word
                    if name not in tree and pres.gen(name).src in members
                )
            )

        relators = []
        for lhs, rhs in pres.relations:
            end = pres.word_endpoints(lhs) or pres.word_endpoints(rhs)
            if end is None or end[0] not in members:
                continue
            rel = free_reduce(image(lhs) + invert_word(image(rhs)))
            if rel:
                relators.append(rel)
        gens, relators = tietze_simplify(loop_gens, relators, tietze_budget)
        free_rank = len(gens) if not relators else None
        results.append(
            GroupComponent(
                root_obj, tuple(sorted(members)), tuple(gens), tuple(relators), free_rank
            )
        )
    return GroupPresentationResult(tuple(sorted(results, key=lambda c: c.representative)))


def _substitute(word, gen, replacement):
    out = []
    for name, sign in word:
        if name == gen:
            out.extend(replacement if sign == 1 else invert_word(replacement))
        else:
            out.append((name, sign))
    return free_reduce(tuple(out))


def tietze_simplify(gens, relators, budget=TIETZE_BUDGET):
    """Eliminate generators defined by relators; drop trivial relators."""
    gens = list(gens)
    relators = [cyclic_reduce(r) for r in relators]
    steps = 0
    changed = True
    while changed and steps < budget:
        changed = False
        relators = sorted(
            {cyclic_reduce(r) for r in relators if cyclic_reduce(r)}, key=lambda r: (len(r), r)
        )
        # find a generator occurring exactly once in some relator
        for ridx, rel in enumerate(relators):
            counts = {}
            for name, _ in rel:
                counts[name] = counts.get(name, 0) + 1
            candidates = sorted(n for n, c in counts.items() if c == 1)
            if not candidates:
                continue
            gen = candidates[0]
            pos = next(i for i, (n, _) in enumerate(rel) if n == gen)
            sign = rel[pos][1]
            prefix, suffix = rel[:pos], rel[pos + 1:]
            solved = free_reduce(invert_word(prefix) + invert_word(suffix))
            if sign == -1:
                solved = invert_word(solved)
            gens.remove(gen)
            relators = [
                _substitute(r, gen, solved) for i, r in enumerate(relators) if i != ridx
            ]
            steps += 1
            changed = True
            break
        if changed:
            continue
        # greedy shortening: replace a long overlap with the complement
        for i, small in enumerate(relators):
            if changed:
                break
            variants = set()
            doubled = small + small
            for start in range(len(small)):
                for sgn in (1, -1):
                    w = doubled[start:start + len(small)]
                    variants.add(w if sgn == 1 else invert_word(w))
            for j, big in enumerate(relators):
                if i == j or len(big) <= len(small):
                    continue
                for var in variants:
                    half = len(var) // 2 + 1
                    piece = var[:half]
                    for pos in range(len(big) - half + 1):
                        if big[pos:pos + half] == piece:
                            rest = invert_word(var[half:])
                            new_big = big[:pos] + rest + big[pos + half:]
                            new_big = cyclic_reduce(new_big)
                            if len(new_big) < len(big):
                                relators[j] = new_big
                                steps += 1
                                changed = True
                                break
                    if changed:
                        break
                if changed:
                    break
    relators = sorted(
        {cyclic_reduce(r) for r in relators if cyclic_reduce(r)}, key=lambda r: (len(r), r)
    )
    return gens, relators
