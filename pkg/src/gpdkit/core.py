"""Finite groups and groupoids as explicit composition tables.

Conventions that hold across the whole package:

- Composition is diagrammatic: ``comp[(a, b)]`` means "a then b" and is
  defined exactly when ``tgt[a] == src[b]``.  Group tables follow the same
  reading, and permutations multiply as "apply left, then right".
- Values are immutable after construction; every operation is a pure
  function, so concurrent use needs no locking.
- Enumerations run in a canonical order derived from the declared order of
  objects and arrows, so repeated runs produce identical output.
- Exhaustive searches count their candidate space first and refuse loudly
  (SizeGuardExceeded) past ``DEFAULT_SIZE_GUARD`` candidates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

DEFAULT_SIZE_GUARD = 10**6


class ValidationError(Exception):
    """A structure failed one of its defining laws; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeGuardExceeded(Exception):
    """An enumeration would exceed the configured candidate bound."""


class CompositionError(Exception):
    """Arrows or squares do not line up for the requested composition."""


class HypothesisError(Exception):
    """A theorem's hypothesis is unmet (bad cover, bad row, ...)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group: element tuple, full multiplication table, unit.

    ``table[(a, b)]`` is the product "a then b".  ``inverse`` is filled in
    by ``finite_group``; raw dataclass construction is allowed for
    deliberately broken tables in tests.
    """

    elements: tuple
    table: dict
    unit: object
    inverse: dict = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def mul(self, a, b):
        return self.table[(a, b)]

    def inv(self, a):
        return self.inverse[a]

    def conj(self, m, g):
        # m^g = g^-1 m g, diagrammatic reading of "conjugate m by g".
        return self.mul(self.mul(self.inv(g), m), g)

    def __len__(self):
        return len(self.elements)

    def validate(self):
        elems = self.elements
        eset = set(elems)
        if len(eset) != len(elems):
            raise ValidationError("duplicate elements", witness=elems)
        if self.unit not in eset:
            raise ValidationError("unit is not an element", witness=self.unit)
        for a, b in product(elems, repeat=2):
            if (a, b) not in self.table:
                raise ValidationError("table is not total", witness=(a, b))
            if self.table[(a, b)] not in eset:
                raise ValidationError(
                    "table leaves the carrier", witness=(a, b, self.table[(a, b)])
                )
        for a in elems:
            if self.table[(self.unit, a)] != a or self.table[(a, self.unit)] != a:
                raise ValidationError("unit law fails", witness=a)
        for a, b, c in product(elems, repeat=3):
            left = self.table[(self.table[(a, b)], c)]
            right = self.table[(a, self.table[(b, c)])]
            if left != right:
                raise ValidationError("associativity fails", witness=(a, b, c))
        for a in elems:
            if not any(
                self.table[(a, b)] == self.unit and self.table[(b, a)] == self.unit
                for b in elems
            ):
                raise ValidationError("no two-sided inverse", witness=a)
        return self


def finite_group(elements, table, unit=None, name=""):
    """Validated FiniteGroup constructor; infers the unit if not given."""
    elements = tuple(elements)
    table = dict(table)
    if unit is None:
        for e in elements:
            if all(
                table.get((e, a)) == a and table.get((a, e)) == a for a in elements
            ):
                unit = e
                break
        else:
            raise ValidationError("no unit found", witness=elements)
    g = FiniteGroup(elements=elements, table=table, unit=unit, name=name)
    g.validate()
    inverse = {}
    for a in elements:
        for b in elements:
            if table[(a, b)] == unit and table[(b, a)] == unit:
                inverse[a] = b
                break
    return FiniteGroup(
        elements=elements, table=table, unit=unit, inverse=inverse, name=name
    )


def cyclic_group(n, name=None):
    """Z/n, written additively on elements 0..n-1."""
    elements = tuple(range(n))
    table = {(a, b): (a + b) % n for a in elements for b in elements}
    return finite_group(elements, table, unit=0, name=name or f"c{n}")


def perm_mul(p, q):
    # apply p, then q
    return tuple(q[i] for i in p)


def symmetric_group(n, name=None):
    """All permutations of 0..n-1 as image tuples, composed left-then-right."""
    elements = tuple(sorted(product(*(range(n) for _ in range(n)))))
    elements = tuple(p for p in elements if len(set(p)) == n)
    table = {(p, q): perm_mul(p, q) for p in elements for q in elements}
    return finite_group(elements, table, unit=tuple(range(n)), name=name or f"s{n}")


def perm_parity(p):
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            parity ^= (length - 1) & 1
    return parity


def alternating_group(n, name=None):
    s = symmetric_group(n)
    carrier = tuple(p for p in s.elements if perm_parity(p) == 0)
    return subgroup(s, carrier, name=name or f"a{n}")


def trivial_group(name="1"):
    return finite_group(("1",), {("1", "1"): "1"}, unit="1", name=name)


def subgroup(g, carrier, name=""):
    """The subgroup of ``g`` on ``carrier``; closure is checked."""
    carrier = tuple(carrier)
    cset = set(carrier)
    if not cset <= set(g.elements):
        raise ValidationError(
            "carrier is not a subset", witness=tuple(sorted(cset - set(g.elements), key=str))
        )
    if g.unit not in cset:
        raise ValidationError("carrier misses the unit", witness=g.unit)
    for a, b in product(carrier, repeat=2):
        if g.mul(a, b) not in cset:
            raise ValidationError(
                "carrier is not closed under products", witness=(a, b, g.mul(a, b))
            )
    table = {(a, b): g.mul(a, b) for a in carrier for b in carrier}
    return finite_group(carrier, table, unit=g.unit, name=name)


def generating_set(g):
    """A small generating set, chosen greedily in element order."""
    gens = []
    span = {g.unit}
    for x in g.elements:
        if x in span:
            continue
        gens.append(x)
        frontier = [g.unit]
        span = {g.unit}
        while frontier:
            y = frontier.pop()
            for h in gens:
                z = g.mul(y, h)
                if z not in span:
                    span.add(z)
                    frontier.append(z)
        if len(span) == len(g.elements):
            break
    return tuple(gens)


@dataclass(frozen=True)
class FiniteGroupoid:
    """A finite groupoid: objects, arrows, endpoint maps, composition table.

    ``comp[(a, b)]`` is "a then b", defined exactly when ``tgt[a] == src[b]``.
    ``id_of`` maps each object to its identity arrow, ``inv`` each arrow to
    its two-sided inverse.
    """

    objects: tuple
    arrows: tuple
    src: dict
    tgt: dict
    comp: dict
    id_of: dict
    inv: dict
    name: str = field(default="", compare=False)

    def compose(self, a, b):
        if self.tgt[a] != self.src[b]:
            raise CompositionError(f"arrows do not compose: {a!r} then {b!r}")
        return self.comp[(a, b)]

    def compose_many(self, arrows, at=None):
        """Fold a chain of arrows; ``at`` names the object for an empty chain."""
        arrows = list(arrows)
        if not arrows:
            if at is None:
                raise CompositionError("empty composite needs an object")
            return self.id_of[at]
        out = arrows[0]
        for a in arrows[1:]:
            out = self.compose(out, a)
        return out

    def identity(self, x):
        return self.id_of[x]

    def inverse(self, a):
        return self.inv[a]

    def loops(self, x):
        return tuple(a for a in self.arrows if self.src[a] == x and self.tgt[a] == x)

    def arrows_from(self, x):
        return tuple(a for a in self.arrows if self.src[a] == x)

    def arrows_between(self, x, y):
        return tuple(
            a for a in self.arrows if self.src[a] == x and self.tgt[a] == y
        )

    def __len__(self):
        return len(self.arrows)


def build_groupoid(objects, arrows, src, tgt, comp, name=""):
    """Validated FiniteGroupoid constructor; infers identities and inverses.

    Checks totality of the composition table on composable pairs,
    associativity on all composable triples, identity laws, and existence
    of two-sided inverses, reporting a witness for the first failure.
    """
    objects = tuple(objects)
    arrows = tuple(arrows)
    src = dict(src)
    tgt = dict(tgt)
    comp = dict(comp)
    if len(set(objects)) != len(objects):
        raise ValidationError("duplicate objects", witness=objects)
    if len(set(arrows)) != len(arrows):
        raise ValidationError("duplicate arrows", witness=arrows)
    for a in arrows:
        if src.get(a) not in objects or tgt.get(a) not in objects:
            raise ValidationError("arrow with bad endpoints", witness=a)
    for (a, b), c in comp.items():
        if tgt[a] != src[b]:
            raise ValidationError("composite of non-composable pair", witness=(a, b))
        if c not in set(arrows):
            raise ValidationError("composite leaves the carrier", witness=(a, b, c))
        if src[c] != src[a] or tgt[c] != tgt[b]:
            raise ValidationError("composite has wrong endpoints", witness=(a, b, c))
    for a in arrows:
        for b in arrows:
            if tgt[a] == src[b] and (a, b) not in comp:
                raise ValidationError(
                    "composition table is not total", witness=(a, b)
                )
    for a in arrows:
        for b in arrows:
            if tgt[a] != src[b]:
                continue
            ab = comp[(a, b)]
            for c in arrows:
                if tgt[b] != src[c]:
                    continue
                if comp[(ab, c)] != comp[(a, comp[(b, c)])]:
                    raise ValidationError("associativity fails", witness=(a, b, c))
    id_of = {}
    for x in objects:
        for e in arrows:
            if src[e] != x or tgt[e] != x:
                continue
            if all(
                comp[(e, a)] == a for a in arrows if src[a] == x
            ) and all(comp[(a, e)] == a for a in arrows if tgt[a] == x):
                id_of[x] = e
                break
        else:
            raise ValidationError("object with no identity arrow", witness=x)
    inv = {}
    for a in arrows:
        for b in arrows:
            if (
                tgt[a] == src[b]
                and tgt[b] == src[a]
                and comp[(a, b)] == id_of[src[a]]
                and comp[(b, a)] == id_of[src[b]]
            ):
                inv[a] = b
                break
        else:
            raise ValidationError("arrow with no inverse", witness=a)
    return FiniteGroupoid(
        objects=objects,
        arrows=arrows,
        src=src,
        tgt=tgt,
        comp=comp,
        id_of=id_of,
        inv=inv,
        name=name,
    )


def interval_groupoid():
    """Two objects 0, 1; one arrow each way besides the identities."""
    objects = (0, 1)
    arrows = ("id0", "id1", "i", "i_inv")
    src = {"id0": 0, "id1": 1, "i": 0, "i_inv": 1}
    tgt = {"id0": 0, "id1": 1, "i": 1, "i_inv": 0}
    comp = {}
    for a in arrows:
        for b in arrows:
            if tgt[a] != src[b]:
                continue
            if a.startswith("id"):
                comp[(a, b)] = b
            elif b.startswith("id"):
                comp[(a, b)] = a
            else:
                # i then i_inv, or i_inv then i
                comp[(a, b)] = "id0" if a == "i" else "id1"
    return build_groupoid(objects, arrows, src, tgt, comp, name="interval")


def from_group(g, obj="*", name=""):
    """The one-object groupoid with arrow set ``g.elements``."""
    g.validate()
    objects = (obj,)
    arrows = g.elements
    src = {a: obj for a in arrows}
    tgt = {a: obj for a in arrows}
    return FiniteGroupoid(
        objects=objects,
        arrows=arrows,
        src=src,
        tgt=tgt,
        comp=dict(g.table),
        id_of={obj: g.unit},
        inv=dict(g.inverse)
        if g.inverse is not None
        else {a: next(b for b in arrows if g.table[(a, b)] == g.unit) for a in arrows},
        name=name or g.name,
    )


def vertex_group(g, x):
    """The group of loops of ``g`` at object ``x``."""
    if x not in g.objects:
        raise ValidationError("no such object", witness=x)
    loops = g.loops(x)
    table = {(a, b): g.comp[(a, b)] for a in loops for b in loops}
    return finite_group(loops, table, unit=g.id_of[x], name=f"{g.name or 'gpd'}@{x}")


def components(g):
    """Connected components of ``g``'s objects, in canonical order."""
    index = {x: i for i, x in enumerate(g.objects)}
    parent = list(range(len(g.objects)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in g.arrows:
        i, j = find(index[g.src[a]]), find(index[g.tgt[a]])
        if i != j:
            parent[max(i, j)] = min(i, j)
    blocks = {}
    for x in g.objects:
        blocks.setdefault(find(index[x]), []).append(x)
    return tuple(tuple(blocks[r]) for r in sorted(blocks))


def disjoint_union(g, h, tags=("l", "r")):
    """Disjoint union of two groupoids, objects and arrows tagged apart."""
    lt, rt = tags

    def tag(t, v):
        return (t, v)

    objects = tuple(tag(lt, x) for x in g.objects) + tuple(tag(rt, x) for x in h.objects)
    arrows = tuple(tag(lt, a) for a in g.arrows) + tuple(tag(rt, a) for a in h.arrows)
    src = {tag(lt, a): tag(lt, g.src[a]) for a in g.arrows}
    src.update({tag(rt, a): tag(rt, h.src[a]) for a in h.arrows})
    tgt = {tag(lt, a): tag(lt, g.tgt[a]) for a in g.arrows}
    tgt.update({tag(rt, a): tag(rt, h.tgt[a]) for a in h.arrows})
    comp = {(tag(lt, a), tag(lt, b)): tag(lt, c) for (a, b), c in g.comp.items()}
    comp.update({(tag(rt, a), tag(rt, b)): tag(rt, c) for (a, b), c in h.comp.items()})
    id_of = {tag(lt, x): tag(lt, g.id_of[x]) for x in g.objects}
    id_of.update({tag(rt, x): tag(rt, h.id_of[x]) for x in h.objects})
    inv = {tag(lt, a): tag(lt, g.inv[a]) for a in g.arrows}
    inv.update({tag(rt, a): tag(rt, h.inv[a]) for a in h.arrows})
    return FiniteGroupoid(
        objects=objects, arrows=arrows, src=src, tgt=tgt, comp=comp,
        id_of=id_of, inv=inv, name=f"{g.name}+{h.name}",
    )


@dataclass(frozen=True)
class GroupoidMorphism:
    """Object map and arrow map; check with ``check_morphism``."""

    obj_map: dict
    arrow_map: dict


@dataclass(frozen=True)
class MorphismReport:
    ok: bool
    law: str = None
    witness: tuple = None

    def __bool__(self):
        return self.ok


def check_morphism(f, g, h):
    """Check that ``f`` is a functor ``g -> h``; stop at the first violated law."""
    for x in g.objects:
        if x not in f.obj_map:
            return MorphismReport(False, "object-totality", (x,))
        if f.obj_map[x] not in h.objects:
            return MorphismReport(False, "object-image", (x, f.obj_map[x]))
    for a in g.arrows:
        if a not in f.arrow_map:
            return MorphismReport(False, "arrow-totality", (a,))
        fa = f.arrow_map[a]
        if fa not in h.arrows:
            return MorphismReport(False, "arrow-image", (a, fa))
        if h.src[fa] != f.obj_map[g.src[a]] or h.tgt[fa] != f.obj_map[g.tgt[a]]:
            return MorphismReport(False, "endpoint-preservation", (a, fa))
    for x in g.objects:
        if f.arrow_map[g.id_of[x]] != h.id_of[f.obj_map[x]]:
            return MorphismReport(False, "identity-preservation", (x, f.arrow_map[g.id_of[x]]))
    for (a, b), c in g.comp.items():
        if h.comp[(f.arrow_map[a], f.arrow_map[b])] != f.arrow_map[c]:
            return MorphismReport(False, "composite-preservation", (a, b))
    for a in g.arrows:
        if f.arrow_map[g.inv[a]] != h.inv[f.arrow_map[a]]:
            return MorphismReport(False, "inverse-preservation", (a, f.arrow_map[a]))
    return MorphismReport(True)


def enumerate_morphisms(g, h, guard=DEFAULT_SIZE_GUARD):
    """All functors ``g -> h`` in canonical (object map, arrow images) order.

    The candidate space is the product of per-arrow image counts, summed
    over object maps; past ``guard`` candidates the search refuses.
    """
    free_arrows = tuple(a for a in g.arrows if a not in set(g.id_of.values()))
    obj_maps = []
    total = 0
    for images in product(h.objects, repeat=len(g.objects)):
        obj_map = dict(zip(g.objects, images))
        cands = []
        count = 1
        for a in free_arrows:
            c = h.arrows_between(obj_map[g.src[a]], obj_map[g.tgt[a]])
            cands.append(c)
            count *= len(c)
        total += count
        if total > guard:
            raise SizeGuardExceeded(
                f"morphism search needs more than {guard} candidates"
            )
        obj_maps.append((obj_map, cands))
    found = []
    for obj_map, cands in obj_maps:
        for images in product(*cands):
            arrow_map = dict(zip(free_arrows, images))
            for x in g.objects:
                arrow_map[g.id_of[x]] = h.id_of[obj_map[x]]
            if all(
                h.comp[(arrow_map[a], arrow_map[b])] == arrow_map[c]
                for (a, b), c in g.comp.items()
            ):
                found.append(GroupoidMorphism(obj_map=obj_map, arrow_map=arrow_map))
    return found


def battery():
    """Default finite target battery for separation and universality checks."""
    return {
        "c2": from_group(cyclic_group(2), name="c2"),
        "c3": from_group(cyclic_group(3), name="c3"),
        "c4": from_group(cyclic_group(4), name="c4"),
        "s3": from_group(symmetric_group(3), name="s3"),
    }
