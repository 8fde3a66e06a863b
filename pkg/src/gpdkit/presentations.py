"""Groupoid presentations: quivers, words, relations, and pushouts.

A word is a composable chain of signed edges of a quiver, read left to
right.  Relations are coterminal pairs of words.  Free reduction (cancel
adjacent ``e e^-1`` pairs) computes the unique normal form in the free
groupoid on a quiver.

Morphisms of presentations send vertices to vertices and each generating
edge to a *word* of the target; that generality is what inclusion-induced
maps between fundamental groupoids need.  Pushouts are computed at the
presentation level: disjoint union, identify image vertices, add one
relation ``f(e) = g(e)`` per generator of the common source.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import DEFAULT_SIZE_GUARD, SizeGuardExceeded, ValidationError


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    edges: tuple
    esrc: dict
    etgt: dict

    def validate(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertices", witness=self.vertices)
        if len(set(self.edges)) != len(self.edges):
            raise ValidationError("duplicate edges", witness=self.edges)
        for e in self.edges:
            if self.esrc.get(e) not in self.vertices or self.etgt.get(e) not in self.vertices:
                raise ValidationError("edge with bad endpoints", witness=e)
        return self

    def letter_src(self, letter):
        e, s = letter
        return self.esrc[e] if s > 0 else self.etgt[e]

    def letter_tgt(self, letter):
        e, s = letter
        return self.etgt[e] if s > 0 else self.esrc[e]


def quiver(vertices, edges):
    """Build a quiver from ``(edge, src, tgt)`` triples."""
    vertices = tuple(vertices)
    ids = tuple(e for e, _, _ in edges)
    esrc = {e: s for e, s, _ in edges}
    etgt = {e: t for e, _, t in edges}
    return Quiver(vertices=vertices, edges=ids, esrc=esrc, etgt=etgt).validate()


@dataclass(frozen=True)
class Word:
    """A composable chain of signed edges; ``letters`` is a tuple of
    ``(edge, +1|-1)`` pairs.  The empty word carries its base vertex."""

    src: object
    tgt: object
    letters: tuple

    def __len__(self):
        return len(self.letters)

    def is_empty(self):
        return not self.letters

    def inverse(self):
        return Word(
            src=self.tgt,
            tgt=self.src,
            letters=tuple((e, -s) for e, s in reversed(self.letters)),
        )

    def concat(self, other):
        if self.tgt != other.src:
            raise ValidationError(
                "words do not concatenate", witness=(self.tgt, other.src)
            )
        return Word(src=self.src, tgt=other.tgt, letters=self.letters + other.letters)


def empty_word(v):
    return Word(src=v, tgt=v, letters=())


def word(q, letters, at=None):
    """Validated word over quiver ``q``; ``at`` places an empty word."""
    letters = tuple((e, int(s)) for e, s in letters)
    if not letters:
        if at is None or at not in q.vertices:
            raise ValidationError("empty word needs a vertex", witness=at)
        return empty_word(at)
    here = q.letter_src(letters[0])
    for i, letter in enumerate(letters):
        e, s = letter
        if e not in q.esrc or s not in (1, -1):
            raise ValidationError("malformed letter", witness=letter)
        if q.letter_src(letter) != here:
            raise ValidationError(
                "letters do not chain", witness=(i, letter, here)
            )
        here = q.letter_tgt(letter)
    return Word(src=q.letter_src(letters[0]), tgt=here, letters=letters)


def free_reduce(w):
    """Unique normal form: cancel adjacent ``(e,s)(e,-s)`` pairs."""
    stack = []
    for letter in w.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return Word(src=w.src, tgt=w.tgt, letters=tuple(stack))


def count_reduced_words(q, x, k):
    """Number of reduced words with source ``x`` and length at most ``k``."""
    if x not in q.vertices:
        raise ValidationError("no such vertex", witness=x)
    letters = [(e, s) for e in q.edges for s in (1, -1)]
    total = 1  # the empty word
    frontier = {(x, None): 1}
    for _ in range(k):
        nxt = {}
        for (v, last), n in frontier.items():
            for letter in letters:
                if q.letter_src(letter) != v:
                    continue
                if last is not None and letter == (last[0], -last[1]):
                    continue
                key = (q.letter_tgt(letter), letter)
                nxt[key] = nxt.get(key, 0) + n
        total += sum(nxt.values())
        frontier = nxt
    return total


@dataclass(frozen=True)
class GroupoidPresentation:
    """A quiver plus coterminal word-pair relations."""

    quiver: Quiver
    relations: tuple

    def validate(self):
        self.quiver.validate()
        for lhs, rhs in self.relations:
            for w in (lhs, rhs):
                rebuilt = word(self.quiver, w.letters, at=w.src)
                if rebuilt != w:
                    raise ValidationError("malformed relation word", witness=w)
            if lhs.src != rhs.src or lhs.tgt != rhs.tgt:
                raise ValidationError(
                    "relation sides are not coterminal", witness=(lhs, rhs)
                )
        return self


def presentation(q, relations=()):
    return GroupoidPresentation(quiver=q, relations=tuple(relations)).validate()


@dataclass(frozen=True)
class PresentationMorphism:
    """Vertices to vertices, generators to words of the target."""

    source: GroupoidPresentation
    target: GroupoidPresentation
    vmap: dict
    emap: dict

    def validate(self):
        sq, tq = self.source.quiver, self.target.quiver
        for v in sq.vertices:
            if self.vmap.get(v) not in tq.vertices:
                raise ValidationError("vertex image missing", witness=v)
        for e in sq.edges:
            w = self.emap.get(e)
            if w is None:
                raise ValidationError("edge image missing", witness=e)
            rebuilt = word(tq, w.letters, at=w.src)
            if rebuilt != w:
                raise ValidationError("edge image is malformed", witness=(e, w))
            if w.src != self.vmap[sq.esrc[e]] or w.tgt != self.vmap[sq.etgt[e]]:
                raise ValidationError(
                    "edge image has wrong endpoints", witness=(e, w)
                )
        return self

    def apply(self, w):
        """Image of a source word, not freely reduced."""
        out = empty_word(self.vmap[w.src])
        for e, s in w.letters:
            piece = self.emap[e]
            out = out.concat(piece if s > 0 else piece.inverse())
        return out


def identity_morphism(p):
    q = p.quiver
    return PresentationMorphism(
        source=p,
        target=p,
        vmap={v: v for v in q.vertices},
        emap={e: word(q, [(e, 1)]) for e in q.edges},
    )


@dataclass(frozen=True)
class PresMap:
    """A morphism from a presented groupoid into a finite groupoid:
    vertex assignment plus one arrow per generator, relations respected."""

    vmap: dict
    amap: dict


def eval_word(w, pm, t):
    """Evaluate a word in a finite groupoid under a PresMap."""
    out = t.id_of[pm.vmap[w.src]]
    for e, s in w.letters:
        a = pm.amap[e] if s > 0 else t.inv[pm.amap[e]]
        out = t.comp[(out, a)]
    return out


def presmap_key(pm, p):
    q = p.quiver
    return (
        tuple(pm.vmap[v] for v in q.vertices),
        tuple(pm.amap[e] for e in q.edges),
    )


def enumerate_pres_morphisms(p, t, guard=DEFAULT_SIZE_GUARD):
    """All relation-respecting assignments of ``p`` into groupoid ``t``,
    in canonical (vertex images, edge images) order."""
    q = p.quiver
    plans = []
    total = 0
    for images in product(t.objects, repeat=len(q.vertices)):
        vmap = dict(zip(q.vertices, images))
        cands = []
        count = 1
        for e in q.edges:
            c = t.arrows_between(vmap[q.esrc[e]], vmap[q.etgt[e]])
            cands.append(c)
            count *= len(c)
        total += count
        if total > guard:
            raise SizeGuardExceeded(
                f"presentation morphism search needs more than {guard} candidates"
            )
        plans.append((vmap, cands))
    found = []
    for vmap, cands in plans:
        for images in product(*cands):
            pm = PresMap(vmap=vmap, amap=dict(zip(q.edges, images)))
            if all(
                eval_word(lhs, pm, t) == eval_word(rhs, pm, t)
                for lhs, rhs in p.relations
            ):
                found.append(pm)
    return found


@dataclass(frozen=True)
class PushoutSquare:
    """A span W -> U, W -> V together with its computed pushout."""

    w: GroupoidPresentation
    u: GroupoidPresentation
    v: GroupoidPresentation
    f: PresentationMorphism
    g: PresentationMorphism
    apex: GroupoidPresentation
    inj_u: PresentationMorphism
    inj_v: PresentationMorphism


def _rename_word(w, vname, ename):
    return Word(
        src=vname[w.src],
        tgt=vname[w.tgt],
        letters=tuple((ename[e], s) for e, s in w.letters),
    )


def pushout(f, g):
    """Pushout of presentations along a common source.

    Vertices of U and V are tagged apart and then identified along the
    images of W's vertices; one relation ``f(e) = g(e)`` is added per
    generator of W.
    """
    if f.source != g.source:
        raise ValidationError("span legs have different sources")
    f.validate()
    g.validate()
    w, u, v = f.source, f.target, g.target

    tagged = [("u", x) for x in u.quiver.vertices] + [
        ("v", x) for x in v.quiver.vertices
    ]
    order = {t: i for i, t in enumerate(tagged)}
    parent = {t: t for t in tagged}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        if order[ra] > order[rb]:
            ra, rb = rb, ra
        parent[rb] = ra

    for x in w.quiver.vertices:
        union(("u", f.vmap[x]), ("v", g.vmap[x]))

    def vname(t):
        tag, x = find(t)
        return f"{tag}:{x}"

    uvname = {x: vname(("u", x)) for x in u.quiver.vertices}
    vvname = {x: vname(("v", x)) for x in v.quiver.vertices}
    uename = {e: f"u:{e}" for e in u.quiver.edges}
    vename = {e: f"v:{e}" for e in v.quiver.edges}

    vertices = []
    for t in tagged:
        n = vname(t)
        if n not in vertices:
            vertices.append(n)
    edges = [
        (uename[e], uvname[u.quiver.esrc[e]], uvname[u.quiver.etgt[e]])
        for e in u.quiver.edges
    ] + [
        (vename[e], vvname[v.quiver.esrc[e]], vvname[v.quiver.etgt[e]])
        for e in v.quiver.edges
    ]
    q = quiver(vertices, edges)

    relations = [
        (_rename_word(lhs, uvname, uename), _rename_word(rhs, uvname, uename))
        for lhs, rhs in u.relations
    ] + [
        (_rename_word(lhs, vvname, vename), _rename_word(rhs, vvname, vename))
        for lhs, rhs in v.relations
    ]
    for e in w.quiver.edges:
        relations.append(
            (
                _rename_word(f.emap[e], uvname, uename),
                _rename_word(g.emap[e], vvname, vename),
            )
        )
    apex = presentation(q, relations)

    inj_u = PresentationMorphism(
        source=u,
        target=apex,
        vmap=dict(uvname),
        emap={e: word(q, [(uename[e], 1)]) for e in u.quiver.edges},
    ).validate()
    inj_v = PresentationMorphism(
        source=v,
        target=apex,
        vmap=dict(vvname),
        emap={e: word(q, [(vename[e], 1)]) for e in v.quiver.edges},
    ).validate()
    return PushoutSquare(
        w=w, u=u, v=v, f=f, g=g, apex=apex, inj_u=inj_u, inj_v=inj_v
    )


def compose_presmap(f, pm, t):
    """Precompose a PresMap (into ``t``) with a presentation morphism."""
    return PresMap(
        vmap={v: pm.vmap[f.vmap[v]] for v in f.source.quiver.vertices},
        amap={e: eval_word(f.emap[e], pm, t) for e in f.source.quiver.edges},
    )


@dataclass(frozen=True)
class TargetUniversality:
    target: str
    compatible_pairs: int
    apex_morphisms: int
    ok: bool
    witness: tuple = None


@dataclass(frozen=True)
class UniversalityReport:
    ok: bool
    per_target: tuple


def verify_pushout_universal(square, targets=None, guard=DEFAULT_SIZE_GUARD):
    """Exhaustively verify the pushout's universal property against finite
    targets: every compatible pair of morphisms out of U and V admits
    exactly one mediating morphism out of the apex.

    The verdict is relative to the supplied target battery, and says so.
    """
    from .core import battery

    if targets is None:
        targets = battery()
    results = []
    all_ok = True
    for tname, t in targets.items():
        mors_u = enumerate_pres_morphisms(square.u, t, guard)
        mors_v = enumerate_pres_morphisms(square.v, t, guard)
        mors_p = enumerate_pres_morphisms(square.apex, t, guard)
        wq = square.w.quiver
        pairs = 0
        ok = True
        witness = None
        for pu in mors_u:
            fu = compose_presmap(square.f, pu, t)
            for pv in mors_v:
                fv = compose_presmap(square.g, pv, t)
                if presmap_key(fu, square.w) != presmap_key(fv, square.w):
                    continue
                pairs += 1
                mediators = [
                    pm
                    for pm in mors_p
                    if presmap_key(compose_presmap(square.inj_u, pm, t), square.u)
                    == presmap_key(pu, square.u)
                    and presmap_key(compose_presmap(square.inj_v, pm, t), square.v)
                    == presmap_key(pv, square.v)
                ]
                if len(mediators) != 1:
                    ok = False
                    if witness is None:
                        witness = (
                            presmap_key(pu, square.u),
                            presmap_key(pv, square.v),
                            len(mediators),
                        )
        if ok and pairs != len(mors_p):
            ok = False
            witness = ("count-mismatch", pairs, len(mors_p))
        results.append(
            TargetUniversality(
                target=tname,
                compatible_pairs=pairs,
                apex_morphisms=len(mors_p),
                ok=ok,
                witness=witness,
            )
        )
        all_ok = all_ok and ok
    return UniversalityReport(ok=all_ok, per_target=tuple(results))


@dataclass(frozen=True)
class GroupPresentation:
    """Generators and relator words ``((gen, sign), ...)`` for a group."""

    generators: tuple
    relators: tuple
    dropped_relations: tuple = ()

    def render(self):
        gens = ", ".join(str(g) for g in self.generators)
        rels = ", ".join(
            " ".join(f"{e}" if s > 0 else f"{e}^-1" for e, s in r) or "1"
            for r in self.relators
        )
        return f"<{gens} | {rels}>"


def _component_of(q, x):
    seen = {x}
    frontier = [x]
    while frontier:
        v = frontier.pop()
        for e in q.edges:
            for s, t in ((q.esrc[e], q.etgt[e]), (q.etgt[e], q.esrc[e])):
                if s == v and t not in seen:
                    seen.add(t)
                    frontier.append(t)
    return seen


def spanning_tree(q, roots):
    """Breadth-first forest rooted at ``roots``: maps each reached vertex to
    the path of signed tree letters from its root, and lists tree edges.

    Roots are processed in vertex order, edges in input order, so the
    forest (and everything built from it) is deterministic.
    """
    vorder = {v: i for i, v in enumerate(q.vertices)}
    roots = sorted(roots, key=lambda v: vorder[v])
    paths = {r: () for r in roots}
    root_of = {r: r for r in roots}
    tree_edges = set()
    queue = list(roots)
    while queue:
        v = queue.pop(0)
        for e in q.edges:
            if q.esrc[e] == v and q.etgt[e] not in paths:
                w = q.etgt[e]
                paths[w] = paths[v] + ((e, 1),)
                root_of[w] = root_of[v]
                tree_edges.add(e)
                queue.append(w)
            elif q.etgt[e] == v and q.esrc[e] not in paths:
                w = q.esrc[e]
                paths[w] = paths[v] + ((e, -1),)
                root_of[w] = root_of[v]
                tree_edges.add(e)
                queue.append(w)
    return paths, root_of, tree_edges


def vertex_group_presentation(p, x):
    """Present the vertex group of a presented groupoid at ``x``.

    Chooses a spanning tree of the component of ``x`` (breadth-first from
    the least vertex, edges in input order); generators are the non-tree
    edges, relators the relation words rewritten through the tree.
    Relations living on other components are dropped and reported in
    ``dropped_relations``.
    """
    q = p.quiver
    if x not in q.vertices:
        raise ValidationError("no such vertex", witness=x)
    comp = _component_of(q, x)
    vorder = {v: i for i, v in enumerate(q.vertices)}
    root = min(comp, key=lambda v: vorder[v])
    paths, _, tree_edges = spanning_tree(q, [root])
    generators = tuple(
        e for e in q.edges if e not in tree_edges and q.esrc[e] in comp
    )

    def rewrite(w):
        out = []
        for e, s in w.letters:
            if e in tree_edges:
                continue
            if out and out[-1] == (e, -s):
                out.pop()
            else:
                out.append((e, s))
        return tuple(out)

    relators = []
    dropped = []
    for lhs, rhs in p.relations:
        if lhs.src not in comp:
            dropped.append((lhs, rhs))
            continue
        rel = rewrite(lhs.concat(rhs.inverse()))
        if rel:
            relators.append(rel)
    return GroupPresentation(
        generators=generators,
        relators=tuple(relators),
        dropped_relations=tuple(dropped),
    )


def free_loop_counts(gp, kmax):
    """Reduced-word counts (length <= k, k = 0..kmax) in the free group on
    ``gp.generators``; requires a relator-free presentation."""
    if gp.relators:
        raise ValidationError("presentation is not free", witness=gp.relators)
    q = quiver(("*",), [(g, "*", "*") for g in gp.generators])
    return [count_reduced_words(q, "*", k) for k in range(kmax + 1)]


def enumerate_group_morphisms(gp, group, guard=DEFAULT_SIZE_GUARD):
    """All assignments of ``gp.generators`` into a finite group that kill
    every relator."""
    n = len(group.elements) ** len(gp.generators)
    if n > guard:
        raise SizeGuardExceeded(
            f"group morphism search needs more than {guard} candidates"
        )
    found = []
    for images in product(group.elements, repeat=len(gp.generators)):
        amap = dict(zip(gp.generators, images))
        good = True
        for rel in gp.relators:
            acc = group.unit
            for gname, s in rel:
                val = amap[gname] if s > 0 else group.inv(amap[gname])
                acc = group.mul(acc, val)
            if acc != group.unit:
                good = False
                break
        if good:
            found.append(amap)
    return found


@dataclass(frozen=True)
class WordVerdict:
    answer: str  # "yes" | "no" | "unknown"
    reason: str
    witness: tuple = None


def words_equal(p, u, v, targets=None, max_steps=2000, max_length=24):
    """Three-valued word equality in a presented groupoid.

    "yes" comes with a derivation (free reduction, or bounded rewriting);
    "no" comes with a separating morphism into a finite battery target;
    anything the bounds cannot settle is "unknown".
    """
    from .core import battery

    q = p.quiver
    u = word(q, u.letters, at=u.src)
    v = word(q, v.letters, at=v.src)
    if u.src != v.src or u.tgt != v.tgt:
        raise ValidationError("words are not coterminal", witness=(u, v))
    ru, rv = free_reduce(u), free_reduce(v)
    if ru == rv:
        return WordVerdict("yes", "free reduction", witness=(ru.letters,))
    if p.relations:
        reached = _bounded_rewrite_search(p, ru, rv, max_steps, max_length)
        if reached is not None:
            return WordVerdict("yes", "bounded rewriting", witness=(reached,))
    if targets is None:
        targets = battery()
    for tname, t in targets.items():
        for pm in enumerate_pres_morphisms(p, t):
            if eval_word(ru, pm, t) != eval_word(rv, pm, t):
                return WordVerdict(
                    "no",
                    f"separated in {tname}",
                    witness=(tname, presmap_key(pm, p)),
                )
    return WordVerdict("unknown", "bounds exhausted without a certificate")


def _vertex_at(q, w, i):
    return w.src if i == 0 else q.letter_tgt(w.letters[i - 1])


def _bounded_rewrite_search(p, start, goal, max_steps, max_length):
    q = p.quiver
    sides = []
    for lhs, rhs in p.relations:
        sides.append((free_reduce(lhs), free_reduce(rhs)))
        sides.append((free_reduce(rhs), free_reduce(lhs)))
    seen = {start}
    queue = [(start, 0)]
    steps = 0
    while queue and steps < max_steps:
        w, depth = queue.pop(0)
        steps += 1
        for a, b in sides:
            if a.is_empty():
                # insert the loop b at any position based at its vertex
                for i in range(len(w.letters) + 1):
                    if _vertex_at(q, w, i) != b.src:
                        continue
                    letters = w.letters[:i] + b.letters + w.letters[i:]
                    nw = free_reduce(Word(src=w.src, tgt=w.tgt, letters=letters))
                    if nw == goal:
                        return depth + 1
                    if len(nw.letters) <= max_length and nw not in seen:
                        seen.add(nw)
                        queue.append((nw, depth + 1))
                continue
            n = len(a.letters)
            for i in range(len(w.letters) - n + 1):
                if w.letters[i : i + n] != a.letters:
                    continue
                letters = w.letters[:i] + b.letters + w.letters[i + n :]
                nw = free_reduce(Word(src=w.src, tgt=w.tgt, letters=letters))
                if nw == goal:
                    return depth + 1
                if len(nw.letters) <= max_length and nw not in seen:
                    seen.add(nw)
                    queue.append((nw, depth + 1))
    return None
