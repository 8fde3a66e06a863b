"""Squares over a crossed module, with two compositions satisfying the
interchange law, plus commutative squares, cubes over a group, and the
unit-collapse (Eckmann-Hilton) check.

A square has four boundary arrows and a label from the crossed module:

          top
       o ------> o
  left |         | right        label n, based at the bottom-right
       v         v              corner: mu(n) = bottom^-1 left^-1 top right
       o ------> o
         bottom

All composition is diagrammatic ("first then second").  Horizontal
composition pastes a second square onto the right edge, vertical
composition onto the bottom edge; labels combine through the action:

  hcompose  label = n^(second.bottom) * m
  vcompose  label = m * n^(second.right)

where n labels the first square and m the second.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import product

from .core import (
    DEFAULT_SIZE_GUARD,
    CompositionError,
    HypothesisError,
    SizeGuardExceeded,
    ValidationError,
    finite_group,
    from_group,
)
from .xmod import CrossedModule, XModMorphism


@dataclass(frozen=True)
class LabeledSquare:
    label: object
    top: object
    left: object
    right: object
    bottom: object


def square_base(xm, s):
    """The object the label lives over: the bottom-right corner."""
    return xm.p.tgt[s.bottom]


def boundary_word(xm, s):
    """The clockwise boundary loop at the bottom-right corner."""
    p = xm.p
    return p.compose_many(
        [p.inverse(s.bottom), p.inverse(s.left), s.top, s.right]
    )


def make_square(xm, label, top, left, right, bottom):
    """Validated square: edges must frame a square, and the label's boundary
    must equal the boundary loop."""
    p = xm.p
    for e in (top, left, right, bottom):
        if e not in p.src:
            raise ValidationError("unknown edge", witness=e)
    if p.src[top] != p.src[left]:
        raise ValidationError("top and left must share their source", witness=(top, left))
    if p.tgt[top] != p.src[right]:
        raise ValidationError("right must start where top ends", witness=(top, right))
    if p.tgt[left] != p.src[bottom]:
        raise ValidationError("bottom must start where left ends", witness=(left, bottom))
    if p.tgt[right] != p.tgt[bottom]:
        raise ValidationError("right and bottom must share their target", witness=(right, bottom))
    base = p.tgt[bottom]
    if label not in xm.m[base].elements:
        raise ValidationError("label outside the fibre group", witness=(label, base))
    s = LabeledSquare(label=label, top=top, left=left, right=right, bottom=bottom)
    want = boundary_word(xm, s)
    if xm.mu[base][label] != want:
        raise ValidationError(
            "label boundary does not match the square boundary",
            witness=(label, xm.mu[base][label], want),
        )
    return s


def hcompose(xm, s1, s2):
    """Paste ``s2`` onto the right edge of ``s1``."""
    if s1.right != s2.left:
        raise CompositionError(
            f"squares do not compose horizontally: {s1.right!r} vs {s2.left!r}"
        )
    p = xm.p
    base = xm.m[p.tgt[s2.bottom]]
    label = base.mul(xm.act(s1.label, s2.bottom), s2.label)
    return LabeledSquare(
        label=label,
        top=p.compose(s1.top, s2.top),
        left=s1.left,
        right=s2.right,
        bottom=p.compose(s1.bottom, s2.bottom),
    )


def vcompose(xm, s1, s2):
    """Paste ``s2`` onto the bottom edge of ``s1``."""
    if s1.bottom != s2.top:
        raise CompositionError(
            f"squares do not compose vertically: {s1.bottom!r} vs {s2.top!r}"
        )
    p = xm.p
    base = xm.m[p.tgt[s2.bottom]]
    label = base.mul(s2.label, xm.act(s1.label, s2.right))
    return LabeledSquare(
        label=label,
        top=s1.top,
        left=p.compose(s1.left, s2.left),
        right=p.compose(s1.right, s2.right),
        bottom=s2.bottom,
    )


def hidentity(xm, a):
    """The square that is neutral for horizontal pasting along ``a``."""
    p = xm.p
    x, y = p.src[a], p.tgt[a]
    return LabeledSquare(
        label=xm.m[y].unit, top=p.id_of[x], left=a, right=a, bottom=p.id_of[y]
    )


def videntity(xm, a):
    p = xm.p
    x, y = p.src[a], p.tgt[a]
    return LabeledSquare(
        label=xm.m[y].unit, top=a, left=p.id_of[x], right=p.id_of[y], bottom=a
    )


def double_identity(xm, x):
    i = xm.p.id_of[x]
    return LabeledSquare(label=xm.m[x].unit, top=i, left=i, right=i, bottom=i)


def connection_neg(xm, a):
    """The thin square folding ``a`` across the top-left corner."""
    p = xm.p
    y = p.tgt[a]
    return LabeledSquare(
        label=xm.m[y].unit, top=a, left=a, right=p.id_of[y], bottom=p.id_of[y]
    )


def connection_pos(xm, a):
    """The thin square unfolding ``a`` across the bottom-right corner."""
    p = xm.p
    x, y = p.src[a], p.tgt[a]
    return LabeledSquare(
        label=xm.m[y].unit, top=p.id_of[x], left=p.id_of[x], right=a, bottom=a
    )


def hinverse(xm, s):
    p = xm.p
    base = xm.m[p.tgt[s.bottom]]
    kinv = p.inverse(s.bottom)
    return LabeledSquare(
        label=xm.act(base.inv(s.label), kinv),
        top=p.inverse(s.top),
        left=s.right,
        right=s.left,
        bottom=kinv,
    )


def vinverse(xm, s):
    p = xm.p
    base = xm.m[p.tgt[s.bottom]]
    ainv = p.inverse(s.right)
    return LabeledSquare(
        label=xm.act(base.inv(s.label), ainv),
        top=s.bottom,
        left=p.inverse(s.left),
        right=ainv,
        bottom=s.top,
    )


def is_thin(xm, s):
    """Thin squares carry the unit label; they are exactly the composites
    of identities and connections."""
    return s.label == xm.m[square_base(xm, s)].unit


@dataclass(frozen=True)
class InterchangeReport:
    ok: bool
    row_first: LabeledSquare
    column_first: LabeledSquare

    def __bool__(self):
        return self.ok


def interchange_check(xm, s11, s12, s21, s22):
    """Compare the two evaluation orders of a 2x2 grid::

        s11 s12
        s21 s22
    """
    rows = vcompose(xm, hcompose(xm, s11, s12), hcompose(xm, s21, s22))
    cols = hcompose(xm, vcompose(xm, s11, s21), vcompose(xm, s12, s22))
    return InterchangeReport(ok=rows == cols, row_first=rows, column_first=cols)


def compose_array(xm, grid, order="rows"):
    """Fold a rectangular grid of squares, rows first or columns first."""
    if not grid or any(len(row) != len(grid[0]) for row in grid):
        raise ValidationError("grid must be rectangular and nonempty")
    if order == "rows":
        strips = []
        for row in grid:
            strip = row[0]
            for s in row[1:]:
                strip = hcompose(xm, strip, s)
            strips.append(strip)
        out = strips[0]
        for strip in strips[1:]:
            out = vcompose(xm, out, strip)
        return out
    if order == "columns":
        strips = []
        for j in range(len(grid[0])):
            strip = grid[0][j]
            for i in range(1, len(grid)):
                strip = vcompose(xm, strip, grid[i][j])
            strips.append(strip)
        out = strips[0]
        for strip in strips[1:]:
            out = hcompose(xm, out, strip)
        return out
    raise ValidationError("order must be 'rows' or 'columns'", witness=order)


@dataclass(frozen=True)
class DoubleGroupoidXM:
    """The full carrier of squares over a crossed module, with indexes by
    constrained edges for grid assembly."""

    xm: CrossedModule
    squares: tuple
    by_left: dict = field(compare=False)
    by_top: dict = field(compare=False)
    by_left_top: dict = field(compare=False)

    def __len__(self):
        return len(self.squares)

    def contains(self, s):
        return s in self.by_left_top.get((s.left, s.top), ())

    def hcompose(self, s1, s2):
        return hcompose(self.xm, s1, s2)

    def vcompose(self, s1, s2):
        return vcompose(self.xm, s1, s2)


def from_xmod(xm, guard=DEFAULT_SIZE_GUARD):
    """Enumerate every boundary-valid square: choose the right, top, and
    left edges and the label; the bottom edge is then forced."""
    p = xm.p
    total = 0
    for a in p.arrows:
        w = p.tgt[a]
        for g in p.arrows:
            if p.tgt[g] != p.src[a]:
                continue
            total += len(p.arrows_from(p.src[g])) * len(xm.m[w].elements)
            if total > guard:
                raise SizeGuardExceeded(f"carrier needs more than {guard} squares")
    squares = []
    for w in p.objects:
        for a in p.arrows:
            if p.tgt[a] != w:
                continue
            for g in p.arrows:
                if p.tgt[g] != p.src[a]:
                    continue
                for h in p.arrows_from(p.src[g]):
                    for n in xm.m[w].elements:
                        k = p.compose_many(
                            [
                                p.inverse(h),
                                g,
                                a,
                                p.inverse(xm.mu[w][n]),
                            ]
                        )
                        squares.append(
                            LabeledSquare(label=n, top=g, left=h, right=a, bottom=k)
                        )
    by_left, by_top, by_left_top = {}, {}, {}
    for s in squares:
        by_left.setdefault(s.left, []).append(s)
        by_top.setdefault(s.top, []).append(s)
        by_left_top.setdefault((s.left, s.top), []).append(s)
    return DoubleGroupoidXM(
        xm=xm,
        squares=tuple(squares),
        by_left={k: tuple(v) for k, v in by_left.items()},
        by_top={k: tuple(v) for k, v in by_top.items()},
        by_left_top={k: tuple(v) for k, v in by_left_top.items()},
    )


def sample_grid(d, rng, rows, cols):
    """A uniformly sampled composable grid from a full carrier."""
    grid = []
    for i in range(rows):
        row = []
        for j in range(cols):
            if i == 0 and j == 0:
                pool = d.squares
            elif i == 0:
                pool = d.by_left.get(row[j - 1].right, ())
            elif j == 0:
                pool = d.by_top.get(grid[i - 1][j].bottom, ())
            else:
                pool = d.by_left_top.get(
                    (row[j - 1].right, grid[i - 1][j].bottom), ()
                )
            if not pool:
                raise CompositionError("carrier has no square fitting the grid cell")
            row.append(rng.choice(pool))
        grid.append(row)
    return grid


def identity_edge_squares(d, x):
    """Squares at ``x`` whose four edges are all the identity."""
    i = d.xm.p.id_of[x]
    return tuple(
        s
        for s in d.by_left_top.get((i, i), ())
        if s.right == i and s.bottom == i
    )


def to_xmod(d, name=""):
    """Recover a crossed module from the carrier: the fibre at ``x`` is the
    squares whose top, left, and bottom edges are identities, multiplied by
    vertical pasting; the boundary reads off the right edge; arrows act by
    sandwiching between horizontal identities."""
    xm = d.xm
    p = xm.p
    groups, mus, action = {}, {}, {}
    for x in p.objects:
        i = p.id_of[x]
        elems = tuple(
            s
            for s in d.squares
            if s.top == i and s.left == i and s.bottom == i
        )
        table = {(s, t): vcompose(xm, s, t) for s in elems for t in elems}
        groups[x] = finite_group(
            elems, table, unit=double_identity(xm, x), name=f"fibre@{x!r}"
        )
        mus[x] = {s: s.right for s in elems}
    for a in p.arrows:
        x = p.src[a]
        before = hidentity(xm, p.inverse(a))
        after = hidentity(xm, a)
        for s in groups[x].elements:
            action[(s, a)] = vcompose(xm, vcompose(xm, before, s), after)
    return CrossedModule(
        p=p, m=groups, mu=mus, action=action, name=name or f"recovered({xm.name})"
    )


def round_trip_isomorphism(xm, recovered):
    """The label-indexing map from a crossed module onto the one recovered
    from its square carrier."""
    p = xm.p
    mmap = {}
    for x in p.objects:
        i = p.id_of[x]
        mmap[x] = {
            m: LabeledSquare(label=m, top=i, left=i, right=xm.mu[x][m], bottom=i)
            for m in xm.m[x].elements
        }
    return XModMorphism(
        source=xm,
        target=recovered,
        omap={x: x for x in p.objects},
        amap={a: a for a in p.arrows},
        mmap=mmap,
    )


@dataclass(frozen=True)
class CommSquare:
    """A commutative square in a groupoid: left-then-bottom equals
    top-then-right."""

    left: object
    top: object
    bottom: object
    right: object


def comm_square(g, left, top, bottom, right):
    for e in (left, top, bottom, right):
        if e not in g.src:
            raise ValidationError("unknown edge", witness=e)
    if g.src[left] != g.src[top]:
        raise ValidationError("left and top must share their source", witness=(left, top))
    if g.tgt[left] != g.src[bottom] or g.tgt[top] != g.src[right]:
        raise ValidationError(
            "edges do not frame a square", witness=(left, top, bottom, right)
        )
    if g.compose(left, bottom) != g.compose(top, right):
        raise ValidationError(
            "square does not commute",
            witness=(g.compose(left, bottom), g.compose(top, right)),
        )
    return CommSquare(left=left, top=top, bottom=bottom, right=right)


def comm_compose_h(g, q1, q2):
    if q1.right != q2.left:
        raise CompositionError(
            f"squares do not compose horizontally: {q1.right!r} vs {q2.left!r}"
        )
    return CommSquare(
        left=q1.left,
        top=g.compose(q1.top, q2.top),
        bottom=g.compose(q1.bottom, q2.bottom),
        right=q2.right,
    )


def comm_compose_v(g, q1, q2):
    if q1.bottom != q2.top:
        raise CompositionError(
            f"squares do not compose vertically: {q1.bottom!r} vs {q2.top!r}"
        )
    return CommSquare(
        left=g.compose(q1.left, q2.left),
        top=q1.top,
        bottom=q2.bottom,
        right=g.compose(q1.right, q2.right),
    )


def row_uniqueness(g, squares):
    """Fold a composable row of commutative squares whose outer vertical
    edges are identities; the top and bottom composites must agree, and the
    common value is returned."""
    if not squares:
        raise ValidationError("empty row")
    folded = squares[0]
    for q in squares[1:]:
        folded = comm_compose_h(g, folded, q)
    for side, arrow in (("left", folded.left), ("right", folded.right)):
        if arrow != g.id_of[g.src[arrow]]:
            raise HypothesisError(f"outer {side} edge is not an identity: {arrow!r}")
    if folded.top != folded.bottom:
        raise ValidationError(
            "commutativity was violated along the row",
            witness=(folded.top, folded.bottom),
        )
    return folded.top


def comm_of_labeled(xm, s):
    """View a thin square over a trivial-fibre crossed module as a
    commutative square of the base groupoid."""
    if s.label != xm.m[square_base(xm, s)].unit:
        raise ValidationError("square is not thin", witness=s.label)
    return comm_square(xm.p, left=s.left, top=s.top, bottom=s.bottom, right=s.right)


def labeled_of_comm(xm, q):
    base = xm.p.tgt[q.bottom]
    return make_square(
        xm,
        xm.m[base].unit,
        top=q.top,
        left=q.left,
        right=q.right,
        bottom=q.bottom,
    )


@dataclass(frozen=True)
class Cube:
    """Twelve group elements on the edges of a cube.

    Verticals run top face to bottom face; back/front edges run left to
    right on their faces; left/right edges run back to front.  Each face
    carries the commutativity convention of CommSquare after flattening.
    """

    back_left: object
    back_right: object
    front_left: object
    front_right: object
    top_left: object
    top_back: object
    top_front: object
    top_right: object
    bottom_left: object
    bottom_back: object
    bottom_front: object
    bottom_right: object


CUBE_EDGES = (
    "back_left",
    "back_right",
    "front_left",
    "front_right",
    "top_left",
    "top_back",
    "top_front",
    "top_right",
    "bottom_left",
    "bottom_back",
    "bottom_front",
    "bottom_right",
)

CUBE_FACES = ("bottom", "back", "front", "left", "right", "top")


def cube(group, **edges):
    missing = [e for e in CUBE_EDGES if e not in edges]
    if missing or set(edges) - set(CUBE_EDGES):
        raise ValidationError(
            "cube needs exactly the twelve named edges",
            witness=tuple(missing or sorted(set(edges) - set(CUBE_EDGES))),
        )
    for e, v in edges.items():
        if v not in group.elements:
            raise ValidationError("edge value outside the group", witness=(e, v))
    return Cube(**edges)


def cube_face(c, name):
    """The face as a ``(left, top, bottom, right)`` quadruple."""
    quads = {
        "bottom": (c.bottom_left, c.bottom_back, c.bottom_front, c.bottom_right),
        "top": (c.top_left, c.top_back, c.top_front, c.top_right),
        "back": (c.back_left, c.top_back, c.bottom_back, c.back_right),
        "front": (c.front_left, c.top_front, c.bottom_front, c.front_right),
        "left": (c.top_left, c.back_left, c.front_left, c.bottom_left),
        "right": (c.back_right, c.top_right, c.bottom_right, c.front_right),
    }
    return quads[name]


def _face_commutes(group, quad):
    left, top, bottom, right = quad
    return group.mul(left, bottom) == group.mul(top, right)


@dataclass(frozen=True)
class CubeReport:
    ok: bool
    failing_faces: tuple
    composite: object
    top_face: tuple

    def __bool__(self):
        return self.ok


def commutative_cube_check(group, c):
    """Check that five commuting faces force the sixth.

    The five non-top faces are checked first; any failure is reported by
    face name.  The cube is then flattened into a 3x3 grid of commutative
    squares whose composite is compared against the top face.
    """
    bad = tuple(
        name
        for name in ("bottom", "back", "front", "left", "right")
        if not _face_commutes(group, cube_face(c, name))
    )
    top = cube_face(c, "top")
    if bad:
        return CubeReport(ok=False, failing_faces=bad, composite=None, top_face=top)
    g0 = from_group(group)
    e = group.unit
    inv = group.inv

    def cs(left, top_, bottom, right):
        return comm_square(g0, left, top_, bottom, right)

    grid = [
        [
            cs(e, e, c.back_left, c.back_left),
            cs(c.back_left, c.top_back, c.bottom_back, c.back_right),
            cs(c.back_right, e, inv(c.back_right), e),
        ],
        [
            cs(c.top_left, c.back_left, c.front_left, c.bottom_left),
            cs(c.bottom_left, c.bottom_back, c.bottom_front, c.bottom_right),
            cs(c.bottom_right, inv(c.back_right), inv(c.front_right), c.top_right),
        ],
        [
            cs(e, c.front_left, e, inv(c.front_left)),
            cs(inv(c.front_left), c.bottom_front, c.top_front, inv(c.front_right)),
            cs(inv(c.front_right), inv(c.front_right), e, e),
        ],
    ]
    strips = []
    for row in grid:
        strip = row[0]
        for q in row[1:]:
            strip = comm_compose_h(g0, strip, q)
        strips.append(strip)
    folded = strips[0]
    for strip in strips[1:]:
        folded = comm_compose_v(g0, folded, strip)
    composite = (folded.left, folded.top, folded.bottom, folded.right)
    ok = composite == top and _face_commutes(group, top)
    return CubeReport(ok=ok, failing_faces=(), composite=composite, top_face=top)


def random_commutative_cube(group, rng):
    """Pick seven edges freely and solve for the rest; every face of the
    result commutes."""

    def pick():
        return rng.choice(group.elements)

    bottom_left, bottom_back, bottom_front = pick(), pick(), pick()
    a, b, c, d = pick(), pick(), pick(), pick()
    mul, inv = group.mul, group.inv
    bottom_right = mul(inv(bottom_back), mul(bottom_left, bottom_front))
    top_back = mul(a, mul(bottom_back, inv(b)))
    top_left = mul(a, mul(bottom_left, inv(c)))
    top_front = mul(c, mul(bottom_front, inv(d)))
    top_right = mul(b, mul(bottom_right, inv(d)))
    return cube(
        group,
        back_left=a,
        back_right=b,
        front_left=c,
        front_right=d,
        top_left=top_left,
        top_back=top_back,
        top_front=top_front,
        top_right=top_right,
        bottom_left=bottom_left,
        bottom_back=bottom_back,
        bottom_front=bottom_front,
        bottom_right=bottom_right,
    )


def perturb_cube(c, edge, value):
    return replace(c, **{edge: value})


def random_cube_sharing(group, rng, c1, direction):
    """A random commutative cube that glues onto ``c1`` in ``direction``:
    the shared face is copied from ``c1`` and the remaining free edges are
    sampled, with the rest solved from the face equations."""
    mul, inv = group.mul, group.inv

    def pick():
        return rng.choice(group.elements)

    if direction == "v":
        a, b, cv, d = pick(), pick(), pick(), pick()
        tl, tb, tf, tr = (
            c1.bottom_left,
            c1.bottom_back,
            c1.bottom_front,
            c1.bottom_right,
        )
        return cube(
            group,
            back_left=a,
            back_right=b,
            front_left=cv,
            front_right=d,
            top_left=tl,
            top_back=tb,
            top_front=tf,
            top_right=tr,
            bottom_left=mul(inv(a), mul(tl, cv)),
            bottom_back=mul(inv(a), mul(tb, b)),
            bottom_front=mul(inv(cv), mul(tf, d)),
            bottom_right=mul(inv(b), mul(tr, d)),
        )
    if direction == "h":
        b, d = pick(), pick()
        top_back, top_front = pick(), pick()
        a, cv = c1.back_right, c1.front_right
        tl, bl = c1.top_right, c1.bottom_right
        bottom_back = mul(inv(a), mul(top_back, b))
        bottom_front = mul(inv(cv), mul(top_front, d))
        return cube(
            group,
            back_left=a,
            back_right=b,
            front_left=cv,
            front_right=d,
            top_left=tl,
            top_back=top_back,
            top_front=top_front,
            top_right=mul(inv(top_back), mul(tl, top_front)),
            bottom_left=bl,
            bottom_back=bottom_back,
            bottom_front=bottom_front,
            bottom_right=mul(inv(bottom_back), mul(bl, bottom_front)),
        )
    if direction == "d":
        cv, d = pick(), pick()
        top_left, top_front = pick(), pick()
        a, b = c1.front_left, c1.front_right
        tb, bb = c1.top_front, c1.bottom_front
        bottom_left = mul(inv(a), mul(top_left, cv))
        bottom_front = mul(inv(cv), mul(top_front, d))
        return cube(
            group,
            back_left=a,
            back_right=b,
            front_left=cv,
            front_right=d,
            top_left=top_left,
            top_back=tb,
            top_front=top_front,
            top_right=mul(inv(tb), mul(top_left, top_front)),
            bottom_left=bottom_left,
            bottom_back=bb,
            bottom_front=bottom_front,
            bottom_right=mul(inv(bb), mul(bottom_left, bottom_front)),
        )
    raise ValidationError("direction must be 'v', 'h', or 'd'", witness=direction)


_GLUE = {
    "v": {
        "shared": (
            ("bottom_left", "top_left"),
            ("bottom_back", "top_back"),
            ("bottom_front", "top_front"),
            ("bottom_right", "top_right"),
        ),
        "first": ("top_left", "top_back", "top_front", "top_right"),
        "second": ("bottom_left", "bottom_back", "bottom_front", "bottom_right"),
        "composed": ("back_left", "back_right", "front_left", "front_right"),
    },
    "h": {
        "shared": (
            ("back_right", "back_left"),
            ("front_right", "front_left"),
            ("top_right", "top_left"),
            ("bottom_right", "bottom_left"),
        ),
        "first": ("back_left", "front_left", "top_left", "bottom_left"),
        "second": ("back_right", "front_right", "top_right", "bottom_right"),
        "composed": ("top_back", "top_front", "bottom_back", "bottom_front"),
    },
    "d": {
        "shared": (
            ("front_left", "back_left"),
            ("front_right", "back_right"),
            ("top_front", "top_back"),
            ("bottom_front", "bottom_back"),
        ),
        "first": ("back_left", "back_right", "top_back", "bottom_back"),
        "second": ("front_left", "front_right", "top_front", "bottom_front"),
        "composed": ("top_left", "top_right", "bottom_left", "bottom_right"),
    },
}


def cube_glue(group, c1, c2, direction):
    """Glue two cubes along a shared face: ``v`` stacks ``c2`` below,
    ``h`` puts it to the right, ``d`` puts it in front."""
    if direction not in _GLUE:
        raise ValidationError("direction must be 'v', 'h', or 'd'", witness=direction)
    rule = _GLUE[direction]
    for e1, e2 in rule["shared"]:
        if getattr(c1, e1) != getattr(c2, e2):
            raise CompositionError(
                f"cubes do not glue: {e1}={getattr(c1, e1)!r} vs {e2}={getattr(c2, e2)!r}"
            )
    edges = {}
    for e in rule["first"]:
        edges[e] = getattr(c1, e)
    for e in rule["second"]:
        edges[e] = getattr(c2, e)
    for e in rule["composed"]:
        edges[e] = group.mul(getattr(c1, e), getattr(c2, e))
    return cube(group, **edges)


@dataclass(frozen=True)
class CubeComposeReport:
    ok: bool
    first: CubeReport
    second: CubeReport
    glued: CubeReport

    def __bool__(self):
        return self.ok


def cube_compose_check(group, c1, c2, direction):
    first = commutative_cube_check(group, c1)
    second = commutative_cube_check(group, c2)
    glued = commutative_cube_check(group, cube_glue(group, c1, c2, direction))
    return CubeComposeReport(
        ok=first.ok and second.ok and glued.ok,
        first=first,
        second=second,
        glued=glued,
    )


@dataclass(frozen=True)
class EHReport:
    """Outcome of the unit-collapse check: when two unital operations on one
    set satisfy interchange, the units coincide, the operations agree, and
    the common operation is commutative."""

    ok: bool
    witness: object
    units_equal: object = None
    ops_equal: object = None
    commutative: object = None

    def __bool__(self):
        return self.ok


def eckmann_hilton_check(elements, op1, op2, unit1, unit2):
    elements = tuple(elements)
    eset = set(elements)
    for name, op in (("op1", op1), ("op2", op2)):
        for a, b in product(elements, repeat=2):
            v = op.get((a, b))
            if v not in eset:
                raise ValidationError(
                    f"{name} is not total or not closed", witness=(a, b, v)
                )
    for name, op, unit in (("op1", op1, unit1), ("op2", op2, unit2)):
        if unit not in eset:
            raise ValidationError(f"{name} unit outside the set", witness=unit)
        for a in elements:
            if op[(unit, a)] != a or op[(a, unit)] != a:
                return EHReport(ok=False, witness=(f"{name}-unit", a))
    for a, b, c, d in product(elements, repeat=4):
        lhs = op2[(op1[(a, b)], op1[(c, d)])]
        rhs = op1[(op2[(a, c)], op2[(b, d)])]
        if lhs != rhs:
            return EHReport(ok=False, witness=("interchange", (a, b, c, d)))
    units_equal = unit1 == unit2
    ops_equal = all(op1[(a, b)] == op2[(a, b)] for a, b in product(elements, repeat=2))
    commutative = all(
        op1[(a, b)] == op1[(b, a)] for a, b in product(elements, repeat=2)
    )
    return EHReport(
        ok=units_equal and ops_equal and commutative,
        witness=None,
        units_equal=units_equal,
        ops_equal=ops_equal,
        commutative=commutative,
    )


def eh_instance_from_squares(d, x):
    """The restricted pastings on the all-identity-edge squares at ``x``,
    packaged for the unit-collapse check."""
    elements = identity_edge_squares(d, x)
    op1 = {
        (s, t): hcompose(d.xm, s, t) for s in elements for t in elements
    }
    op2 = {
        (s, t): vcompose(d.xm, s, t) for s in elements for t in elements
    }
    unit = double_identity(d.xm, x)
    return elements, op1, op2, unit, unit
