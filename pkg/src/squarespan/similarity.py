"""Canonical forms of point sets under plane similarity (rotation, scaling,
translation, reflection).

Two complete invariants are provided:

* ``canonical_key`` -- the reference form.  Identifying each point with the
  Gaussian rational x + iy, every ordered pair (p, q) and each of
  {identity, conjugation} induces the map z -> (s(z) - s(p)) / (s(q) - s(p));
  the key is the lexicographically minimal sorted image over all
  2*n*(n-1) candidates, serialized to bytes.  O(n^3) Fraction arithmetic.

* ``centered_key`` -- a fast complete invariant used by the search code.
  Coordinates are centered on the centroid (scaled by n to stay integral)
  and reduced by their content; the residual rotation/scale/reflection
  freedom is removed by dividing by a point of maximal norm, minimizing the
  encoded image over all maximal-norm points and both reflections.  The
  centroid is similarity-equivariant and maximal-norm points map to
  maximal-norm points, so equal keys characterize similar sets exactly as
  for ``canonical_key`` (the two partitions are property-tested against
  each other).

Both keys require at least two points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .geometry import Point, PointSet


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Serialized canonical form; equal keys iff similar point sets."""

    data: bytes

    @property
    def text(self) -> str:
        return self.data.decode("ascii")


def normalize_to_grid(ps: PointSet) -> PointSet:
    """Translate the lower-left bounding corner to the origin and divide out
    the content (gcd of all coordinates).  A similarity-preserving integer
    normal form for storage and display."""
    return PointSet(_normalize(ps.points))


def _normalize(pts: tuple[Point, ...]) -> tuple[Point, ...]:
    minx = min(x for x, _ in pts)
    miny = min(y for _, y in pts)
    g = 0
    for x, y in pts:
        g = gcd(g, x - minx)
        g = gcd(g, y - miny)
    if g == 0:
        g = 1  # single point at origin
    return tuple(((x - minx) // g, (y - miny) // g) for x, y in pts)


# ---------------------------------------------------------------------------
# Reference canonical key (pair sweep over Gaussian rationals).
# ---------------------------------------------------------------------------


def canonical_key(ps: PointSet) -> CanonicalKey:
    """Reference canonical form under similarity, including reflections."""
    pts = ps.points
    if len(pts) < 2:
        raise ValueError("canonical key needs at least two points")
    best = None
    for conj in (False, True):
        spts = [(x, -y) for x, y in pts] if conj else list(pts)
        for px, py in spts:
            for qx, qy in spts:
                dx = qx - px
                dy = qy - py
                if dx == 0 and dy == 0:
                    continue
                nrm = dx * dx + dy * dy
                image = sorted(
                    (
                        Fraction((zx - px) * dx + (zy - py) * dy, nrm),
                        Fraction((zy - py) * dx - (zx - px) * dy, nrm),
                    )
                    for zx, zy in spts
                )
                if best is None or image < best:
                    best = image
    return CanonicalKey(_serialize_rational_points(best))


def _serialize_rational_points(image) -> bytes:
    parts = []
    for x, y in image:
        parts.append(
            f"{x.numerator}/{x.denominator},{y.numerator}/{y.denominator}"
        )
    return ";".join(parts).encode("ascii")


def similar(a: PointSet, b: PointSet) -> bool:
    """True iff the two sets are related by a plane similarity."""
    if len(a) != len(b):
        return False
    return canonical_key(a) == canonical_key(b)


# ---------------------------------------------------------------------------
# Fast complete invariant.
# ---------------------------------------------------------------------------


def centered_key(pts: tuple[Point, ...]) -> tuple[int, ...]:
    """Fast complete similarity invariant of a tuple of distinct points.

    Returns a flat int tuple: (common denominator, x1, y1, ..., xn, yn)
    of the minimal centered image in lowest terms.
    """
    n = len(pts)
    if n < 2:
        raise ValueError("centered key needs at least two points")
    sx = 0
    sy = 0
    for x, y in pts:
        sx += x
        sy += y
    w = [(n * x - sx, n * y - sy) for x, y in pts]
    g = 0
    for x, y in w:
        g = gcd(g, x)
        g = gcd(g, y)
    if g > 1:
        w = [(x // g, y // g) for x, y in w]
    best_norm = -1
    cands = []
    for x, y in w:
        nm = x * x + y * y
        if nm > best_norm:
            best_norm = nm
            cands = [(x, y)]
        elif nm == best_norm:
            cands.append((x, y))
    best = None
    for ux, uy in cands:
        fwd = [(x * ux + y * uy, y * ux - x * uy) for x, y in w]
        for flip in (False, True):
            v = [(x, -y) for x, y in fwd] if flip else fwd
            enc = _encode_image(best_norm, v)
            if best is None or enc < best:
                best = enc
    return best


def centered_key_marked(pts: tuple[Point, ...], marked: Point) -> tuple[int, ...]:
    """Variant of ``centered_key`` for a point set with one marked point.

    Equal keys iff some similarity maps one set onto the other carrying
    marked point to marked point.  The marked point's image is appended to
    the encoding.
    """
    n = len(pts)
    if n < 2:
        raise ValueError("centered key needs at least two points")
    if marked not in pts:
        raise ValueError("marked point must belong to the set")
    sx = 0
    sy = 0
    for x, y in pts:
        sx += x
        sy += y
    mx, my = n * marked[0] - sx, n * marked[1] - sy
    w = [(n * x - sx, n * y - sy) for x, y in pts]
    g = 0
    for x, y in w:
        g = gcd(g, x)
        g = gcd(g, y)
    if g > 1:
        w = [(x // g, y // g) for x, y in w]
        mx //= g
        my //= g
    best_norm = max(x * x + y * y for x, y in w)
    best = None
    for ux, uy in w:
        if ux * ux + uy * uy != best_norm:
            continue
        fwd = [(x * ux + y * uy, y * ux - x * uy) for x, y in w]
        fm = (mx * ux + my * uy, my * ux - mx * uy)
        for flip in (False, True):
            if flip:
                v = [(x, -y) for x, y in fwd]
                vm = (fm[0], -fm[1])
            else:
                v = fwd
                vm = fm
            enc = _encode_image(best_norm, v, vm)
            if best is None or enc < best:
                best = enc
    return best


def _encode_image(denom: int, v, extra: Point | None = None) -> tuple[int, ...]:
    g = denom
    for x, y in v:
        g = gcd(g, x)
        g = gcd(g, y)
    if extra is not None:
        g = gcd(gcd(g, extra[0]), extra[1])
    if g > 1:
        v = [(x // g, y // g) for x, y in v]
        denom //= g
        if extra is not None:
            extra = (extra[0] // g, extra[1] // g)
    out = [denom]
    for x, y in sorted(v):
        out.append(x)
        out.append(y)
    if extra is not None:
        out.append(extra[0])
        out.append(extra[1])
    return tuple(out)


def key_to_pointset(key: tuple[int, ...], marked: bool = False):
    """Integer representative of a ``centered_key`` class: the key's own
    numerator points, grid-normalized.  Deterministic across platforms.

    For a marked key returns (PointSet, marked point) with the marked
    point expressed in the representative's coordinates.
    """
    coords = key[1:-2] if marked else key[1:]
    pts = [(coords[i], coords[i + 1]) for i in range(0, len(coords), 2)]
    minx = min(x for x, _ in pts)
    miny = min(y for _, y in pts)
    g = 0
    for x, y in pts:
        g = gcd(g, x - minx)
        g = gcd(g, y - miny)
    if g == 0:
        g = 1
    ps = PointSet.of(((x - minx) // g, (y - miny) // g) for x, y in pts)
    if not marked:
        return ps
    mp = ((key[-2] - minx) // g, (key[-1] - miny) // g)
    if mp not in ps:
        raise ValueError("marked image missing from key points")
    return ps, mp


# ---------------------------------------------------------------------------
# Exact similarity images (testing and verification support).
# ---------------------------------------------------------------------------


def similarity_image(
    ps: PointSet,
    a: tuple[Fraction, Fraction],
    b: tuple[Fraction, Fraction],
    conjugate: bool = False,
) -> PointSet:
    """Image of the set under z -> a*s(z) + b (s = conjugation if requested),
    rescaled by the common denominator so the result is again integral.
    ``a`` must be nonzero; the rescaling is itself a similarity, so the
    image is similar to the input."""
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    if ax == 0 and ay == 0:
        raise ValueError("similarity scale factor must be nonzero")
    out = []
    denom = 1
    for x, y in ps.points:
        if conjugate:
            y = -y
        ix = ax * x - ay * y + bx
        iy = ax * y + ay * x + by
        out.append((ix, iy))
        denom = denom * ix.denominator // gcd(denom, ix.denominator)
        denom = denom * iy.denominator // gcd(denom, iy.denominator)
    return PointSet.of((int(ix * denom), int(iy * denom)) for ix, iy in out)
