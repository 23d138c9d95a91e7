"""Exact rational linear algebra: ranks, affine hulls, affine maps.

Vectors are sequences of ``fractions.Fraction`` (ints are accepted and
coerced); matrices are lists of such rows. Affine maps are stored sparsely
by row because reduction targets can have tens of thousands of coordinates
of which only a handful are nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ._kernel import rref
from .errors import ValidationError

QQ = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def _as_fractions(vec: Sequence) -> list[Fraction]:
    return [x if isinstance(x, Fraction) else Fraction(x) for x in vec]


def matrix_rank(rows: Sequence[Sequence], ncols: int) -> int:
    """Rank of a rational matrix."""
    if not rows:
        return 0
    _, pivots = rref([_as_fractions(r) for r in rows], ncols)
    return len(pivots)


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space of a rational matrix."""
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref([_as_fractions(r) for r in rows], ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for r, p in enumerate(pivots):
            vec[p] = -red[r][free]
        basis.append(vec)
    return basis


def solve_linear(rows: Sequence[Sequence], ncols: int, rhs: Sequence) -> list[Fraction] | None:
    """One exact solution of ``A x = b`` (free variables set to 0), or None."""
    aug = [_as_fractions(r) + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols)
    for row in red[len(pivots):]:
        if row[ncols] != 0:
            return None
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return x


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a nonempty point set.

    Equals the rank of the differences against the first point, so a single
    point has rank 0 and the full d-cube rank d.
    """
    if not points:
        raise ValidationError("affine_rank: empty point set")
    pts = [_as_fractions(p) for p in points]
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValidationError("affine_rank: points of unequal length")
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    return matrix_rank(diffs, d) if diffs else 0


class AffineMap:
    """Exact affine map ``x -> M x + c`` with sparse row storage.

    ``rows`` maps an output coordinate index to ``(coeffs, offset)`` where
    ``coeffs`` is a sparse dict over input coordinates. Absent rows are
    identically zero.
    """

    __slots__ = ("d_in", "d_out", "rows")

    def __init__(self, d_in: int, d_out: int,
                 rows: Mapping[int, tuple[Mapping[int, Fraction], Fraction]]):
        self.d_in = d_in
        self.d_out = d_out
        cleaned: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
        for r, (coeffs, off) in rows.items():
            if not 0 <= r < d_out:
                raise ValidationError(f"AffineMap: row {r} out of range")
            cc = {j: Fraction(v) for j, v in coeffs.items() if v != 0}
            if any(not 0 <= j < d_in for j in cc):
                raise ValidationError("AffineMap: column index out of range")
            off = Fraction(off)
            if cc or off != 0:
                cleaned[r] = (cc, off)
        self.rows = cleaned

    @classmethod
    def identity(cls, d: int) -> "AffineMap":
        return cls(d, d, {i: ({i: ONE}, ZERO) for i in range(d)})

    def __eq__(self, other) -> bool:
        return (isinstance(other, AffineMap) and self.d_in == other.d_in
                and self.d_out == other.d_out and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"AffineMap(d_in={self.d_in}, d_out={self.d_out}, nonzero_rows={len(self.rows)})"

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.d_in:
            raise ValidationError("AffineMap.apply: dimension mismatch")
        v = _as_fractions(vec)
        out = [ZERO] * self.d_out
        for r, (coeffs, off) in self.rows.items():
            out[r] = sum((c * v[j] for j, c in coeffs.items()), off)
        return out

    def apply_support(self, support: Iterable[int]) -> dict[int, Fraction]:
        """Image of a 0/1 point given by its support; returns nonzero coords."""
        supp = set(support)
        out = {}
        for r, (coeffs, off) in self.rows.items():
            val = off + sum(c for j, c in coeffs.items() if j in supp)
            if val != 0:
                out[r] = val
        return out

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """The map ``x -> self(inner(x))``."""
        if inner.d_out != self.d_in:
            raise ValidationError("AffineMap.compose: dimension mismatch")
        rows: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
        for r, (coeffs, off) in self.rows.items():
            acc: dict[int, Fraction] = {}
            total_off = off
            for j, c in coeffs.items():
                inner_row = inner.rows.get(j)
                if inner_row is None:
                    continue
                icoeffs, ioff = inner_row
                total_off += c * ioff
                for k, ic in icoeffs.items():
                    acc[k] = acc.get(k, ZERO) + c * ic
            acc = {k: v for k, v in acc.items() if v != 0}
            if acc or total_off != 0:
                rows[r] = (acc, total_off)
        return AffineMap(inner.d_in, self.d_out, rows)

    def left_inverse(self) -> "AffineMap":
        """An affine map h with ``h(self(x)) = x`` for all x.

        Exists iff the linear part has full column rank; raises
        ValidationError otherwise. Only the nonzero rows of the map
        participate, so wide sparse maps stay cheap.
        """
        active = sorted(self.rows)
        # Transposed system: columns of M^T are the active rows of M.
        mt = []
        for j in range(self.d_in):
            mt.append([self.rows[r][0].get(j, ZERO) for r in active])
        hrows: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
        aug = [row + [ONE if i == k else ZERO for k in range(self.d_in)]
               for i, row in enumerate(mt)]
        red, pivots = rref(aug, len(active))
        for row in red[len(pivots):]:
            if any(row[len(active) + k] != 0 for k in range(self.d_in)):
                raise ValidationError("AffineMap.left_inverse: map is not injective")
        for k in range(self.d_in):
            coeffs = {}
            for r, p in enumerate(pivots):
                v = red[r][len(active) + k]
                if v != 0:
                    coeffs[active[p]] = v
            off = -sum((c * self.rows[j][1] for j, c in coeffs.items()), ZERO)
            hrows[k] = (coeffs, off)
        return AffineMap(self.d_out, self.d_in, hrows)


def find_affine_map(src: Sequence[Sequence], tgt: Sequence[Sequence]) -> AffineMap | None:
    """Affine map interpolating ``src[i] -> tgt[i]``, or None if impossible.

    When the source points affinely span their space the restriction of the
    returned map to that hull is the unique interpolant; otherwise free
    parameters are set to zero.
    """
    if len(src) != len(tgt):
        raise ValidationError("find_affine_map: point counts differ")
    if not src:
        raise ValidationError("find_affine_map: empty input")
    spts = [_as_fractions(p) for p in src]
    tpts = [_as_fractions(p) for p in tgt]
    d_in = len(spts[0])
    d_out = len(tpts[0])
    if any(len(p) != d_in for p in spts) or any(len(p) != d_out for p in tpts):
        raise ValidationError("find_affine_map: ragged points")
    # Shared coefficient matrix [src | 1] with every target coordinate as a
    # separate right-hand side, reduced in one pass.
    aug = [sp + [ONE] + tp for sp, tp in zip(spts, tpts)]
    red, pivots = rref(aug, d_in + 1)
    for row in red[len(pivots):]:
        if any(row[d_in + 1 + r] != 0 for r in range(d_out)):
            return None
    rows: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
    for r_out in range(d_out):
        coeffs = {}
        off = ZERO
        for r, p in enumerate(pivots):
            v = red[r][d_in + 1 + r_out]
            if v == 0:
                continue
            if p == d_in:
                off = v
            else:
                coeffs[p] = v
        if coeffs or off != 0:
            rows[r_out] = (coeffs, off)
    return AffineMap(d_in, d_out, rows)
