"""Pure-Python exact-arithmetic kernel.

Two hot primitives live here: a phase-1 simplex over rationals (LP
feasibility) and Gauss-Jordan reduction. They are mirrored by the compiled
twin in ``_core.pyx``; both must pivot identically (Bland's rule, first
nonzero pivot row) so results are bit-for-bit interchangeable.

All arithmetic is ``fractions.Fraction``; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

KERNEL_NAME = "pure"


def rref(rows, ncols):
    """Reduced row echelon form over the rationals.

    ``rows`` is a list of equal-length coefficient lists (length >= ncols;
    trailing columns are carried along as augmentation but never pivoted).
    Returns ``(reduced_rows, pivot_cols)``; the input is not mutated.
    """
    mat = [list(r) for r in rows]
    m = len(mat)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, m):
            if mat[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][c]
        if piv != 1:
            inv = ONE / piv
            mat[r] = [x * inv for x in mat[r]]
        row_r = mat[r]
        for i in range(m):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                row_i = mat[i]
                mat[i] = [a - f * b for a, b in zip(row_i, row_r)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return mat, pivots


def lp_phase1(rows, rels, rhs, nvars, nonneg):
    """Exact LP feasibility via phase-1 simplex with Bland's rule.

    ``rows[i]`` holds the coefficients of constraint i over ``nvars``
    variables, ``rels[i]`` is one of ``'<=', '=', '>='`` and ``rhs[i]`` the
    right-hand side. With ``nonneg`` the variables are additionally bounded
    below by zero; otherwise they are free (split internally).

    Returns a list of Fractions satisfying every constraint exactly, or
    ``None`` when the system is infeasible. Bland's rule guarantees
    termination despite degeneracy.
    """
    m = len(rows)
    nx = nvars if nonneg else 2 * nvars

    # Normalize: flip rows to make every right-hand side nonnegative.
    work = []
    for a, rel, b in zip(rows, rels, rhs):
        if b < 0:
            a = [-x for x in a]
            b = -b
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        work.append((list(a), rel, b))

    slack_of = {}
    art_of = {}
    ncols = nx
    for i, (_, rel, _) in enumerate(work):
        if rel != "=":
            slack_of[i] = ncols
            ncols += 1
    art_cols = set()
    for i, (_, rel, _) in enumerate(work):
        if rel != "<=":
            art_of[i] = ncols
            art_cols.add(ncols)
            ncols += 1

    # Tableau: m rows, ncols columns plus rhs in the last slot.
    tab = []
    basis = []
    for i, (a, rel, b) in enumerate(work):
        row = [ZERO] * (ncols + 1)
        for j, v in enumerate(a):
            if v != 0:
                if nonneg:
                    row[j] = v
                else:
                    row[j] = v
                    row[nvars + j] = -v
        if rel == "<=":
            row[slack_of[i]] = ONE
            basis.append(slack_of[i])
        elif rel == ">=":
            row[slack_of[i]] = -ONE
            row[art_of[i]] = ONE
            basis.append(art_of[i])
        else:
            row[art_of[i]] = ONE
            basis.append(art_of[i])
        row[ncols] = b
        tab.append(row)

    # Reduced-cost row for min(sum of artificials): price out the
    # artificial basic rows.
    zrow = [ZERO] * (ncols + 1)
    for i in range(m):
        if basis[i] in art_cols:
            row = tab[i]
            for j in range(ncols + 1):
                zrow[j] -= row[j]

    while True:
        enter = -1
        for j in range(ncols):
            if j in art_cols:
                continue
            if zrow[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        # Ratio test; ties broken by the smallest basic index (Bland).
        pr = -1
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][ncols] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pr]):
                    best = ratio
                    pr = i
        if pr < 0:
            # Phase-1 objective is bounded below by zero; an unbounded
            # improving direction cannot exist.
            raise AssertionError("phase-1 simplex: unbounded improving column")
        piv = tab[pr][enter]
        if piv != 1:
            inv = ONE / piv
            tab[pr] = [x * inv for x in tab[pr]]
        prow = tab[pr]
        for i in range(m):
            if i != pr and tab[i][enter] != 0:
                f = tab[i][enter]
                row = tab[i]
                tab[i] = [a - f * b for a, b in zip(row, prow)]
        f = zrow[enter]
        if f != 0:
            zrow = [a - f * b for a, b in zip(zrow, prow)]
        basis[pr] = enter

    infeas = ZERO
    for i in range(m):
        if basis[i] in art_cols:
            infeas += tab[i][ncols]
    if infeas != 0:
        return None

    xx = [ZERO] * ncols
    for i in range(m):
        xx[basis[i]] = tab[i][ncols]
    if nonneg:
        return xx[:nvars]
    return [xx[j] - xx[nvars + j] for j in range(nvars)]
