# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact-arithmetic kernel.

Mirrors ``pure.py`` operation for operation (same Bland pivoting, same row
order) so both kernels return bit-identical results; the speed comes from
working on flat (numerator, denominator) integer pairs instead of Fraction
objects. Denominators are kept positive and gcd-reduced after every
operation, so integer growth stays bounded at desk scale.
"""

from fractions import Fraction
from math import gcd

KERNEL_NAME = "compiled"


cdef inline void _set_sub(list row, Py_ssize_t j, object an, object ad,
                          object tn, object td):
    # row[j] <- an/ad - tn/td, normalized; ad and td are positive.
    cdef object rn = an * td - tn * ad
    cdef object rd
    cdef object g
    if rn == 0:
        row[j] = 0
        row[j + 1] = 1
    else:
        rd = ad * td
        g = gcd(rn, rd)
        if g > 1:
            rn //= g
            rd //= g
        row[j] = rn
        row[j + 1] = rd


cdef void _row_axpy(list row, list prow, object fn, object fd, Py_ssize_t nslots):
    # row -= (fn/fd) * prow over nslots/2 rational entries.
    cdef Py_ssize_t j
    cdef object pn, pd
    for j in range(0, nslots, 2):
        pn = prow[j]
        if pn == 0:
            continue
        pd = prow[j + 1]
        _set_sub(row, j, row[j], row[j + 1], fn * pn, fd * pd)


cdef void _row_scale(list row, object sn, object sd, Py_ssize_t nslots):
    # row *= sn/sd with sd positive.
    cdef Py_ssize_t j
    cdef object rn, rd, g
    for j in range(0, nslots, 2):
        rn = row[j]
        if rn == 0:
            continue
        rn = rn * sn
        rd = row[j + 1] * sd
        if rn == 0:
            row[j] = 0
            row[j + 1] = 1
            continue
        g = gcd(rn, rd)
        if g > 1:
            rn //= g
            rd //= g
        row[j] = rn
        row[j + 1] = rd


cdef list _flat_from_fractions(row):
    cdef list out = []
    for x in row:
        f = Fraction(x)
        out.append(f.numerator)
        out.append(f.denominator)
    return out


def rref(rows, ncols):
    """Reduced row echelon form; same contract as the pure kernel."""
    cdef list mat = [_flat_from_fractions(row_in) for row_in in rows]
    cdef Py_ssize_t m = len(mat)
    cdef Py_ssize_t width = 0
    if m:
        width = len(<list>mat[0])
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, pr
    cdef list row_r, row_i
    cdef object fn, fd
    for c in range(ncols):
        pr = -1
        for i in range(r, m):
            if (<list>mat[i])[2 * c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            mat[r], mat[pr] = mat[pr], mat[r]
        row_r = <list>mat[r]
        if not (row_r[2 * c] == 1 and row_r[2 * c + 1] == 1):
            # multiply by the inverse of the pivot, keeping denominator > 0
            fn = row_r[2 * c + 1]
            fd = row_r[2 * c]
            if fd < 0:
                fn = -fn
                fd = -fd
            _row_scale(row_r, fn, fd, width)
        for i in range(m):
            if i != r:
                row_i = <list>mat[i]
                if row_i[2 * c] != 0:
                    _row_axpy(row_i, row_r, row_i[2 * c], row_i[2 * c + 1], width)
        pivots.append(c)
        r += 1
        if r == m:
            break
    out = [[Fraction(row[2 * j], row[2 * j + 1]) for j in range(width // 2)]
           for row in mat]
    return out, pivots


def lp_phase1(rows, rels, rhs, nvars, nonneg):
    """Exact LP feasibility; same contract and pivoting as the pure kernel."""
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t nx = nvars if nonneg else 2 * nvars
    cdef Py_ssize_t i, j

    work = []
    for a, rel, b in zip(rows, rels, rhs):
        b = Fraction(b)
        a = [Fraction(x) for x in a]
        if b < 0:
            a = [-x for x in a]
            b = -b
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        work.append((a, rel, b))

    slack_of = {}
    art_of = {}
    cdef Py_ssize_t ncols = nx
    for i in range(m):
        if work[i][1] != "=":
            slack_of[i] = ncols
            ncols += 1
    art_cols = set()
    for i in range(m):
        if work[i][1] != "<=":
            art_of[i] = ncols
            art_cols.add(ncols)
            ncols += 1

    cdef Py_ssize_t nslots = 2 * (ncols + 1)
    cdef list tab = []
    cdef list basis = []
    for i in range(m):
        a, rel, b = work[i]
        row = [0, 1] * (ncols + 1)
        for j in range(len(a)):
            v = a[j]
            if v != 0:
                row[2 * j] = v.numerator
                row[2 * j + 1] = v.denominator
                if not nonneg:
                    row[2 * (nvars + j)] = -v.numerator
                    row[2 * (nvars + j) + 1] = v.denominator
        if rel == "<=":
            row[2 * slack_of[i]] = 1
            basis.append(slack_of[i])
        elif rel == ">=":
            row[2 * slack_of[i]] = -1
            row[2 * art_of[i]] = 1
            basis.append(art_of[i])
        else:
            row[2 * art_of[i]] = 1
            basis.append(art_of[i])
        row[2 * ncols] = b.numerator
        row[2 * ncols + 1] = b.denominator
        tab.append(row)

    cdef list zrow = [0, 1] * (ncols + 1)
    for i in range(m):
        if basis[i] in art_cols:
            _row_axpy(zrow, <list>tab[i], 1, 1, nslots)

    cdef Py_ssize_t enter, pr
    cdef object bn, bd, cn, cd, piv_n, piv_d
    while True:
        enter = -1
        for j in range(ncols):
            if j in art_cols:
                continue
            if zrow[2 * j] < 0:
                enter = j
                break
        if enter < 0:
            break
        pr = -1
        bn = None
        bd = None
        for i in range(m):
            row = <list>tab[i]
            cn = row[2 * enter]
            if cn > 0:
                cd = row[2 * enter + 1]
                # candidate ratio rhs/coef = (rn/rd) * (cd/cn), positive denoms
                rn = row[2 * ncols] * cd
                rd = row[2 * ncols + 1] * cn
                if pr < 0:
                    bn, bd, pr = rn, rd, i
                else:
                    cmp = rn * bd - bn * rd
                    if cmp < 0 or (cmp == 0 and basis[i] < basis[pr]):
                        bn, bd, pr = rn, rd, i
        if pr < 0:
            raise AssertionError("phase-1 simplex: unbounded improving column")
        prow = <list>tab[pr]
        piv_n = prow[2 * enter]
        piv_d = prow[2 * enter + 1]
        if not (piv_n == 1 and piv_d == 1):
            # row *= 1/pivot with the sign carried by the numerator
            if piv_n < 0:
                _row_scale(prow, -piv_d, -piv_n, nslots)
            else:
                _row_scale(prow, piv_d, piv_n, nslots)
        for i in range(m):
            if i != pr:
                row = <list>tab[i]
                if row[2 * enter] != 0:
                    _row_axpy(row, prow, row[2 * enter], row[2 * enter + 1], nslots)
        if zrow[2 * enter] != 0:
            _row_axpy(zrow, prow, zrow[2 * enter], zrow[2 * enter + 1], nslots)
        basis[pr] = enter

    infeas = Fraction(0)
    for i in range(m):
        if basis[i] in art_cols:
            row = <list>tab[i]
            infeas += Fraction(row[2 * ncols], row[2 * ncols + 1])
    if infeas != 0:
        return None

    xx = [Fraction(0)] * ncols
    for i in range(m):
        row = <list>tab[i]
        xx[basis[i]] = Fraction(row[2 * ncols], row[2 * ncols + 1])
    if nonneg:
        return xx[:nvars]
    return [xx[j] - xx[nvars + j] for j in range(nvars)]
