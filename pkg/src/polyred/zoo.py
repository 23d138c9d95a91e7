"""Constructors for the 0/1-polytope families, with canonical coordinate labels.

A vertex is stored as the frozenset of positions (into the family's
canonical label list) of its 1-entries; every family's label order is fixed
and documented on its enumerator so certificate files are portable.

Coordinate labels are tagged tuples:

    ('diag', i)        quadric diagonal x_ii, 1-based
    ('off', i, j)      quadric off-diagonal x_ij, i < j
    ('cut', i, j)      cut coordinate of edge {i, j}, i < j
    ('node', v)        graph-node coordinate (stable/cover sets)
    ('col', j)         packing/partition/double-covering column, 0-based
    ('ord', i, j)      linear-ordering coordinate y_ij, i < j
    ('cell', i, j)     assignment-matrix cell, 1-based
    ('triple', s,t,u)  three-index assignment coordinate
    ('tuple', i1..ip)  p-index assignment coordinate, p >= 4
    ('quad', e, f)     product coordinate of a quadratic lift, e before f
    ('slack', tag, ..) reserved for labeled slack coordinates in files
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product
from math import factorial

from .errors import ResourceGuardError, ValidationError
from .graphs import Graph, IncidenceMatrix
from .limits import StateCounter, check_vertex_budget, guard_states

LABEL_KINDS = ("diag", "off", "cut", "node", "col", "ord", "cell",
               "triple", "tuple", "quad", "slack")


@dataclass(frozen=True)
class VertexSet:
    """Vertex set of one concrete polytope instance.

    ``vertices`` are supports (frozensets of label positions), pairwise
    distinct and sorted by their sorted position tuple.
    """

    family: tuple
    labels: tuple
    vertices: tuple

    @cached_property
    def pos(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def dense(self, support) -> tuple:
        return tuple(1 if i in support else 0 for i in range(self.dim))

    def dense_vertices(self) -> list[tuple]:
        return [self.dense(v) for v in self.vertices]

    def vertex_index(self) -> set:
        return set(self.vertices)

    def validate(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("labels not distinct")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("vertices not distinct")
        d = self.dim
        for v in self.vertices:
            if any(not (0 <= i < d) for i in v):
                raise ValidationError("vertex support out of range")
        checker = vertex_checker(self.family)
        for v in self.vertices:
            if not checker(v):
                raise ValidationError(
                    f"vertex {sorted(v)} violates the defining system of {family_name(self.family)}")


def _sorted_vertices(supports) -> tuple:
    return tuple(sorted(set(supports), key=lambda s: tuple(sorted(s))))


def _make(family, labels, supports, validate=True) -> VertexSet:
    vs = VertexSet(family, tuple(labels), _sorted_vertices(supports))
    if validate:
        vs.validate()
    return vs


# ---------------------------------------------------------------------------
# Families and labels

def family_name(family) -> str:
    return family[0]


def family_labels(family) -> tuple:
    kind = family[0]
    if kind == "bqp":
        return bqp_labels(family[1])
    if kind == "cut":
        n = family[1]
        return tuple(("cut", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    if kind in ("ssp", "vcp"):
        return tuple(("node", v) for v in family[1].nodes)
    if kind in ("pack", "part", "dcp"):
        return tuple(("col", j) for j in range(family[1].n_cols))
    if kind == "lop":
        m = family[1]
        return tuple(("ord", i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1))
    if kind == "assignment":
        return assignment_labels(family[1], family[2])
    if kind == "row_assignment":
        m = family[1]
        return tuple(("cell", i, j) for i in range(1, m + 1) for j in range(1, m + 1))
    if kind == "qlop":
        base = family_labels(("lop", family[1]))
        return base + tuple(all_quad_pairs(base))
    if kind == "qsap":
        base = family_labels(("row_assignment", family[1]))
        return base + tuple(all_quad_pairs(base))
    if kind == "qap":
        base = family_labels(("assignment", family[1], 2))
        return base + tuple(all_quad_pairs(base))
    if kind == "lift":
        base = family_labels(family[1])
        return base + tuple(family[2])
    raise ValidationError(f"unknown family {family!r}")


def bqp_labels(n: int) -> tuple:
    """Diagonals first, then off-diagonals in lexicographic (i, j) order."""
    diags = [("diag", i) for i in range(1, n + 1)]
    offs = [("off", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(diags + offs)


def assignment_labels(m: int, p: int) -> tuple:
    if p == 2:
        kind = "cell"
    elif p == 3:
        kind = "triple"
    else:
        kind = "tuple"
    return tuple((kind,) + idx for idx in product(range(1, m + 1), repeat=p))


def all_quad_pairs(base_labels) -> list:
    """Product-coordinate labels for every base pair, in the pair order
    (i,j) before (k,l) iff the first label precedes the second canonically."""
    return [("quad", base_labels[a], base_labels[b])
            for a in range(len(base_labels)) for b in range(a + 1, len(base_labels))]


def family_param(family) -> tuple[str, int]:
    """The paper-facing size parameter of a family instance."""
    kind = family[0]
    if kind in ("bqp", "cut"):
        return ("n", family[1])
    if kind in ("ssp", "vcp"):
        return ("k", family[1].n_nodes)
    if kind in ("pack", "part", "dcp"):
        return ("d", family[1].n_cols)
    if kind == "assignment":
        return ("m", family[1])
    if kind in ("lop", "qlop", "qap", "qsap", "row_assignment"):
        return ("m", family[1])
    raise ValidationError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Enumerators

def enumerate_bqp(n: int) -> VertexSet:
    """All 2^n quadric vertices: lift x_ij = x_ii * x_jj of each diagonal."""
    if n < 1:
        raise ValidationError("bqp: n must be >= 1")
    check_vertex_budget("bqp", 2 ** n)
    family = ("bqp", n)
    labels = bqp_labels(n)
    pos = {lab: i for i, lab in enumerate(labels)}
    supports = []
    for bits in product((0, 1), repeat=n):
        supp = {pos[("diag", i + 1)] for i in range(n) if bits[i]}
        supp.update(pos[("off", i + 1, j + 1)]
                    for i in range(n) for j in range(i + 1, n)
                    if bits[i] and bits[j])
        supports.append(frozenset(supp))
    return _make(family, labels, supports)


def enumerate_cut(n: int) -> VertexSet:
    """Cut vectors of K_n indexed by subsets avoiding node n (2^(n-1) of them)."""
    if n < 2:
        raise ValidationError("cut: n must be >= 2")
    check_vertex_budget("cut", 2 ** (n - 1))
    family = ("cut", n)
    labels = family_labels(family)
    pos = {lab: i for i, lab in enumerate(labels)}
    supports = []
    for bits in product((0, 1), repeat=n - 1):
        inside = lambda v: bits[v - 1] if v < n else 0
        supp = frozenset(pos[("cut", i, j)]
                         for i in range(1, n + 1) for j in range(i + 1, n + 1)
                         if inside(i) != inside(j))
        supports.append(supp)
    return _make(family, labels, supports)


def _stable_sets(g: Graph, zero=frozenset(), one=frozenset(), what="ssp") -> list:
    """Backtracking stable-set enumeration with optional coordinate fixings."""
    k = g.n_nodes
    pos = {v: i for i, v in enumerate(g.nodes)}
    adj = [0] * k
    for u, v in g.edges:
        adj[pos[u]] |= 1 << pos[v]
        adj[pos[v]] |= 1 << pos[u]
    counter = StateCounter(what)
    out = []
    limit = guard_states()

    def rec(i: int, chosen: int, supp: list):
        counter.tick()
        if i == k:
            out.append(frozenset(supp))
            return
        if i not in one:
            rec(i + 1, chosen, supp)
        if i not in zero and not (adj[i] & chosen):
            supp.append(i)
            rec(i + 1, chosen | (1 << i), supp)
            supp.pop()

    rec(0, 0, [])
    if len(out) > limit:
        raise ResourceGuardError(f"{what}: too many stable sets")
    return out


def enumerate_ssp(g: Graph) -> VertexSet:
    """Characteristic vectors of all stable sets, by backtracking."""
    if g.n_nodes < 1:
        raise ValidationError("ssp: graph needs at least one node")
    return _make(("ssp", g), family_labels(("ssp", g)), _stable_sets(g))


def enumerate_vcp(g: Graph) -> VertexSet:
    """Vertex covers: coordinate complements of the stable sets."""
    if g.n_nodes < 1:
        raise ValidationError("vcp: graph needs at least one node")
    k = g.n_nodes
    full = frozenset(range(k))
    supports = [full - s for s in _stable_sets(g, what="vcp")]
    return _make(("vcp", g), family_labels(("vcp", g)), supports)


def _cover_solutions(a: IncidenceMatrix, cap: int, exact: bool,
                     fixed: dict | None = None, what: str = "cover") -> list:
    """0/1 solutions of the row system sum(x[row]) <= cap (or == cap).

    Row-wise pruning: a partial assignment dies as soon as a row exceeds the
    cap or, in exact mode, can no longer reach it.
    """
    d = a.n_cols
    fixed = fixed or {}
    col_rows = [[] for _ in range(d)]
    for r, row in enumerate(a.rows):
        for j in row:
            col_rows[j].append(r)
    cur = [0] * a.n_rows
    # Columns still undecided per row; lets exact mode prune infeasible rows.
    remaining = [len(row) for row in a.rows]
    counter = StateCounter(what)
    out = []

    def rec(j: int, supp: list):
        counter.tick()
        if j == d:
            if not exact or all(c == cap for c in cur):
                out.append(frozenset(supp))
            return
        force = fixed.get(j)
        for take in (0, 1):
            if force is not None and take != force:
                continue
            if take and any(cur[r] + 1 > cap for r in col_rows[j]):
                continue
            for r in col_rows[j]:
                remaining[r] -= 1
                cur[r] += take
            dead = exact and any(cur[r] + remaining[r] < cap for r in col_rows[j])
            if not dead:
                if take:
                    supp.append(j)
                rec(j + 1, supp)
                if take:
                    supp.pop()
            for r in col_rows[j]:
                remaining[r] += 1
                cur[r] -= take
    rec(0, [])
    return out


def enumerate_pack_part(a: IncidenceMatrix, mode: str) -> VertexSet:
    """0/1 solutions of A x <= 1 (pack) or A x = 1 (part), by backtracking.

    Partition instances may legitimately be empty.
    """
    if mode not in ("pack", "part"):
        raise ValidationError(f"mode must be 'pack' or 'part', got {mode!r}")
    if a.n_cols < 1:
        raise ValidationError("empty incidence matrix")
    family = (mode, a)
    sols = _cover_solutions(a, 1, mode == "part", what=mode)
    return _make(family, family_labels(family), sols)


def enumerate_dcp(b: IncidenceMatrix) -> VertexSet:
    """0/1 solutions of B x = 2 where every row of B has exactly four 1's."""
    b.require_row_weight(4)
    family = ("dcp", b)
    sols = _cover_solutions(b, 2, True, what="dcp")
    return _make(family, family_labels(family), sols)


def enumerate_lop(m: int) -> VertexSet:
    """Characteristic vectors of the m! linear orderings; y_ij = 1 iff i
    precedes j."""
    if m < 2:
        raise ValidationError("lop: m must be >= 2")
    check_vertex_budget("lop", factorial(m))
    family = ("lop", m)
    labels = family_labels(family)
    pos = {lab: i for i, lab in enumerate(labels)}
    supports = []
    for perm in permutations(range(1, m + 1)):
        rank = {v: r for r, v in enumerate(perm)}
        supports.append(frozenset(
            pos[("ord", i, j)]
            for i in range(1, m + 1) for j in range(i + 1, m + 1)
            if rank[i] < rank[j]))
    return _make(family, labels, supports)


def enumerate_assignment(m: int, p: int) -> VertexSet:
    """p-index assignment vertices: one per (p-1)-tuple of permutations.

    Coordinates are indexed by p-tuples over the ground set [m]; the vertex
    of (s1, ..., s_{p-1}) has support {(i, s1(i), ..., s_{p-1}(i))}.
    """
    if p < 2 or m < 1:
        raise ValidationError("assignment: need p >= 2 and m >= 1")
    check_vertex_budget("assignment", factorial(m) ** (p - 1))
    family = ("assignment", m, p)
    labels = family_labels(family)
    pos = {lab: i for i, lab in enumerate(labels)}
    kind = labels[0][0]
    perms = list(permutations(range(1, m + 1)))
    supports = []
    for combo in product(perms, repeat=p - 1):
        supp = frozenset(pos[(kind, s) + tuple(sigma[s - 1] for sigma in combo)]
                         for s in range(1, m + 1))
        supports.append(supp)
    return _make(family, labels, supports)


def enumerate_row_assignment(m: int) -> VertexSet:
    """0/1 matrices with all row sums 1 (m^m of them); the quadratic
    semi-assignment base."""
    if m < 1:
        raise ValidationError("row_assignment: m must be >= 1")
    check_vertex_budget("row_assignment", m ** m)
    family = ("row_assignment", m)
    labels = family_labels(family)
    pos = {lab: i for i, lab in enumerate(labels)}
    supports = []
    for choice in product(range(1, m + 1), repeat=m):
        supports.append(frozenset(pos[("cell", i + 1, choice[i])] for i in range(m)))
    return _make(family, labels, supports)


def quadratic_lift(base: VertexSet, pairs, family=None) -> VertexSet:
    """Extend every base vertex with the products of the given label pairs.

    Pairs must be ('quad', e, f) with e strictly before f in the base label
    order; the vertex count is preserved and distinct vertices stay distinct
    (the base block is embedded unchanged).
    """
    bpos = base.pos
    seen = set()
    for q in pairs:
        if len(q) != 3 or q[0] != "quad":
            raise ValidationError(f"not a product label: {q!r}")
        _, e, f = q
        if e not in bpos or f not in bpos:
            raise ValidationError(f"pair {q!r} references unknown base label")
        if bpos[e] >= bpos[f]:
            raise ValidationError(f"pair {q!r} violates the pair order")
        if q in seen:
            raise ValidationError(f"duplicate pair {q!r}")
        seen.add(q)
    pairs = tuple(pairs)
    if family is None:
        family = ("lift", base.family, pairs)
    labels = base.labels + pairs
    nbase = base.dim
    supports = []
    for supp in base.vertices:
        new = set(supp)
        for t, (_, e, f) in enumerate(pairs):
            if bpos[e] in supp and bpos[f] in supp:
                new.add(nbase + t)
        supports.append(frozenset(new))
    return _make(family, labels, supports)


def enumerate_qlop(m: int) -> VertexSet:
    base = enumerate_lop(m)
    return quadratic_lift(base, all_quad_pairs(base.labels), family=("qlop", m))


def enumerate_qap(m: int) -> VertexSet:
    base = enumerate_assignment(m, 2)
    return quadratic_lift(base, all_quad_pairs(base.labels), family=("qap", m))


def enumerate_qsap(m: int) -> VertexSet:
    base = enumerate_row_assignment(m)
    return quadratic_lift(base, all_quad_pairs(base.labels), family=("qsap", m))


def enumerate_family(family) -> VertexSet:
    """Dispatch to the family's enumerator."""
    kind = family[0]
    if kind == "bqp":
        return enumerate_bqp(family[1])
    if kind == "cut":
        return enumerate_cut(family[1])
    if kind == "ssp":
        return enumerate_ssp(family[1])
    if kind == "vcp":
        return enumerate_vcp(family[1])
    if kind in ("pack", "part"):
        return enumerate_pack_part(family[1], kind)
    if kind == "dcp":
        return enumerate_dcp(family[1])
    if kind == "lop":
        return enumerate_lop(family[1])
    if kind == "assignment":
        return enumerate_assignment(family[1], family[2])
    if kind == "row_assignment":
        return enumerate_row_assignment(family[1])
    if kind == "qlop":
        return enumerate_qlop(family[1])
    if kind == "qap":
        return enumerate_qap(family[1])
    if kind == "qsap":
        return enumerate_qsap(family[1])
    raise ValidationError(f"unknown family {family!r}")


def family_vertex_count(family):
    """Closed-form vertex count when one exists, else None."""
    kind = family[0]
    if kind == "bqp":
        return 2 ** family[1]
    if kind == "cut":
        return 2 ** (family[1] - 1)
    if kind in ("lop", "qlop"):
        return factorial(family[1])
    if kind == "assignment":
        return factorial(family[1]) ** (family[2] - 1)
    if kind == "qap":
        return factorial(family[1])
    if kind in ("row_assignment", "qsap"):
        return family[1] ** family[1]
    return None


# ---------------------------------------------------------------------------
# Defining-system checkers (revalidation and the brute-force oracle)

def vertex_checker(family):
    """Predicate deciding whether a support is a vertex of the family."""
    kind = family[0]
    labels = family_labels(family)
    pos = {lab: i for i, lab in enumerate(labels)}

    if kind == "bqp":
        n = family[1]
        def check(supp):
            b = [pos[("diag", i)] in supp for i in range(1, n + 1)]
            return all((pos[("off", i, j)] in supp) == (b[i - 1] and b[j - 1])
                       for i in range(1, n + 1) for j in range(i + 1, n + 1))
        return check

    if kind == "cut":
        n = family[1]
        def check(supp):
            side = [False] * (n + 1)
            for i in range(1, n):
                side[i] = pos[("cut", i, n)] in supp
            return all((pos[("cut", i, j)] in supp) == (side[i] != side[j])
                       for i in range(1, n + 1) for j in range(i + 1, n + 1))
        return check

    if kind in ("ssp", "vcp"):
        g = family[1]
        epos = [(pos[("node", u)], pos[("node", v)]) for u, v in g.edges]
        if kind == "ssp":
            return lambda supp: all(not (a in supp and b in supp) for a, b in epos)
        return lambda supp: all(a in supp or b in supp for a, b in epos)

    if kind in ("pack", "part", "dcp"):
        a = family[1]
        cap = 2 if kind == "dcp" else 1
        exact = kind != "pack"
        def check(supp):
            cols = {j for j in range(a.n_cols) if pos[("col", j)] in supp}
            for row in a.rows:
                s = sum(1 for j in row if j in cols)
                if exact and s != cap:
                    return False
                if not exact and s > cap:
                    return False
            return True
        return check

    if kind == "lop":
        m = family[1]
        def check(supp):
            y = lambda i, j: 1 if pos[("ord", i, j)] in supp else 0
            return all(0 <= y(i, j) + y(j, k) - y(i, k) <= 1
                       for i in range(1, m + 1)
                       for j in range(i + 1, m + 1)
                       for k in range(j + 1, m + 1))
        return check

    if kind == "assignment":
        m, p = family[1], family[2]
        def check(supp):
            coords = [labels[i][1:] for i in supp]
            if len(coords) != m:
                return False
            for axis in range(p):
                if sorted(c[axis] for c in coords) != list(range(1, m + 1)):
                    return False
            return True
        return check

    if kind == "row_assignment":
        m = family[1]
        def check(supp):
            coords = [labels[i][1:] for i in supp]
            return len(coords) == m and sorted(c[0] for c in coords) == list(range(1, m + 1))
        return check

    if kind in ("qlop", "qap", "qsap", "lift"):
        if kind == "qlop":
            base_family = ("lop", family[1])
        elif kind == "qap":
            base_family = ("assignment", family[1], 2)
        elif kind == "qsap":
            base_family = ("row_assignment", family[1])
        else:
            base_family = family[1]
        base_check = vertex_checker(base_family)
        nbase = len(family_labels(base_family))
        quads = labels[nbase:]
        bpos = {lab: i for i, lab in enumerate(labels[:nbase])}
        def check(supp):
            base_supp = frozenset(i for i in supp if i < nbase)
            if not base_check(base_supp):
                return False
            for t, (_, e, f) in enumerate(quads):
                want = bpos[e] in base_supp and bpos[f] in base_supp
                if ((nbase + t) in supp) != want:
                    return False
            return True
        return check

    raise ValidationError(f"unknown family {family!r}")


def naive_enumerate(family) -> VertexSet:
    """Brute-force oracle: filter all of {0,1}^d by the defining system.

    Only sensible at small dimension; guarded by the state budget.
    """
    labels = family_labels(family)
    d = len(labels)
    if 2 ** d > guard_states():
        raise ResourceGuardError(f"naive filter over 2^{d} points exceeds the guard")
    checker = vertex_checker(family)
    supports = []
    for mask in range(2 ** d):
        supp = frozenset(i for i in range(d) if mask >> i & 1)
        if checker(supp):
            supports.append(supp)
    return _make(family, labels, supports, validate=False)


# ---------------------------------------------------------------------------
# Face-restricted enumeration

def face_restricted_enumerate(family, zero_fixed=(), one_fixed=()) -> VertexSet:
    """Vertices of the family satisfying the coordinate fixings, by
    constraint-propagating backtracking.

    Agrees with filtering the full enumeration whenever that is feasible;
    contradictory fixings yield an empty vertex set, not an error.
    """
    labels = family_labels(family)
    pos = {lab: i for i, lab in enumerate(labels)}
    for lab in tuple(zero_fixed) + tuple(one_fixed):
        if lab not in pos:
            raise ValidationError(f"fixing references unknown label {lab!r}")
    zero = frozenset(pos[lab] for lab in zero_fixed)
    one = frozenset(pos[lab] for lab in one_fixed)
    if zero & one:
        return _make(family, labels, [])
    kind = family[0]

    if kind == "bqp":
        supports = _bqp_restricted(family[1], labels, pos, zero, one)
    elif kind == "cut":
        supports = _cut_restricted(family[1], labels, pos, zero, one)
    elif kind == "ssp":
        supports = _stable_sets(family[1], zero, one, what="ssp face")
    elif kind == "vcp":
        supports = _vcp_restricted(family[1], zero, one)
    elif kind in ("pack", "part", "dcp"):
        a = family[1]
        cap = 2 if kind == "dcp" else 1
        if kind == "dcp":
            a.require_row_weight(4)
        fixed = {}
        for p in zero:
            fixed[labels[p][1]] = 0
        for p in one:
            fixed[labels[p][1]] = 1
        supports = _cover_solutions(a, cap, kind != "pack", fixed, what=f"{kind} face")
    elif kind == "lop":
        supports = _lop_restricted(family[1], labels, pos, zero, one)
    elif kind == "assignment":
        supports = _assignment_restricted(family[1], family[2], labels, pos, zero, one)
    elif kind == "row_assignment":
        supports = _row_assignment_restricted(family[1], labels, pos, zero, one)
    elif kind in ("qlop", "qap", "qsap", "lift"):
        return _lift_restricted(family, labels, pos, zero, one)
    else:
        raise ValidationError(f"unknown family {family!r}")

    checker = vertex_checker(family)
    keep = [s for s in supports if zero.isdisjoint(s) and one <= s]
    vs = _make(family, labels, keep, validate=False)
    for v in vs.vertices:
        if not checker(v):
            raise ValidationError("face-restricted enumeration produced a non-vertex")
    return vs


def _vcp_restricted(g: Graph, zero, one) -> list:
    k = g.n_nodes
    full = frozenset(range(k))
    stab = _stable_sets(g, zero=one, one=zero, what="vcp face")
    return [full - s for s in stab]


def _bqp_restricted(n, labels, pos, zero, one) -> list:
    diag = [pos[("diag", i)] for i in range(1, n + 1)]
    off = {(i, j): pos[("off", i, j)] for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    counter = StateCounter("bqp face")
    out = []

    def ok(b, upto):
        for (i, j), p in off.items():
            if j > upto:
                continue
            v = b[i - 1] and b[j - 1]
            if p in zero and v:
                return False
            if p in one and not v:
                return False
        return True

    def rec(i, b):
        counter.tick()
        if i > n:
            supp = {diag[t] for t in range(n) if b[t]}
            supp.update(off[(x, y)] for x in range(1, n + 1) for y in range(x + 1, n + 1)
                        if b[x - 1] and b[y - 1])
            out.append(frozenset(supp))
            return
        for v in (0, 1):
            p = diag[i - 1]
            if (p in zero and v) or (p in one and not v):
                continue
            b.append(v)
            if ok(b, i):
                rec(i + 1, b)
            b.pop()

    rec(1, [])
    return out


def _cut_restricted(n, labels, pos, zero, one) -> list:
    counter = StateCounter("cut face")
    out = []

    def val(lab):
        if pos[lab] in zero:
            return 0
        if pos[lab] in one:
            return 1
        return None

    def rec(i, side):
        counter.tick()
        if i == n:
            supp = frozenset(pos[("cut", a, b)]
                             for a in range(1, n + 1) for b in range(a + 1, n + 1)
                             if side[a] != side[b])
            out.append(supp)
            return
        for s in (0, 1):
            side[i] = s
            good = True
            for j in range(1, i):
                want = val(("cut", j, i))
                if want is not None and (side[j] != s) != bool(want):
                    good = False
                    break
            want_n = val(("cut", i, n))
            if good and want_n is not None and s != want_n:
                good = False
            if good:
                rec(i + 1, side)
        side[i] = 0

    side = [0] * (n + 1)
    rec(1, side)
    return out


def _lop_restricted(m, labels, pos, zero, one) -> list:
    check_vertex_budget("lop face", factorial(m))
    fixings = {}
    for p in zero:
        fixings[labels[p][1:]] = 0
    for p in one:
        fixings[labels[p][1:]] = 1
    counter = StateCounter("lop face")
    out = []
    for perm in permutations(range(1, m + 1)):
        counter.tick()
        rank = {v: r for r, v in enumerate(perm)}
        if any((rank[i] < rank[j]) != bool(v) for (i, j), v in fixings.items()):
            continue
        out.append(frozenset(pos[("ord", i, j)]
                             for i in range(1, m + 1) for j in range(i + 1, m + 1)
                             if rank[i] < rank[j]))
    return out


def _assignment_restricted(m, p, labels, pos, zero, one) -> list:
    kind = labels[0][0]
    zero_coords = {labels[q][1:] for q in zero}
    one_coords = {labels[q][1:] for q in one}
    forced = {}
    for c in one_coords:
        s, rest = c[0], c[1:]
        if s in forced and forced[s] != rest:
            return []
        forced[s] = rest
    # Candidate images per first index, after removing zero-fixed coordinates.
    cands = {}
    for s in range(1, m + 1):
        if s in forced:
            opts = [forced[s]] if (s,) + forced[s] not in zero_coords else []
        else:
            opts = [rest for rest in product(range(1, m + 1), repeat=p - 1)
                    if (s,) + rest not in zero_coords]
        cands[s] = opts
    order = sorted(range(1, m + 1), key=lambda s: len(cands[s]))
    counter = StateCounter("assignment face")
    used = [set() for _ in range(p - 1)]
    out = []

    def rec(t, picked):
        counter.tick()
        if t == m:
            out.append(frozenset(pos[(kind, s) + rest] for s, rest in picked))
            return
        s = order[t]
        for rest in cands[s]:
            if any(rest[a] in used[a] for a in range(p - 1)):
                continue
            for a in range(p - 1):
                used[a].add(rest[a])
            picked.append((s, rest))
            rec(t + 1, picked)
            picked.pop()
            for a in range(p - 1):
                used[a].remove(rest[a])

    rec(0, [])
    return out


def _row_assignment_restricted(m, labels, pos, zero, one) -> list:
    zero_coords = {labels[q][1:] for q in zero}
    one_coords = {labels[q][1:] for q in one}
    forced = {}
    for (i, j) in one_coords:
        if i in forced and forced[i] != j:
            return []
        forced[i] = j
    counter = StateCounter("row_assignment face")
    out = []
    options = []
    for i in range(1, m + 1):
        if i in forced:
            opts = [forced[i]] if (i, forced[i]) not in zero_coords else []
        else:
            opts = [j for j in range(1, m + 1) if (i, j) not in zero_coords]
        options.append(opts)
    for choice in product(*options):
        counter.tick()
        out.append(frozenset(pos[("cell", i + 1, choice[i])] for i in range(m)))
    return out


def _lift_restricted(family, labels, pos, zero, one) -> VertexSet:
    kind = family[0]
    if kind == "qlop":
        base_family = ("lop", family[1])
    elif kind == "qap":
        base_family = ("assignment", family[1], 2)
    elif kind == "qsap":
        base_family = ("row_assignment", family[1])
    else:
        base_family = family[1]
    base_labels = family_labels(base_family)
    nbase = len(base_labels)
    base_zero = [labels[q] for q in zero if q < nbase]
    base_one = [labels[q] for q in one if q < nbase]
    # A one-fixed product forces both of its base factors to 1; a zero-fixed
    # product is disjunctive, so it is filtered after lifting.
    for q in one:
        if q >= nbase:
            _, e, f = labels[q]
            base_one.extend([e, f])
    base_face = face_restricted_enumerate(base_family, base_zero, set(base_one))
    pairs = labels[nbase:]
    lifted = quadratic_lift(
        VertexSet(base_family, base_labels, base_face.vertices), pairs, family=family)
    keep = [s for s in lifted.vertices if zero.isdisjoint(s) and one <= s]
    return _make(family, labels, keep)
