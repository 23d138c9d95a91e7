"""Builders instantiating the affine reductions between polytope families.

Each builder returns a ReductionCertificate: the target instance, the face
specification carving out the image, and the exact affine map from source
coordinates to target coordinates. Builders only construct; the verifier
checks. The two exceptions are the squared-form face equalities (quadric
targets), whose validity the builder itself confirms on the full target
before declaring a face, since those constructions are derived here rather
than quoted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .certificates import FaceSpec, ReductionCertificate, face_equality
from .errors import InternalCheckError, ValidationError
from .graphs import Graph, IncidenceMatrix, conflict_graph, edge_incidence
from .linalg import AffineMap
from .verify import VerificationReport, check_certificate
from .zoo import (VertexSet, enumerate_assignment, enumerate_bqp, enumerate_cut,
                  enumerate_family, enumerate_pack_part, enumerate_qap,
                  enumerate_qlop, enumerate_qsap, enumerate_ssp, family_labels)

F = Fraction
ONE = F(1)
HALF = F(1, 2)


def _label_map(src_labels, tgt_labels, rows: dict) -> AffineMap:
    """Assemble an AffineMap from label-keyed sparse rows."""
    spos = {lab: i for i, lab in enumerate(src_labels)}
    tpos = {lab: i for i, lab in enumerate(tgt_labels)}
    out = {}
    for tlab, (coeffs, off) in rows.items():
        out[tpos[tlab]] = ({spos[sl]: F(c) for sl, c in coeffs.items()}, F(off))
    return AffineMap(len(src_labels), len(tgt_labels), out)


# ---------------------------------------------------------------------------
# Covariant relation: quadric <-> cut

def cert_covariant_cut(n: int) -> ReductionCertificate:
    """CUT_{n+1} is affinely equivalent to BQP_n (whole polytope as face).

    The map identifies x_ii with the cut coordinate toward the extra node
    and x_ij with (z_{i,n+1} + z_{j,n+1} - z_ij) / 2.
    """
    if n < 1:
        raise ValidationError("covariant: n must be >= 1")
    source = enumerate_cut(n + 1)
    tgt = ("bqp", n)
    rows = {}
    for i in range(1, n + 1):
        rows[("diag", i)] = ({("cut", i, n + 1): ONE}, 0)
        for j in range(i + 1, n + 1):
            rows[("off", i, j)] = ({("cut", i, n + 1): HALF,
                                    ("cut", j, n + 1): HALF,
                                    ("cut", i, j): -HALF}, 0)
    return ReductionCertificate(
        provenance="covariant",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(),
        amap=_label_map(source.labels, family_labels(tgt), rows),
        claimed_param=n, claimed_param_name="n")


# ---------------------------------------------------------------------------
# Quadric -> stable set (the five-edge-family graph)

def theorem1_graph(n: int) -> Graph:
    """The conflict graph on n(n+1) nodes with n(2n-1) edges whose stable-set
    polytope hosts BQP_n as a face.

    Nodes: s:i:j and t:i:j per pair i<j, u:i and ub:i per index. Edge
    families, in order: {s_ij, ub_j}, {t_ij, u_j}, {u_i, ub_i}, {s_ij, ub_i},
    {t_ij, ub_i}.
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    nodes = ([f"s:{i}:{j}" for i, j in pairs] + [f"t:{i}:{j}" for i, j in pairs]
             + [f"u:{i}" for i in range(1, n + 1)] + [f"ub:{i}" for i in range(1, n + 1)])
    edges = []
    edges += [(f"s:{i}:{j}", f"ub:{j}") for i, j in pairs]
    edges += [(f"t:{i}:{j}", f"u:{j}") for i, j in pairs]
    edges += [(f"u:{i}", f"ub:{i}") for i in range(1, n + 1)]
    edges += [(f"s:{i}:{j}", f"ub:{i}") for i, j in pairs]
    edges += [(f"t:{i}:{j}", f"ub:{i}") for i, j in pairs]
    return Graph.make(nodes, edges)


def _thm1_face_stages(n: int, lab) -> tuple:
    """Stage 1: u_i + ub_i = 1 (valid edge inequalities). Stage 2:
    s_ij + t_ij + ub_i = 1, valid only relative to stage 1's face."""
    stage1 = [face_equality({lab(f"u:{i}"): 1, lab(f"ub:{i}"): 1}, 1)
              for i in range(1, n + 1)]
    stage2 = [face_equality({lab(f"s:{i}:{j}"): 1, lab(f"t:{i}:{j}"): 1,
                             lab(f"ub:{i}"): 1}, 1)
              for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(s for s in (stage1, stage2) if s)


def _thm1_map_rows(n: int, lab) -> dict:
    rows = {}
    for i in range(1, n + 1):
        rows[lab(f"u:{i}")] = ({("diag", i): 1}, 0)
        rows[lab(f"ub:{i}")] = ({("diag", i): -1}, 1)
        for j in range(i + 1, n + 1):
            rows[lab(f"s:{i}:{j}")] = ({("off", i, j): 1}, 0)
            rows[lab(f"t:{i}:{j}")] = ({("diag", i): 1, ("off", i, j): -1}, 0)
    return rows


def cert_bqp_to_ssp(n: int) -> ReductionCertificate:
    """BQP_n as a face of the stable-set polytope on k = n(n+1) nodes."""
    if n < 1:
        raise ValidationError("thm1: n must be >= 1")
    g = theorem1_graph(n)
    source = enumerate_bqp(n)
    tgt = ("ssp", g)
    lab = lambda name: ("node", name)
    return ReductionCertificate(
        provenance="thm1",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(stages=_thm1_face_stages(n, lab)),
        amap=_label_map(source.labels, family_labels(tgt), _thm1_map_rows(n, lab)),
        claimed_param=n * (n + 1), claimed_param_name="k")


def cert_bqp_to_pack(n: int) -> ReductionCertificate:
    """Same construction as cert_bqp_to_ssp, targeted at the packing polytope
    of the conflict graph's edge incidence matrix (d = k columns)."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    g = theorem1_graph(n)
    source = enumerate_bqp(n)
    a = edge_incidence(g)
    tgt = ("pack", a)
    node_pos = {v: i for i, v in enumerate(g.nodes)}
    lab = lambda name: ("col", node_pos[name])
    return ReductionCertificate(
        provenance="thm1-pack",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(stages=_thm1_face_stages(n, lab)),
        amap=_label_map(source.labels, family_labels(tgt), _thm1_map_rows(n, lab)),
        claimed_param=n * (n + 1), claimed_param_name="d")


# ---------------------------------------------------------------------------
# Stable set -> partition / double covering

def _ssp_part_matrix(g: Graph):
    """Columns y_v then u_e; one row {y_i, y_j, u_e} per edge."""
    k = g.n_nodes
    node_pos = {v: i for i, v in enumerate(g.nodes)}
    rows = []
    for t, (u, v) in enumerate(g.edges):
        rows.append(tuple(sorted((node_pos[u], node_pos[v], k + t))))
    return IncidenceMatrix.make(k + g.n_edges, rows), node_pos


def _ssp_part_map_rows(g: Graph, node_pos, extra_offset: int = 0) -> dict:
    k = g.n_nodes
    rows = {}
    for v in g.nodes:
        rows[("col", node_pos[v])] = ({("node", v): 1}, 0)
    for t, (u, v) in enumerate(g.edges):
        rows[("col", k + t)] = ({("node", u): -1, ("node", v): -1}, 1)
    return rows


def cert_ssp_to_part(g: Graph) -> ReductionCertificate:
    """SSP(G) is the whole partition polytope with a slack column per edge:
    y_i + y_j + u_e = 1, d = k + |E|."""
    if g.n_nodes < 1:
        raise ValidationError("thm4: empty graph")
    a, node_pos = _ssp_part_matrix(g)
    source = enumerate_ssp(g)
    tgt = ("part", a)
    return ReductionCertificate(
        provenance="thm4",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(),
        amap=_label_map(source.labels, family_labels(tgt),
                        _ssp_part_map_rows(g, node_pos)),
        claimed_param=g.n_nodes + g.n_edges, claimed_param_name="d")


def cert_ssp_to_dcp(g: Graph) -> ReductionCertificate:
    """SSP(G) as the u_0 = 1 face of a double covering polytope,
    d = k + |E| + 1; every generated row has exactly four 1's."""
    if g.n_edges < 1:
        raise ValidationError("thm6: graph needs at least one edge "
                              "(use a trivial certificate otherwise)")
    k = g.n_nodes
    node_pos = {v: i for i, v in enumerate(g.nodes)}
    u0 = k + g.n_edges
    rows = []
    for t, (u, v) in enumerate(g.edges):
        rows.append(tuple(sorted((node_pos[u], node_pos[v], k + t, u0))))
    b = IncidenceMatrix.make(k + g.n_edges + 1, rows)
    b.require_row_weight(4)
    source = enumerate_ssp(g)
    tgt = ("dcp", b)
    map_rows = _ssp_part_map_rows(g, node_pos)
    map_rows[("col", u0)] = ({}, 1)
    return ReductionCertificate(
        provenance="thm6",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(one_fixed=[("col", u0)]),
        amap=_label_map(source.labels, family_labels(tgt), map_rows),
        claimed_param=k + g.n_edges + 1, claimed_param_name="d")


# ---------------------------------------------------------------------------
# Stable set -> three-index assignment

def tap_ground_set(g: Graph) -> list:
    """Ordered ground set of the three-index construction: the pair (v, vbar)
    per isolated node, then one element per edge, then (e, v) per incidence.
    |S| = 3|E| + 2|W|."""
    ground = []
    for v in g.isolated_nodes():
        ground.append(("w", v))
        ground.append(("wbar", v))
    for e in g.edges:
        ground.append(("e", e))
    for e in g.edges:
        for v in e:
            ground.append(("ev", e, v))
    return ground


def cert_ssp_to_tap(g: Graph) -> ReductionCertificate:
    """SSP(G) as the face of TAP_m (m = 3|E| + 2|W|) supported on the
    triple set Q of the ground-set construction.

    Q holds, per isolated node v, the four triples on {v, vbar}; per edge e
    the triples (e,e,e), ((e,v),(e,v),(e,v)), (e,e,(e,v)); and per
    non-isolated node the cyclic triples ((e_q,v), (e_{q+1},v), e_q) over
    its incident edges in insertion order (q+1 taken cyclically).
    """
    if g.n_nodes < 1:
        raise ValidationError("thm9: empty graph")
    ground = tap_ground_set(g)
    index = {el: i + 1 for i, el in enumerate(ground)}
    m = len(ground)
    if m < 1:
        raise ValidationError("thm9: empty ground set")

    ylab = lambda v: ("node", v)
    q_rows: dict = {}

    def put(s, t, u, coeffs, off):
        q_rows[("triple", index[s], index[t], index[u])] = (coeffs, off)

    for v in g.isolated_nodes():
        w, wb = ("w", v), ("wbar", v)
        put(w, w, w, {ylab(v): 1}, 0)
        put(wb, wb, wb, {ylab(v): 1}, 0)
        put(w, w, wb, {ylab(v): -1}, 1)
        put(wb, wb, w, {ylab(v): -1}, 1)
    for e in g.edges:
        u, v = e
        ee = ("e", e)
        put(ee, ee, ee, {ylab(u): -1, ylab(v): -1}, 1)
        for w in e:
            ev = ("ev", e, w)
            put(ev, ev, ev, {ylab(w): -1}, 1)
            put(ee, ee, ev, {ylab(w): 1}, 0)
    for v in g.nodes:
        inc = g.incident_edges(v)
        p = len(inc)
        if p == 0:
            continue
        for q in range(p):
            eq, enext = inc[q], inc[(q + 1) % p]
            put(("ev", eq, v), ("ev", enext, v), ("e", eq), {ylab(v): 1}, 0)

    source = enumerate_ssp(g)
    tgt = ("assignment", m, 3)
    tgt_labels = family_labels(tgt)
    q_set = set(q_rows)
    zero_fixed = [lab for lab in tgt_labels if lab not in q_set]
    return ReductionCertificate(
        provenance="thm9",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(zero_fixed=zero_fixed),
        amap=_label_map(source.labels, tgt_labels, q_rows),
        claimed_param=3 * g.n_edges + 2 * len(g.isolated_nodes()),
        claimed_param_name="m",
        notes=(("ground_set", "; ".join(f"{i + 1}={el}" for i, el in enumerate(ground))),
               ("triples_in_Q", str(len(q_rows)))))


# ---------------------------------------------------------------------------
# Quadric <-> quadratic linear ordering

def cert_bqp_to_qlop(n: int) -> ReductionCertificate:
    """BQP_n as the face of QLOP_{2n} fixing y_ij = 0 outside the coupling
    pairs J = {(2i-1, 2i)}; the surviving n-cube lifts to the quadric."""
    if n < 1:
        raise ValidationError("thm11: n must be >= 1")
    m = 2 * n
    source = enumerate_bqp(n)
    tgt = ("qlop", m)
    tgt_labels = family_labels(tgt)
    J = {(2 * i - 1, 2 * i): i for i in range(1, n + 1)}
    rows = {}
    zero_fixed = []
    for lab in tgt_labels:
        if lab[0] == "ord":
            ij = lab[1:]
            if ij in J:
                rows[lab] = ({("diag", J[ij]): 1}, 0)
            else:
                zero_fixed.append(lab)
        else:
            _, e, f = lab
            a = J.get(e[1:])
            b = J.get(f[1:])
            if a is not None and b is not None:
                rows[lab] = ({("off", a, b): 1}, 0)
    return ReductionCertificate(
        provenance="thm11",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(zero_fixed=zero_fixed),
        amap=_label_map(source.labels, tgt_labels, rows),
        claimed_param=m, claimed_param_name="m")


def _check_valid_on(vs: VertexSet, constraints, what: str) -> None:
    """Raise unless every constraint's <= relaxation holds on all vertices."""
    pos = vs.pos
    for con in constraints:
        coeffs = {pos[lab]: c for lab, c in con.coeffs}
        for v in vs.vertices:
            val = sum((c for i, c in coeffs.items() if i in v), F(0))
            if val > con.rhs:
                raise InternalCheckError(
                    f"{what}: derived face constraint is not valid on the target")


def cert_qlop_to_bqp(m: int) -> ReductionCertificate:
    """QLOP_m as a face of BQP_n, n = C(m,2): coordinates identify, and per
    triple i<j<k one valid equality expresses the 0/1 expansion of
    (y_ij + y_jk - y_ik)(y_ij + y_jk - y_ik - 1) = 0.

    The builder verifies each equality's validity on all BQP_n vertices
    before declaring the face; a failure would signal a wrong derivation.
    """
    if m < 2:
        raise ValidationError("thm10: m must be >= 2")
    pairs = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    pair_idx = {p: a + 1 for a, p in enumerate(pairs)}
    n = len(pairs)
    source = enumerate_qlop(m)
    tgt = ("bqp", n)

    def off(a, b):
        return ("off", min(a, b), max(a, b))

    cons = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(j + 1, m + 1):
                a_ij, a_jk, a_ik = pair_idx[(i, j)], pair_idx[(j, k)], pair_idx[(i, k)]
                # -(z_ij,jk - z_ij,ik - z_jk,ik + x_ik,ik) <= 0, tight on the face
                coeffs = {off(a_ij, a_jk): -1, off(a_ij, a_ik): 1,
                          off(a_jk, a_ik): 1, ("diag", a_ik): -1}
                cons.append(face_equality(coeffs, 0))
    target_vs = enumerate_bqp(n)
    _check_valid_on(target_vs, cons, "thm10")

    # Coordinate identification: y_ij -> diagonal of its pair index,
    # products -> off-diagonals (the pair orders agree).
    rows = {}
    src_labels = source.labels
    for lab in src_labels:
        if lab[0] == "ord":
            rows[("diag", pair_idx[lab[1:]])] = ({lab: 1}, 0)
        else:
            _, e, f = lab
            rows[off(pair_idx[e[1:]], pair_idx[f[1:]])] = ({lab: 1}, 0)
    return ReductionCertificate(
        provenance="thm10",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(stages=(tuple(cons),) if cons else ()),
        amap=_label_map(src_labels, family_labels(tgt), rows),
        claimed_param=n, claimed_param_name="n")


# ---------------------------------------------------------------------------
# Quadric <-> quadratic assignment

def _qap_J(n: int) -> dict:
    """Support cells of the 2n x 2n permutation face: the diagonal plus the
    in-block swap cells; maps cell -> (kind, block index)."""
    J = {}
    for i in range(1, 2 * n + 1):
        J[(i, i)] = ("minus", (i + 1) // 2)
    for i in range(1, n + 1):
        J[(2 * i - 1, 2 * i)] = ("plus", i)
        J[(2 * i, 2 * i - 1)] = ("plus", i)
    return J


def _bit_product_row(ga, gb):
    """Affine row for the product of two literals over quadric coordinates.

    Each literal is ('plus', i) meaning b_i or ('minus', i) meaning 1 - b_i;
    the product linearizes over quadric vertices since b_i b_j = x_ij.
    """
    sa, i = ga
    sb, j = gb
    if i == j:
        if sa == "plus" and sb == "plus":
            return {("diag", i): 1}, 0
        if sa == "minus" and sb == "minus":
            return {("diag", i): -1}, 1
        return None  # b(1-b) = 0 on 0/1 points
    if i > j:
        (sa, i), (sb, j) = (sb, j), (sa, i)
    if sa == "plus" and sb == "plus":
        return {("off", i, j): 1}, 0
    if sa == "plus" and sb == "minus":
        return {("diag", i): 1, ("off", i, j): -1}, 0
    if sa == "minus" and sb == "plus":
        return {("diag", j): 1, ("off", i, j): -1}, 0
    return {("diag", i): -1, ("diag", j): -1, ("off", i, j): 1}, 1


def cert_bqp_to_qap(n: int) -> ReductionCertificate:
    """BQP_n as the face of QAP_{2n} fixing every assignment cell outside
    J = diagonal + the two swap cells per block; each block swaps (b_i = 1)
    or stays (b_i = 0) independently, an n-cube lifting to the quadric."""
    if n < 1:
        raise ValidationError("thm13: n must be >= 1")
    m = 2 * n
    source = enumerate_bqp(n)
    tgt = ("qap", m)
    tgt_labels = family_labels(tgt)
    J = _qap_J(n)
    rows = {}
    zero_fixed = []
    for lab in tgt_labels:
        if lab[0] == "cell":
            lit = J.get(lab[1:])
            if lit is None:
                zero_fixed.append(lab)
            elif lit[0] == "plus":
                rows[lab] = ({("diag", lit[1]): 1}, 0)
            else:
                rows[lab] = ({("diag", lit[1]): -1}, 1)
        else:
            _, e, f = lab
            la = J.get(e[1:])
            lb = J.get(f[1:])
            if la is None or lb is None:
                continue
            row = _bit_product_row(la, lb)
            if row is not None:
                rows[lab] = row
    return ReductionCertificate(
        provenance="thm13",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(zero_fixed=zero_fixed),
        amap=_label_map(source.labels, tgt_labels, rows),
        claimed_param=m, claimed_param_name="m")


def cert_qap_to_bqp_chain(m: int):
    """The two-step chain QAP_m <= QSAP_m <= BQP_{m^2}.

    Step one fixes to zero every product of two cells sharing a column
    (valid: products are nonnegative), leaving exactly the permutation
    vertices. Step two identifies coordinates with BQP_{m^2} and cuts by
    one valid equality per row, the 0/1 expansion of (sum_j y_ij - 1)^2 = 0;
    validity is confirmed on the full quadric before the face is declared.
    """
    if m < 2:
        raise ValidationError("thm12: m must be >= 2")
    qap = enumerate_qap(m)
    qsap_family = ("qsap", m)
    qsap_labels = family_labels(qsap_family)
    if tuple(qap.labels) != tuple(qsap_labels):
        raise InternalCheckError("thm12: QAP/QSAP coordinate orders diverged")
    zero_fixed = [("quad", ("cell", i, j), ("cell", k, j))
                  for j in range(1, m + 1)
                  for i in range(1, m + 1) for k in range(i + 1, m + 1)]
    cert1 = ReductionCertificate(
        provenance="thm12a",
        source=qap,
        target_family=qsap_family,
        face=FaceSpec.make(zero_fixed=zero_fixed),
        amap=AffineMap.identity(len(qsap_labels)),
        claimed_param=m, claimed_param_name="m")

    qsap = enumerate_qsap(m)
    n = m * m
    cell_idx = {(i, j): (i - 1) * m + j for i in range(1, m + 1) for j in range(1, m + 1)}
    tgt = ("bqp", n)

    def off(a, b):
        return ("off", min(a, b), max(a, b))

    cons = []
    for i in range(1, m + 1):
        # -(sum_j y_ij - 1)^2 <= 0 expanded over 0/1: -2 sum_{j<l} z + sum_j y <= 1
        coeffs = {("diag", cell_idx[(i, j)]): 1 for j in range(1, m + 1)}
        for j in range(1, m + 1):
            for l in range(j + 1, m + 1):
                coeffs[off(cell_idx[(i, j)], cell_idx[(i, l)])] = -2
        cons.append(face_equality(coeffs, 1))
    target_vs = enumerate_bqp(n)
    _check_valid_on(target_vs, cons, "thm12")

    rows = {}
    for lab in qsap.labels:
        if lab[0] == "cell":
            rows[("diag", cell_idx[lab[1:]])] = ({lab: 1}, 0)
        else:
            _, e, f = lab
            rows[off(cell_idx[e[1:]], cell_idx[f[1:]])] = ({lab: 1}, 0)
    cert2 = ReductionCertificate(
        provenance="thm12b",
        source=qsap,
        target_family=tgt,
        face=FaceSpec.make(stages=(tuple(cons),)),
        amap=_label_map(qsap.labels, family_labels(tgt), rows),
        claimed_param=n, claimed_param_name="n")
    return cert1, cert2


# ---------------------------------------------------------------------------
# Elementary certificates

def cert_elementary(kind: str, **params) -> ReductionCertificate:
    """Small single-step certificates: the quadric face chain, stable/cover
    complementation, partition-in-packing, packing-as-stable-set,
    assignment-as-partition and the p-index face step."""
    builders = {
        "bqp_chain": _elem_bqp_chain,
        "ssp_vcp": _elem_ssp_vcp,
        "part_in_pack": _elem_part_in_pack,
        "pack_as_ssp": _elem_pack_as_ssp,
        "tap_as_part": _elem_tap_as_part,
        "pap_step": _elem_pap_step,
    }
    if kind not in builders:
        raise ValidationError(f"unknown elementary kind {kind!r}")
    try:
        return builders[kind](**params)
    except TypeError as exc:
        raise ValidationError(f"bad params for {kind}: {exc}") from None


def _elem_bqp_chain(n: int) -> ReductionCertificate:
    source = enumerate_bqp(n)
    tgt = ("bqp", n + 1)
    rows = {lab: ({lab: 1}, 0) for lab in source.labels}
    return ReductionCertificate(
        provenance="bqp-chain",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(zero_fixed=[("diag", n + 1)]),
        amap=_label_map(source.labels, family_labels(tgt), rows),
        claimed_param=n + 1, claimed_param_name="n")


def _elem_ssp_vcp(g: Graph) -> ReductionCertificate:
    source = enumerate_ssp(g)
    tgt = ("vcp", g)
    rows = {("node", v): ({("node", v): -1}, 1) for v in g.nodes}
    return ReductionCertificate(
        provenance="ssp-vcp",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(),
        amap=_label_map(source.labels, family_labels(tgt), rows),
        claimed_param=g.n_nodes, claimed_param_name="k")


def _elem_part_in_pack(a: IncidenceMatrix) -> ReductionCertificate:
    source = enumerate_pack_part(a, "part")
    tgt = ("pack", a)
    cons = [face_equality({("col", j): 1 for j in row}, 1) for row in a.rows]
    return ReductionCertificate(
        provenance="part-in-pack",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(stages=(tuple(cons),) if cons else ()),
        amap=AffineMap.identity(a.n_cols),
        claimed_param=a.n_cols, claimed_param_name="d")


def _elem_pack_as_ssp(a: IncidenceMatrix) -> ReductionCertificate:
    source = enumerate_pack_part(a, "pack")
    h = conflict_graph(a)
    tgt = ("ssp", h)
    rows = {("node", j): ({("col", j): 1}, 0) for j in range(a.n_cols)}
    return ReductionCertificate(
        provenance="pack-as-ssp",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(),
        amap=_label_map(source.labels, family_labels(tgt), rows),
        claimed_param=a.n_cols, claimed_param_name="k")


def _elem_tap_as_part(m: int) -> ReductionCertificate:
    source = enumerate_assignment(m, 3)
    rows = []
    for axis in range(3):
        for w in range(1, m + 1):
            rows.append(tuple(sorted(
                j for j, lab in enumerate(source.labels) if lab[1 + axis] == w)))
    a = IncidenceMatrix.make(len(source.labels), rows)
    tgt = ("part", a)
    rows_map = {("col", j): ({source.labels[j]: 1}, 0) for j in range(a.n_cols)}
    return ReductionCertificate(
        provenance="tap-as-part",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(),
        amap=_label_map(source.labels, family_labels(tgt), rows_map),
        claimed_param=m ** 3, claimed_param_name="d")


def _elem_pap_step(m: int, p: int) -> ReductionCertificate:
    """(p-1)-index assignment as the face of the p-index polytope fixing
    x(i_1..i_p) = 0 whenever i_p != i_{p-1}."""
    if p < 3:
        raise ValidationError("pap_step: p must be >= 3")
    source = enumerate_assignment(m, p - 1)
    tgt = ("assignment", m, p)
    tgt_labels = family_labels(tgt)
    src_kind = source.labels[0][0]
    rows = {}
    zero_fixed = []
    for lab in tgt_labels:
        idx = lab[1:]
        if idx[-1] != idx[-2]:
            zero_fixed.append(lab)
        else:
            rows[lab] = ({(src_kind,) + idx[:-1]: 1}, 0)
    return ReductionCertificate(
        provenance="pap-step",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(zero_fixed=zero_fixed),
        amap=_label_map(source.labels, tgt_labels, rows),
        claimed_param=m, claimed_param_name="m")


# ---------------------------------------------------------------------------
# Composition

def compose_certs(ab: ReductionCertificate, bc: ReductionCertificate) -> ReductionCertificate:
    """Transitivity of the face relation: a face of a face is a face.

    Requires bc's source instance to be exactly ab's target instance. The
    composite face keeps bc's specification and appends ab's conditions
    rewritten into bc's target coordinates through an affine left inverse
    of bc's map; staged validity is preserved (each rewritten stage is
    valid on the image of the previous one).
    """
    if bc.source.family != ab.target_family:
        raise ValidationError("compose: bc's source does not match ab's target instance")
    h = bc.amap.left_inverse()
    amap = bc.amap.compose(ab.amap)

    b_labels = family_labels(ab.target_family)
    c_labels = bc.target_labels
    bpos = {lab: i for i, lab in enumerate(b_labels)}

    def rewrite(coeffs_b: dict, rhs) -> "LinConstraint":
        acc: dict = {}
        total = F(rhs)
        for blab, c in coeffs_b.items():
            hrow = h.rows.get(bpos[blab])
            if hrow is None:
                continue
            hcoeffs, hoff = hrow
            total -= F(c) * hoff
            for cpos, hc in hcoeffs.items():
                acc[c_labels[cpos]] = acc.get(c_labels[cpos], F(0)) + F(c) * hc
        return face_equality(acc, total)

    fix_stage = []
    for lab in ab.face.zero_fixed:
        fix_stage.append(rewrite({lab: -1}, 0))     # -x <= 0, tight
    for lab in ab.face.one_fixed:
        fix_stage.append(rewrite({lab: 1}, 1))      # x <= 1, tight
    rewritten_stages = [tuple(fix_stage)] if fix_stage else []
    for stage in ab.face.stages:
        rewritten_stages.append(tuple(
            rewrite(dict(con.coeffs), con.rhs) for con in stage))

    face = FaceSpec.make(
        zero_fixed=bc.face.zero_fixed,
        one_fixed=bc.face.one_fixed,
        stages=tuple(bc.face.stages) + tuple(rewritten_stages))
    return ReductionCertificate(
        provenance=f"compose({ab.provenance},{bc.provenance})",
        source=ab.source,
        target_family=bc.target_family,
        face=face,
        amap=amap,
        claimed_param=bc.claimed_param,
        claimed_param_name=bc.claimed_param_name)


# ---------------------------------------------------------------------------
# Direct builders behind the composite suite

def cert_bqp_to_part_direct(n: int) -> ReductionCertificate:
    """BQP_n as the whole partition polytope on exactly 2n^2 columns.

    Keeps the equality rows u_i + ub_i = 1 and s_ij + t_ij + ub_i = 1 and
    turns the two inequality families into equality rows with one slack
    column each; plain composition through the stable-set route would give
    3n^2 columns instead.
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    cols = ([("s", i, j) for i, j in pairs] + [("t", i, j) for i, j in pairs]
            + [("u", i) for i in range(1, n + 1)] + [("ub", i) for i in range(1, n + 1)]
            + [("w1", i, j) for i, j in pairs] + [("w2", i, j) for i, j in pairs])
    cpos = {c: i for i, c in enumerate(cols)}
    rows = []
    for i in range(1, n + 1):
        rows.append((cpos[("u", i)], cpos[("ub", i)]))
    for i, j in pairs:
        rows.append((cpos[("s", i, j)], cpos[("t", i, j)], cpos[("ub", i)]))
        rows.append((cpos[("s", i, j)], cpos[("ub", j)], cpos[("w1", i, j)]))
        rows.append((cpos[("t", i, j)], cpos[("u", j)], cpos[("w2", i, j)]))
    a = IncidenceMatrix.make(len(cols), [tuple(sorted(r)) for r in rows])
    source = enumerate_bqp(n)
    tgt = ("part", a)
    mrows = {}
    for i, j in pairs:
        mrows[("col", cpos[("s", i, j)])] = ({("off", i, j): 1}, 0)
        mrows[("col", cpos[("t", i, j)])] = ({("diag", i): 1, ("off", i, j): -1}, 0)
        mrows[("col", cpos[("w1", i, j)])] = ({("diag", j): 1, ("off", i, j): -1}, 0)
        mrows[("col", cpos[("w2", i, j)])] = (
            {("diag", i): -1, ("diag", j): -1, ("off", i, j): 1}, 1)
    for i in range(1, n + 1):
        mrows[("col", cpos[("u", i)])] = ({("diag", i): 1}, 0)
        mrows[("col", cpos[("ub", i)])] = ({("diag", i): -1}, 1)
    return ReductionCertificate(
        provenance="resume-part",
        source=source,
        target_family=tgt,
        face=FaceSpec.make(),
        amap=_label_map(source.labels, family_labels(tgt), mrows),
        claimed_param=2 * n * n, claimed_param_name="d",
        notes=(("columns", "; ".join(f"{i}={c}" for i, c in enumerate(cols))),))


def cert_bqp_to_dcp_direct(n: int) -> ReductionCertificate:
    """BQP_n as a face of a double covering polytope on 2n^2 + 2 columns.

    Every partition row is padded to exactly four 1's with u0 (face-fixed
    to 1) and, for the three-column rows, one shared extra column w
    (face-fixed to 0). The d = 2n^2 + 1 stated without construction in the
    source material is not matched; callers flag the gap of one column.
    """
    part = cert_bqp_to_part_direct(n)
    a: IncidenceMatrix = part.target_family[1]
    u0 = a.n_cols
    w = a.n_cols + 1
    rows = []
    for r in a.rows:
        padded = list(r) + [u0]
        if len(padded) < 4:
            padded.append(w)
        rows.append(tuple(sorted(padded)))
    b = IncidenceMatrix.make(a.n_cols + 2, rows)
    b.require_row_weight(4)
    tgt = ("dcp", b)
    tgt_labels = family_labels(tgt)
    part_labels = family_labels(part.target_family)
    # The partition map rows carry over unchanged; u0 is constant 1, w stays 0.
    mrows = {}
    for tlab_idx, (coeffs, off) in part.amap.rows.items():
        mrows[part_labels[tlab_idx]] = (
            {part.source.labels[j]: c for j, c in coeffs.items()}, off)
    mrows[("col", u0)] = ({}, 1)
    return ReductionCertificate(
        provenance="resume-dcp",
        source=part.source,
        target_family=tgt,
        face=FaceSpec.make(zero_fixed=[("col", w)], one_fixed=[("col", u0)]),
        amap=_label_map(part.source.labels, tgt_labels, mrows),
        claimed_param=2 * n * n + 2, claimed_param_name="d")


# ---------------------------------------------------------------------------
# Composite suite over all targets

@dataclass
class ResumeEntry:
    name: str
    certificate: ReductionCertificate
    report: VerificationReport


def resume_suite(n: int) -> list[ResumeEntry]:
    """Build and verify the composite reductions of BQP_n into every target
    family, with the dimension assertions attached to each report.

    Assertions: stable-set/packing size exactly n(n+1); partition columns
    exactly 2n^2 (direct builder); double covering at most 2n^2 + 2 with the
    one-column gap to 2n^2 + 1 flagged; assignment ground set at most
    6n^2 + 3n; quadratic ordering/assignment parameter exactly 2n.
    """
    if n < 1:
        raise ValidationError("resume_suite: n must be >= 1")
    entries = []

    def run(name, cert, assertions):
        report = check_certificate(cert)
        for cname, passed, detail in assertions(cert):
            report.add(cname, passed, detail)
        if report.status != "flagged":
            report.status = "verified" if all(c.passed for c in report.checks) else "failed"
        entries.append(ResumeEntry(name, cert, report))

    k_expected = n * (n + 1)
    thm1 = cert_bqp_to_ssp(n)
    run("ssp", thm1, lambda c: [
        ("dim-ssp-exact", c.target_family[1].n_nodes == k_expected,
         f"k = {c.target_family[1].n_nodes}, expected n(n+1) = {k_expected}")])

    run("pack", cert_bqp_to_pack(n), lambda c: [
        ("dim-pack-exact", c.target_family[1].n_cols == k_expected,
         f"d = {c.target_family[1].n_cols}, expected n(n+1) = {k_expected}")])

    run("part", cert_bqp_to_part_direct(n), lambda c: [
        ("dim-part-exact", c.target_family[1].n_cols == 2 * n * n,
         f"d = {c.target_family[1].n_cols}, expected 2n^2 = {2 * n * n}")])

    dcp = cert_bqp_to_dcp_direct(n)
    dcp_report_assert = lambda c: [
        ("dim-dcp-bound", c.target_family[1].n_cols <= 2 * n * n + 2,
         f"d = {c.target_family[1].n_cols} <= 2n^2 + 2 = {2 * n * n + 2}")]
    run("dcp", dcp, dcp_report_assert)
    if dcp.target_family[1].n_cols > 2 * n * n + 1:
        entries[-1].report.flags.append(
            f"dcp columns = {dcp.target_family[1].n_cols} exceed the stated "
            f"2n^2 + 1 = {2 * n * n + 1}; best direct construction uses one more")

    g1 = thm1.target_family[1]
    tap = compose_certs(thm1, cert_ssp_to_tap(g1))
    m_exact = 3 * g1.n_edges
    run("tap", tap, lambda c: [
        ("dim-tap-bound", c.target_family[1] <= 6 * n * n + 3 * n,
         f"m = {c.target_family[1]} <= 6n^2 + 3n = {6 * n * n + 3 * n}"),
        ("dim-tap-composed", c.target_family[1] == m_exact,
         f"m = {c.target_family[1]} = 3|E| of the conflict graph = {m_exact}")])

    run("qlop", cert_bqp_to_qlop(n), lambda c: [
        ("dim-qlop-exact", c.target_family[1] == 2 * n,
         f"m = {c.target_family[1]}, expected 2n = {2 * n}")])

    run("qap", cert_bqp_to_qap(n), lambda c: [
        ("dim-qap-exact", c.target_family[1] == 2 * n,
         f"m = {c.target_family[1]}, expected 2n = {2 * n}")])

    return entries
