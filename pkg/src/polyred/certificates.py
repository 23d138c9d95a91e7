"""Certificate data types: face specifications and reduction certificates.

A FaceSpec pins down a face of the target polytope by coordinate fixings
plus staged lists of valid-tight equalities. Stages exist because some
constructions carve a face out of a face: a stage's constraints need only
be valid inequalities on the sub-vertex-set cut by the earlier stages (the
fixings act as stage zero), which still certifies a genuine face since a
face of a face is a face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError
from .linalg import AffineMap
from .lp import EQ, LinConstraint
from .zoo import VertexSet, family_labels, family_param


def face_equality(coeffs, rhs) -> LinConstraint:
    """A valid-tight face constraint: ``coeffs . x <= rhs`` holds on the
    (stage-relative) target and the face takes it with equality."""
    return LinConstraint.make(coeffs, EQ, rhs)


@dataclass(frozen=True)
class FaceSpec:
    """Face of the target: coordinate fixings plus staged equalities.

    Fixings are always valid on a 0/1 polytope (they tighten cube bounds).
    Every stage constraint is stored oriented so that the <= relaxation is
    the valid side.
    """

    zero_fixed: tuple = ()
    one_fixed: tuple = ()
    stages: tuple = ()   # tuple of tuples of LinConstraint with rel '='

    @staticmethod
    def make(zero_fixed=(), one_fixed=(), stages=()) -> "FaceSpec":
        zf = tuple(sorted(set(zero_fixed)))
        of = tuple(sorted(set(one_fixed)))
        if set(zf) & set(of):
            raise ValidationError("a label cannot be fixed to both 0 and 1")
        st = tuple(tuple(stage) for stage in stages if stage)
        for stage in st:
            for con in stage:
                if con.rel != EQ:
                    raise ValidationError("face stages hold equalities only")
        return FaceSpec(zf, of, st)

    @property
    def is_whole_polytope(self) -> bool:
        return not self.zero_fixed and not self.one_fixed and not self.stages

    def n_constraints(self) -> int:
        return (len(self.zero_fixed) + len(self.one_fixed)
                + sum(len(s) for s in self.stages))


@dataclass(eq=False)
class ReductionCertificate:
    """One theorem instantiated: source instance, target face, affine map.

    ``amap`` sends source coordinates (in the source's canonical label
    order) to target coordinates (canonical order of ``target_family``);
    verifying means checking it restricts to a bijection between the source
    vertices and the face vertices with equal affine ranks.
    """

    provenance: str
    source: VertexSet
    target_family: tuple
    face: FaceSpec
    amap: AffineMap
    claimed_param: int | None = None
    claimed_param_name: str = ""
    notes: tuple = ()

    def __post_init__(self):
        tgt_labels = family_labels(self.target_family)
        if self.amap.d_in != self.source.dim:
            raise ValidationError("certificate map input dimension mismatch")
        if self.amap.d_out != len(tgt_labels):
            raise ValidationError("certificate map output dimension mismatch")
        tset = set(tgt_labels)
        for lab in tuple(self.face.zero_fixed) + tuple(self.face.one_fixed):
            if lab not in tset:
                raise ValidationError(f"face fixes unknown target label {lab!r}")
        for stage in self.face.stages:
            for con in stage:
                for lab, _ in con.coeffs:
                    if lab not in tset:
                        raise ValidationError(f"face constraint uses unknown label {lab!r}")

    @property
    def target_labels(self) -> tuple:
        return family_labels(self.target_family)

    @property
    def cert_id(self) -> str:
        name, value = family_param(self.target_family)
        return f"{self.provenance}[{self.target_family[0]} {name}={value}]"


def identity_certificate(vs: VertexSet, provenance: str = "identity") -> ReductionCertificate:
    """The trivial certificate of a polytope against itself."""
    return ReductionCertificate(
        provenance=provenance,
        source=vs,
        target_family=vs.family,
        face=FaceSpec.make(),
        amap=AffineMap.identity(vs.dim),
        claimed_param=family_param(vs.family)[1],
        claimed_param_name=family_param(vs.family)[0],
    )
