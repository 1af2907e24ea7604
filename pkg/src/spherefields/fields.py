"""Linear vector fields on spheres, with exact certificates.

A linear field is a square rational matrix A acting as v(x) = A x in real
coordinates.  It is tangent on the whole sphere exactly when A is
skew-symmetric, and nowhere zero on the sphere exactly when A is nonsingular;
both conditions are decided exactly.

Independence of a family carries two certificate levels.  If the members are
skew, orthogonal and pairwise satisfy A^T B + B^T A = 0 (a Hurwitz-Radon
family), their values are orthonormal at every sphere point: a point-free
proof of independence everywhere.  Otherwise only the necessary condition can
be tested: Gram determinants at finitely many exact sample points.

Complex and quaternionic families are stored in realified coordinates; their
F-linear independence is equivalent to real independence of the expanded
family obtained by adjoining the right-multiplication composites.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt
from random import Random
from typing import Optional, Sequence

from .algebra import FVector, Scalar, alpha, inner, real_part
from .james import Field

Matrix = tuple[tuple[Fraction, ...], ...]

LIFT_DIRECTIONS = ("c_to_r", "h_to_c", "h_to_r")
PROMOTION_TARGETS = ("c", "h_via_c", "h_via_r")


def _entry(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("matrix entries must be exact rationals, not floats")
    return Fraction(x)


@dataclass(frozen=True)
class LinearField:
    """Square rational matrix representing the linear field v(x) = matrix x."""

    matrix: Matrix
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(_entry(x) for x in row) for row in self.matrix)
        if not rows:
            raise ValueError("empty matrix")
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "matrix", rows)

    @property
    def dim(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class FieldFamily:
    """Family of candidate fields on one sphere, with a claimed base field."""

    dim: int
    members: tuple[LinearField, ...]
    claimed_field: Field

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise ValueError("a family must have at least one member")
        for m in members:
            if m.dim != self.dim:
                raise ValueError(f"member {m.name!r} has dim {m.dim}, family has {self.dim}")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class SpherePoint:
    """Point of the unit sphere in R^N with exactly unit norm."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coords = tuple(_entry(x) for x in self.coords)
        if sum(c * c for c in coords) != 1:
            raise ValueError("coordinates do not have exact unit norm")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class FieldCertificate:
    """Which of the two field conditions hold for one matrix."""

    skew: bool
    nonsingular: bool

    @property
    def ok(self) -> bool:
        return self.skew and self.nonsingular


@dataclass(frozen=True)
class PromotionReport:
    """Outcome of an augmented-family independence check.

    level is "sufficient" when the Hurwitz-Radon relations hold (proof at
    every point), "sampled_only" when only the finite Gram test passed, and
    "fail" otherwise.
    """

    ok: bool
    level: str
    augmented: FieldFamily
    failed_member: Optional[str] = None
    witness: Optional[SpherePoint] = None


# ---------------------------------------------------------------------------
# exact matrix arithmetic


def _identity(n: int) -> Matrix:
    z, o = Fraction(0), Fraction(1)
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = []
    for i in range(n):
        acc = [Fraction(0)] * n
        for k, aik in enumerate(a[i]):
            if aik:
                row = b[k]
                for j in range(n):
                    if row[j]:
                        acc[j] += aik * row[j]
        out.append(tuple(acc))
    return tuple(out)


def _mat_vec(a: Matrix, x: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    return tuple(sum((aij * xj for aij, xj in zip(row, x) if aij), Fraction(0)) for row in a)


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a), Fraction(0))


def _is_skew(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(i, n))


def _is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def _mat_sum(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _det(a: Matrix) -> Fraction:
    n = len(a)
    m = [list(row) for row in a]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f /= pv
                prow = m[col]
                row = m[r]
                for k in range(col + 1, n):
                    if prow[k]:
                        row[k] -= f * prow[k]
                row[col] = Fraction(0)
    return det


def apply_field(f: LinearField, p: SpherePoint) -> tuple[Fraction, ...]:
    """The value of the field at a sphere point, as exact coordinates."""
    if f.dim != p.dim:
        raise ValueError(f"field dim {f.dim} vs point dim {p.dim}")
    return _mat_vec(f.matrix, p.coords)


# ---------------------------------------------------------------------------
# sample points


def stereographic_point(params: Sequence) -> SpherePoint:
    """Exact unit vector (2a, 1 - |a|^2) / (1 + |a|^2) from a in R^{N-1}.

    Inverse stereographic projection: unit norm holds by construction for any
    rational parameters, so this generates exact sphere points on demand.
    """
    a = [_entry(x) for x in params]
    s = sum(x * x for x in a)
    denom = 1 + s
    coords = [2 * x / denom for x in a]
    coords.append((1 - s) / denom)
    return SpherePoint(tuple(coords))


def default_points(dim: int, count: int, seed: int = 0) -> list[SpherePoint]:
    """Deterministic sample set: +-e_m for m < dim, then seeded random
    stereographic points with small rational parameters."""
    if dim < 2:
        raise ValueError(f"need dim >= 2, got {dim}")
    pts: list[SpherePoint] = []
    for m in range(dim - 1):
        for sign in (1, -1):
            coords = [Fraction(0)] * dim
            coords[m] = Fraction(sign)
            pts.append(SpherePoint(tuple(coords)))
    rng = Random(seed)
    while len(pts) < count:
        params = tuple(
            Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(dim - 1)
        )
        pts.append(stereographic_point(params))
    return pts[:count]


# ---------------------------------------------------------------------------
# constructions


_BLOCK_C_I = ((1, -1), (0, 1))
_BLOCKS_H = {
    # right multiplication in (a, b, d, c) slot order, one (column, sign) per row
    "i": ((1, -1), (0, 1), (3, -1), (2, 1)),
    "j": ((3, -1), (2, -1), (1, 1), (0, 1)),
    "k": ((2, -1), (3, 1), (0, 1), (1, -1)),
}


def _block_matrix(dim: int, block: tuple[tuple[int, int], ...], name: str) -> LinearField:
    size = len(block)
    rows = []
    for i in range(dim):
        base = (i // size) * size
        col, sign = block[i % size]
        row = [0] * dim
        row[base + col] = sign
        rows.append(tuple(row))
    return LinearField(tuple(rows), name=name)


def structure_matrix(t: str, model: Field, dim: int) -> LinearField:
    """Real matrix of right multiplication by the unit t.

    model C (dim even): t must be "i"; each complex slot pair (a, b) maps to
    (-b, a).  model H (dim divisible by 4): t in {"i", "j", "k"}; slots follow
    the (a, b, d, c) order of the quaternion repacking, so the "i" matrix
    coincides with the complex-model matrix of the same size.
    """
    if model is Field.C:
        if t != "i":
            raise ValueError("the complex model only has the unit i")
        if dim % 2:
            raise ValueError(f"complex model needs even dim, got {dim}")
        return _block_matrix(dim, _BLOCK_C_I, name=f"alpha_{t}")
    if model is Field.H:
        if t not in _BLOCKS_H:
            raise ValueError(f"unknown quaternion unit {t!r}")
        if dim % 4:
            raise ValueError(f"quaternionic model needs dim divisible by 4, got {dim}")
        return _block_matrix(dim, _BLOCKS_H[t], name=f"alpha_{t}")
    raise ValueError("model must be Field.C or Field.H")


def example4(n: int) -> tuple[LinearField, LinearField]:
    """The classical complex field on the sphere in C^n and its i-composite,
    both realified to R^{2n}.

    The field pairs consecutive complex slots (z_1, z_2) -> (-conj(z_2),
    conj(z_1)), which needs n even.  In real coordinates the two matrices act
    per block of four as (x1, x2, x3, x4) -> (-x3, x4, x1, -x2) and
    (x1, x2, x3, x4) -> (-x4, -x3, x2, x1); both are skew and orthogonal.
    """
    if n < 2 or n % 2:
        raise ValueError(f"the construction pairs complex slots: n must be even >= 2, got {n}")
    m1 = _block_matrix(2 * n, ((2, -1), (3, 1), (0, 1), (1, -1)), name="M1")
    m2 = _block_matrix(2 * n, ((3, -1), (2, -1), (1, 1), (0, 1)), name="M2")
    return m1, m2


# ---------------------------------------------------------------------------
# certificates


def is_vector_field(f: LinearField) -> FieldCertificate:
    """Exact test: skew-symmetric (tangent everywhere) and nonsingular
    (nowhere zero on the sphere)."""
    return FieldCertificate(skew=_is_skew(f.matrix), nonsingular=_det(f.matrix) != 0)


def hurwitz_radon_check(family: FieldFamily) -> bool:
    """True iff every member is skew with A^T A = I and every pair satisfies
    A^T B + B^T A = 0.

    A passing family has orthonormal values at every sphere point, which
    proves independence everywhere; this is a sufficient certificate only.
    """
    mats = [m.matrix for m in family.members]
    transposes = []
    ident = _identity(family.dim)
    for a in mats:
        if not _is_skew(a):
            return False
        at = _transpose(a)
        if _mat_mul(at, a) != ident:
            return False
        transposes.append(at)
    for l in range(len(mats)):
        for m in range(l + 1, len(mats)):
            cross = _mat_sum(_mat_mul(transposes[l], mats[m]), _mat_mul(transposes[m], mats[l]))
            if not _is_zero(cross):
                return False
    return True


def as_real_family(family: FieldFamily) -> FieldFamily:
    """Expand a complex or quaternionic family into the equivalent real one.

    F-linear independence of the original members is equivalent to real
    independence of the expanded family; real families pass through unchanged.
    """
    if family.claimed_field is Field.R:
        return family
    if family.claimed_field is Field.C:
        return lift(family, "c_to_r")
    return lift(family, "h_to_r")


def sampled_independence(
    family: FieldFamily, points: Sequence[SpherePoint]
) -> tuple[bool, Optional[SpherePoint]]:
    """Necessary condition: at each point the real Gram determinant of the
    member values is positive.

    Complex and quaternionic claims are first expanded to the equivalent real
    family.  Returns the first failing point as a witness; a pass over a
    finite sample is not a proof of independence everywhere.
    """
    fam = as_real_family(family)
    mats = [m.matrix for m in fam.members]
    for pt in points:
        if pt.dim != fam.dim:
            raise ValueError(f"point dim {pt.dim} vs family dim {fam.dim}")
        values = [_mat_vec(a, pt.coords) for a in mats]
        gram = tuple(tuple(_dot(u, v) for v in values) for u in values)
        if _det(gram) <= 0:
            return False, pt
    return True, None


# ---------------------------------------------------------------------------
# lifting between base fields


def _composite(mat: LinearField, struct: LinearField, suffix: str) -> LinearField:
    return LinearField(
        _mat_mul(struct.matrix, mat.matrix),
        name=f"{mat.name}_{suffix}" if mat.name else suffix,
    )


def lift(
    family: FieldFamily, direction: str, ts: Sequence[str] = ("i", "j", "k")
) -> FieldFamily:
    """Adjoin right-multiplication composites to descend to a smaller base field.

    c_to_r: each complex member A (realified coordinates, even dim) yields
    {A, JA} with J the complex-structure matrix: 2m real members.

    h_to_c: each quaternionic member A (realified coordinates, dim divisible
    by 4) yields {A, JA} with J the j-multiplication matrix: 2m members,
    complex in the repacked coordinates.

    h_to_r: each member yields {A} + {TA} for T over the unit matrices chosen
    by `ts` (default all of i, j, k): 4m real members.
    """
    if direction not in LIFT_DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}; choose from {LIFT_DIRECTIONS}")
    if direction == "c_to_r":
        if family.claimed_field is not Field.C:
            raise ValueError("c_to_r expects a complex-claimed family")
        j = structure_matrix("i", Field.C, family.dim)
        members = []
        for a in family.members:
            members.append(a)
            members.append(_composite(a, j, "i"))
        return FieldFamily(family.dim, tuple(members), Field.R)
    if family.claimed_field is not Field.H:
        raise ValueError(f"{direction} expects a quaternionic-claimed family")
    if direction == "h_to_c":
        j = structure_matrix("j", Field.H, family.dim)
        members = []
        for a in family.members:
            members.append(a)
            members.append(_composite(a, j, "j"))
        return FieldFamily(family.dim, tuple(members), Field.C)
    units = tuple(ts)
    if not units or any(u not in ("i", "j", "k") for u in units):
        raise ValueError(f"ts must be a nonempty subset of i, j, k, got {ts!r}")
    structs = [structure_matrix(u, Field.H, family.dim) for u in units]
    members = []
    for a in family.members:
        members.append(a)
        for u, st in zip(units, structs):
            members.append(_composite(a, st, u))
    return FieldFamily(family.dim, tuple(members), Field.R)


def promotes_to(
    family: FieldFamily,
    target: str,
    points: Sequence[SpherePoint],
    ts: Sequence[str] = ("i", "j", "k"),
) -> PromotionReport:
    """Check whether a family can be the realification of a higher-field one.

    Builds the augmented family by adjoining structure-matrix composites
    (J A for target "c"; the j-composite for "h_via_c"; the i, j, k
    composites for "h_via_r"), certifies every composite as a field, then
    grades independence of the augmented family: Hurwitz-Radon relations on
    its real expansion give level "sufficient", a passing Gram sample gives
    "sampled_only", anything else is "fail" with the reason recorded.
    """
    if target not in PROMOTION_TARGETS:
        raise ValueError(f"unknown target {target!r}; choose from {PROMOTION_TARGETS}")
    if target == "c":
        if family.claimed_field is not Field.R:
            raise ValueError("target c expects a real-claimed family")
        structs = [("i", structure_matrix("i", Field.C, family.dim))]
    elif target == "h_via_c":
        if family.claimed_field is not Field.C:
            raise ValueError("target h_via_c expects a complex-claimed family")
        structs = [("j", structure_matrix("j", Field.H, family.dim))]
    else:
        if family.claimed_field is not Field.R:
            raise ValueError("target h_via_r expects a real-claimed family")
        structs = [(u, structure_matrix(u, Field.H, family.dim)) for u in ts]

    composites = [
        _composite(a, st, u) for a in family.members for u, st in structs
    ]
    augmented = FieldFamily(
        family.dim, tuple(family.members) + tuple(composites), family.claimed_field
    )
    for comp in composites:
        if not is_vector_field(comp).ok:
            return PromotionReport(False, "fail", augmented, failed_member=comp.name)
    expanded = as_real_family(augmented)
    if hurwitz_radon_check(expanded):
        return PromotionReport(True, "sufficient", augmented)
    ok, witness = sampled_independence(expanded, points)
    if ok:
        return PromotionReport(True, "sampled_only", augmented)
    return PromotionReport(False, "fail", augmented, witness=witness)


# ---------------------------------------------------------------------------
# orthogonalization


def gram_schmidt(
    vectors: Sequence[FVector], base_field: Optional[Field] = None
) -> tuple[list[FVector], list[Fraction]]:
    """Exact orthogonalization under the F-inner product.

    Returns pairwise-orthogonal vectors spanning the same flags, plus their
    exact squared norms.  Normalization is left to the caller (square roots
    are not rational); see unit_float_rendering.  Linearly dependent input is
    detected by a vanishing squared norm and rejected.
    """
    if not vectors:
        raise ValueError("need at least one vector")
    fld = base_field or vectors[0].field
    out: list[FVector] = []
    norms: list[Fraction] = []
    for idx, v in enumerate(vectors):
        if v.field is not fld:
            raise ValueError(f"vector {idx} is over {v.field.value}, expected {fld.value}")
        w = v
        for prev, nrm in zip(out, norms):
            coef = inner(prev, w) * (Fraction(1) / nrm)
            w = w - alpha(prev, coef)
        sq = inner(w, w)
        if not _imag_is_zero(sq):
            raise ArithmeticError("squared norm has a nonzero imaginary part")
        nrm = real_part(sq)
        if nrm == 0:
            raise ValueError(f"vector {idx} depends on its predecessors")
        out.append(w)
        norms.append(nrm)
    return out, norms


def _imag_is_zero(s: Scalar) -> bool:
    if isinstance(s, Fraction):
        return True
    if hasattr(s, "d"):
        return not (s.b or s.c or s.d)
    return not s.b


def unit_float_rendering(
    vectors: Sequence[FVector], squared_norms: Sequence[Fraction]
) -> list[list[tuple[float, ...]]]:
    """Floating-point unit vectors from exact orthogonal output.

    Each component becomes a tuple of its real coordinates (1, 2 or 4 of
    them) divided by the square root of the exact squared norm.  This is the
    only deliberately inexact operation in the package.
    """
    rendered = []
    for v, sq in zip(vectors, squared_norms):
        scale = 1.0 / sqrt(float(sq))
        row = []
        for comp in v.components:
            if isinstance(comp, Fraction):
                row.append((float(comp) * scale,))
            elif hasattr(comp, "d"):
                row.append(tuple(float(x) * scale for x in (comp.a, comp.b, comp.c, comp.d)))
            else:
                row.append((float(comp.a) * scale, float(comp.b) * scale))
        rendered.append(row)
    return rendered


# ---------------------------------------------------------------------------
# family files


def family_to_json(family: FieldFamily) -> str:
    """Serialize a family; entries are exact decimal strings like "-2/3"."""
    doc = {
        "space_dim": family.dim,
        "claimed_field": family.claimed_field.value,
        "fields": [
            {
                "name": m.name or f"F{i + 1}",
                "matrix": [[str(x) for x in row] for row in m.matrix],
            }
            for i, m in enumerate(family.members)
        ],
    }
    return json.dumps(doc, indent=2)


def family_from_json(text: str) -> FieldFamily:
    """Parse a family file; raises ValueError on any malformed content."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("top level must be an object")
    try:
        dim = doc["space_dim"]
        claimed = Field(doc["claimed_field"])
        entries = doc["fields"]
    except (KeyError, ValueError) as exc:
        raise ValueError(f"missing or invalid key: {exc}") from None
    if not isinstance(entries, list) or not entries:
        raise ValueError("'fields' must be a nonempty list")
    members = []
    for item in entries:
        try:
            name = item["name"]
            matrix = tuple(tuple(Fraction(x) for x in row) for row in item["matrix"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"bad field entry: {exc}") from None
        members.append(LinearField(matrix, name=str(name)))
    return FieldFamily(dim, tuple(members), claimed)
