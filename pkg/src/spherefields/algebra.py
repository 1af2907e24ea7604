"""Exact arithmetic in the three division algebras and their vector spaces.

Scalars are rationals, complex rationals, or rational quaternions; every
operation is exact, so the composition and inner-product identities relating
the three algebras can be checked by literal equality instead of tolerances.

Conventions: vectors are right F-modules, the inner product is
conjugate-linear in the first slot and linear in the second, and the
complex repacking of a quaternion a + bi + cj + dk is the pair
(a + bi, d + ci); note the third real slot is d, not c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable, Sequence, Union

from .james import Field

Rational = Union[int, Fraction]


def _frac(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class ComplexScalar:
    """a + bi with exact rational parts."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.a, -self.b)

    def __neg__(self) -> "ComplexScalar":
        return ComplexScalar(-self.a, -self.b)

    def __add__(self, other: "ComplexScalar") -> "ComplexScalar":
        if not isinstance(other, ComplexScalar):
            return NotImplemented
        return ComplexScalar(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "ComplexScalar") -> "ComplexScalar":
        if not isinstance(other, ComplexScalar):
            return NotImplemented
        return ComplexScalar(self.a - other.a, self.b - other.b)

    def __mul__(self, other: Union["ComplexScalar", Rational]) -> "ComplexScalar":
        if isinstance(other, ComplexScalar):
            return ComplexScalar(
                self.a * other.a - self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        if isinstance(other, (int, Fraction)):
            return ComplexScalar(self.a * other, self.b * other)
        return NotImplemented

    def __rmul__(self, other: Rational) -> "ComplexScalar":
        if isinstance(other, (int, Fraction)):
            return ComplexScalar(self.a * other, self.b * other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)


@dataclass(frozen=True)
class QuatScalar:
    """a + bi + cj + dk with exact rational parts and Hamilton multiplication."""

    a: Fraction
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    def conjugate(self) -> "QuatScalar":
        return QuatScalar(self.a, -self.b, -self.c, -self.d)

    def __neg__(self) -> "QuatScalar":
        return QuatScalar(-self.a, -self.b, -self.c, -self.d)

    def __add__(self, other: "QuatScalar") -> "QuatScalar":
        if not isinstance(other, QuatScalar):
            return NotImplemented
        return QuatScalar(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other: "QuatScalar") -> "QuatScalar":
        if not isinstance(other, QuatScalar):
            return NotImplemented
        return QuatScalar(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __mul__(self, other: Union["QuatScalar", Rational]) -> "QuatScalar":
        if isinstance(other, QuatScalar):
            a1, b1, c1, d1 = self.a, self.b, self.c, self.d
            a2, b2, c2, d2 = other.a, other.b, other.c, other.d
            return QuatScalar(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        if isinstance(other, (int, Fraction)):
            return QuatScalar(
                self.a * other, self.b * other, self.c * other, self.d * other
            )
        return NotImplemented

    def __rmul__(self, other: Rational) -> "QuatScalar":
        if isinstance(other, (int, Fraction)):
            return QuatScalar(
                self.a * other, self.b * other, self.c * other, self.d * other
            )
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)


C_I = ComplexScalar(0, 1)
Q_I = QuatScalar(0, 1, 0, 0)
Q_J = QuatScalar(0, 0, 1, 0)
Q_K = QuatScalar(0, 0, 0, 1)

Scalar = Union[Fraction, ComplexScalar, QuatScalar]


def quat_mul(x: QuatScalar, y: QuatScalar) -> QuatScalar:
    """Hamilton product x y (noncommutative)."""
    if not isinstance(x, QuatScalar) or not isinstance(y, QuatScalar):
        raise TypeError("quat_mul takes two quaternions")
    return x * y


def conj(s: Union[Scalar, int]) -> Scalar:
    """Conjugation: negates every imaginary part; the identity on rationals."""
    if isinstance(s, (ComplexScalar, QuatScalar)):
        return s.conjugate()
    if isinstance(s, (int, Fraction)):
        return _frac(s)
    raise TypeError(f"cannot conjugate {type(s).__name__}")


def as_complex(s: Union[ComplexScalar, Rational]) -> ComplexScalar:
    """Embed a rational into C (the identity on complex scalars)."""
    if isinstance(s, ComplexScalar):
        return s
    return ComplexScalar(_frac(s))


def as_quat(s: Union[QuatScalar, ComplexScalar, Rational]) -> QuatScalar:
    """Embed a rational or complex scalar into H (the identity on quaternions)."""
    if isinstance(s, QuatScalar):
        return s
    if isinstance(s, ComplexScalar):
        return QuatScalar(s.a, s.b)
    return QuatScalar(_frac(s))


def real_part(s: Union[Scalar, int]) -> Fraction:
    if isinstance(s, (ComplexScalar, QuatScalar)):
        return s.a
    return _frac(s)


def _coerce_component(field: Field, x) -> Scalar:
    if field is Field.R:
        return _frac(x)
    if field is Field.C:
        if isinstance(x, QuatScalar):
            raise TypeError("quaternion component in a complex vector")
        return as_complex(x)
    return as_quat(x)


@dataclass(frozen=True)
class FVector:
    """Nonempty vector with exact components over one of R, C, H."""

    field: Field
    components: tuple

    def __post_init__(self) -> None:
        comps = tuple(_coerce_component(self.field, x) for x in self.components)
        if not comps:
            raise ValueError("vectors must be nonempty")
        object.__setattr__(self, "components", comps)

    def __len__(self) -> int:
        return len(self.components)

    def __add__(self, other: "FVector") -> "FVector":
        _check_compatible(self, other)
        return FVector(
            self.field, tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __sub__(self, other: "FVector") -> "FVector":
        _check_compatible(self, other)
        return FVector(
            self.field, tuple(a - b for a, b in zip(self.components, other.components))
        )

    def __neg__(self) -> "FVector":
        return FVector(self.field, tuple(-a for a in self.components))


def _check_compatible(x: FVector, y: FVector) -> None:
    if x.field is not y.field:
        raise ValueError(f"field mismatch: {x.field.value} vs {y.field.value}")
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


def inner(x: FVector, y: FVector) -> Scalar:
    """Standard F-inner product sum of conj(x_m) y_m.

    Conjugate-linear in the first slot, linear in the second; inner(x, x) is
    a nonnegative rational (all imaginary parts cancel).
    """
    _check_compatible(x, y)
    if x.field is Field.R:
        total = Fraction(0)
        for a, b in zip(x.components, y.components):
            total += a * b
        return total
    total = ComplexScalar(0) if x.field is Field.C else QuatScalar(0)
    for a, b in zip(x.components, y.components):
        total = total + a.conjugate() * b
    return total


def _embed_scalar(field: Field, t) -> Scalar:
    if field is Field.R:
        return _frac(t)
    if field is Field.C:
        if isinstance(t, QuatScalar):
            raise TypeError("cannot act on a complex vector by a quaternion")
        return as_complex(t)
    return as_quat(t)


def alpha(x: FVector, t) -> FVector:
    """Right multiplication x -> x t; subfield scalars are embedded first."""
    t = _embed_scalar(x.field, t)
    return FVector(x.field, tuple(c * t for c in x.components))


def realify_c(x: FVector) -> FVector:
    """C^n -> R^{2n}: (a_1 + b_1 i, ...) -> (a_1, b_1, ..., a_n, b_n)."""
    if x.field is not Field.C:
        raise ValueError("realify_c expects a complex vector")
    out: list[Fraction] = []
    for z in x.components:
        out.append(z.a)
        out.append(z.b)
    return FVector(Field.R, tuple(out))


def unrealify_c(x: FVector) -> FVector:
    """R^{2n} -> C^n, inverse of realify_c; the length must be even."""
    if x.field is not Field.R:
        raise ValueError("unrealify_c expects a real vector")
    if len(x) % 2:
        raise ValueError(f"length must be even, got {len(x)}")
    comps = x.components
    return FVector(
        Field.C,
        tuple(ComplexScalar(comps[2 * i], comps[2 * i + 1]) for i in range(len(x) // 2)),
    )


def complexify_h(x: FVector) -> FVector:
    """H^n -> C^{2n}: a + bi + cj + dk -> (a + bi, d + ci) per component."""
    if x.field is not Field.H:
        raise ValueError("complexify_h expects a quaternionic vector")
    out: list[ComplexScalar] = []
    for q in x.components:
        out.append(ComplexScalar(q.a, q.b))
        out.append(ComplexScalar(q.d, q.c))
    return FVector(Field.C, tuple(out))


def uncomplexify_h(x: FVector) -> FVector:
    """C^{2n} -> H^n, inverse of complexify_h; the length must be even."""
    if x.field is not Field.C:
        raise ValueError("uncomplexify_h expects a complex vector")
    if len(x) % 2:
        raise ValueError(f"length must be even, got {len(x)}")
    comps = x.components
    out = []
    for i in range(len(x) // 2):
        z1, z2 = comps[2 * i], comps[2 * i + 1]
        out.append(QuatScalar(z1.a, z1.b, z2.b, z2.a))
    return FVector(Field.H, tuple(out))


def realify_h(x: FVector) -> FVector:
    """H^n -> R^{4n}: realify_c after complexify_h, i.e. (a, b, d, c) slots."""
    return realify_c(complexify_h(x))


def unrealify_h(x: FVector) -> FVector:
    """R^{4n} -> H^n, inverse of realify_h; the length must be divisible by 4."""
    if len(x) % 4:
        raise ValueError(f"length must be divisible by 4, got {len(x)}")
    return uncomplexify_h(unrealify_c(x))


_MAPS: dict[str, Callable[[FVector], FVector]] = {
    "r_C": realify_c,
    "c_H": complexify_h,
    "r_H": realify_h,
    "r_C_inv": unrealify_c,
    "c_H_inv": uncomplexify_h,
    "r_H_inv": unrealify_h,
}

MAP_NAMES = tuple(_MAPS)


def apply_map(name: str, x: FVector) -> FVector:
    """Apply one of the repacking maps r_C, c_H, r_H or their inverses by name."""
    try:
        fn = _MAPS[name]
    except KeyError:
        raise ValueError(f"unknown map {name!r}; choose from {MAP_NAMES}") from None
    return fn(x)


IDENTITIES = (
    "c_h_commutes",
    "r_c_collapse",
    "r_h_product",
    "inner_c_to_r",
    "inner_h_to_c",
    "inner_h_to_r",
)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def identity_check(
    name: str,
    *,
    x: FVector | None = None,
    y: FVector | None = None,
    v: FVector | None = None,
    w: FVector | None = None,
    s: ComplexScalar | None = None,
    t: QuatScalar | None = None,
) -> bool:
    """Evaluate both sides of one cross-algebra identity exactly.

    Composition identities (x in H^n, s in C, t in H):
      c_h_commutes   c_H(x s) == c_H(x) s
      r_c_collapse   r_C(c_H(x) s) == r_H(x s)
      r_h_product    r_C(c_H(x t) s) == r_H(x (t s))

    Inner-product identities (x, y in C^n; v, w in H^n):
      inner_c_to_r   <x|y>_C == <r_C x|r_C y>_R - <r_C x|r_C(y i)>_R i
      inner_h_to_c   <v|w>_H == <c_H v|c_H w>_C - <c_H v|c_H(w j)>_C j
      inner_h_to_r   <v|w>_H == <r_H v|r_H w>_R - sum_t <r_H v|r_H(w t)>_R t
                     over t in {i, j, k}
    """
    if name == "c_h_commutes":
        _require(x is not None and s is not None, "needs x (H vector) and s (complex)")
        return complexify_h(alpha(x, s)) == alpha(complexify_h(x), s)
    if name == "r_c_collapse":
        _require(x is not None and s is not None, "needs x (H vector) and s (complex)")
        return realify_c(alpha(complexify_h(x), s)) == realify_h(alpha(x, s))
    if name == "r_h_product":
        _require(
            x is not None and s is not None and t is not None,
            "needs x (H vector), s (complex), t (quaternion)",
        )
        lhs = realify_c(alpha(complexify_h(alpha(x, t)), s))
        return lhs == realify_h(alpha(x, quat_mul(t, as_quat(s))))
    if name == "inner_c_to_r":
        _require(x is not None and y is not None, "needs x, y (complex vectors)")
        re = inner(realify_c(x), realify_c(y))
        im = inner(realify_c(x), realify_c(alpha(y, C_I)))
        return inner(x, y) == as_complex(re) - as_complex(im) * C_I
    if name == "inner_h_to_c":
        _require(v is not None and w is not None, "needs v, w (quaternionic vectors)")
        c1 = inner(complexify_h(v), complexify_h(w))
        c2 = inner(complexify_h(v), complexify_h(alpha(w, Q_J)))
        return inner(v, w) == as_quat(c1) - as_quat(c2) * Q_J
    if name == "inner_h_to_r":
        _require(v is not None and w is not None, "needs v, w (quaternionic vectors)")
        rv = realify_h(v)
        r1 = inner(rv, realify_h(w))
        r2 = inner(rv, realify_h(alpha(w, Q_I)))
        r3 = inner(rv, realify_h(alpha(w, Q_J)))
        r4 = inner(rv, realify_h(alpha(w, Q_K)))
        rhs = as_quat(r1) - as_quat(r2) * Q_I - as_quat(r3) * Q_J - as_quat(r4) * Q_K
        return inner(v, w) == rhs
    raise ValueError(f"unknown identity {name!r}; choose from {IDENTITIES}")


def random_rational(rng: Random, bound: int = 100) -> Fraction:
    """Uniform numerator in [-bound, bound] over uniform denominator in [1, bound]."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_scalar(field: Field, rng: Random, bound: int = 100) -> Scalar:
    if field is Field.R:
        return random_rational(rng, bound)
    if field is Field.C:
        return ComplexScalar(random_rational(rng, bound), random_rational(rng, bound))
    return QuatScalar(
        random_rational(rng, bound),
        random_rational(rng, bound),
        random_rational(rng, bound),
        random_rational(rng, bound),
    )


def random_vector(field: Field, n: int, rng: Random, bound: int = 100) -> FVector:
    return FVector(field, tuple(random_scalar(field, rng, bound) for _ in range(n)))


def identity_trial(name: str, dim: int, rng: Random, bound: int = 100) -> bool:
    """One random exact trial of the named identity in the given dimension."""
    if name in ("c_h_commutes", "r_c_collapse", "r_h_product"):
        return identity_check(
            name,
            x=random_vector(Field.H, dim, rng, bound),
            s=random_scalar(Field.C, rng, bound),
            t=random_scalar(Field.H, rng, bound) if name == "r_h_product" else None,
        )
    if name == "inner_c_to_r":
        return identity_check(
            name,
            x=random_vector(Field.C, dim, rng, bound),
            y=random_vector(Field.C, dim, rng, bound),
        )
    return identity_check(
        name,
        v=random_vector(Field.H, dim, rng, bound),
        w=random_vector(Field.H, dim, rng, bound),
    )


def run_identity_trials(
    trials: int,
    seed: int,
    dims: Sequence[int] = (1, 2, 3, 5),
    names: Sequence[str] = IDENTITIES,
    bound: int = 100,
) -> dict | None:
    """Seeded random exact checks; returns the first failure or None.

    Failures are reproducible from the seed: the generator is consumed in a
    fixed order (identities outermost, trials innermost).
    """
    rng = Random(seed)
    for name in names:
        for k in range(trials):
            dim = dims[k % len(dims)]
            if not identity_trial(name, dim, rng, bound):
                return {"identity": name, "trial": k, "dim": dim, "seed": seed}
    return None
