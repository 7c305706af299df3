"""Theorem-level verifiers with exact pass/fail reports.

Checks, all decided by exact exponent arithmetic:

* transference: the products of the i-th primal and (n+1-i)-th dual
  successive maxima, which equal 1 for the maximum norm and stay below
  c' = c1^-2 for weighted norms with weights <= 1;
* the second-theorem product identity: prod of maxima = |det B| for the
  maximum norm, <= c'' * |det B| with c'' = c1^-rank otherwise;
* dual orthogonality: the dual of an orthogonal basis is orthogonal for
  the maximum norm, and may or may not be for weighted norms;
* the rank-1 all-ones family, whose single transference product is
  |1/m|_p and therefore unbounded over m = p^l: the reason the bounded
  statements require full rank.

For weighted norms whose weights exceed 1 the c' / c'' formulas are not
valid lower-equivalence constants, so reports carry bound_applies=False
and record rather than assert the comparison.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .absval import AbsValue
from .field import FieldDesc, FieldKind, Scalar
from .gfpoly import Poly, RatFunc
from .lattice import (
    Lattice,
    OrthogonalityResult,
    RankDeficientError,
    dual,
    det_abs,
    is_orthogonal_basis,
    successive_maxima,
)
from .norms import NormSpec
from . import oracle


class InputNotOrthogonalError(ValueError):
    pass


@dataclass(frozen=True)
class TransferenceReport:
    products: tuple[AbsValue, ...]  # i-th primal times (n+1-i)-th dual maximum
    bound: AbsValue
    passed: bool
    is_max_norm: bool
    max_product: AbsValue
    bound_applies: bool
    primal_maxima: tuple[AbsValue, ...]
    dual_maxima: tuple[AbsValue, ...]


@dataclass(frozen=True)
class MinkowskiReport:
    product: AbsValue
    det: AbsValue
    bound: AbsValue
    passed: bool
    is_max_norm: bool
    bound_applies: bool
    maxima: tuple[AbsValue, ...]


def transference_report(lat: Lattice, norm: NormSpec) -> TransferenceReport:
    if not lat.is_full_rank:
        raise RankDeficientError(
            "transference products need a full-rank lattice; for the rank-1 "
            "all-ones family use counterexample_rank1")
    n = lat.rank
    primal = successive_maxima(lat, norm)
    du = successive_maxima(dual(lat), norm)
    products = tuple(primal[i] * du[n - 1 - i] for i in range(n))
    one = AbsValue.one()
    if norm.is_max_norm:
        bound = one
        passed = all(pr == one for pr in products)
    else:
        c1, _ = norm.equivalence_constants()
        bound = c1 ** -2
        passed = all(pr <= bound for pr in products)
    return TransferenceReport(
        products=products,
        bound=bound,
        passed=passed,
        is_max_norm=norm.is_max_norm,
        max_product=max(products),
        bound_applies=norm.is_max_norm or norm.weights_at_most_one,
        primal_maxima=primal,
        dual_maxima=du,
    )


def minkowski_report(lat: Lattice, norm: NormSpec) -> MinkowskiReport:
    if not lat.is_full_rank:
        raise RankDeficientError("the product identity needs a full-rank lattice")
    maxima = successive_maxima(lat, norm)
    product = AbsValue.one()
    for m in maxima:
        product = product * m
    det = det_abs(lat)
    if norm.is_max_norm:
        bound = det
        passed = product == det
    else:
        c1, _ = norm.equivalence_constants()
        bound = (c1 ** -lat.rank) * det
        passed = product <= bound
    return MinkowskiReport(
        product=product,
        det=det,
        bound=bound,
        passed=passed,
        is_max_norm=norm.is_max_norm,
        bound_applies=norm.is_max_norm or norm.weights_at_most_one,
        maxima=maxima,
    )


def dual_orthogonality_check(lat: Lattice, norm: NormSpec,
                             resolution: oracle.Resolution | None = None) -> OrthogonalityResult:
    """Check whether the dual of the given orthogonal basis is orthogonal.

    Always true for the maximum norm; for weighted norms either outcome
    is possible and a failing witness is returned.
    """
    if not lat.is_full_rank:
        raise RankDeficientError("dual orthogonality needs a full-rank lattice")
    primal_res = resolution or oracle.default_resolution(lat, norm)
    primal = is_orthogonal_basis(lat, norm, primal_res.K)
    if not primal:
        raise InputNotOrthogonalError(
            f"input basis is not orthogonal: witness {primal.witness}")
    d = dual(lat)
    dual_res = resolution or oracle.default_resolution(d, norm)
    return is_orthogonal_basis(d, norm, dual_res.K)


def counterexample_rank1(m: int, field: FieldDesc) -> TransferenceReport:
    """Transference product of the rank-1 all-ones lattice in k^m.

    The product is |1/m|_p under the maximum norm, so it is p^l for
    m = p^l: no uniform upper bound exists without full rank.  Over
    F_p((T)) the dual exists only when p does not divide m.
    """
    if m < 1:
        raise ValueError("ambient dimension must be >= 1")
    one = field.one()
    lat = Lattice.from_columns(field, [[one] * m])
    norm = NormSpec.max_norm(field, m)
    primal = successive_maxima(lat, norm)
    du = successive_maxima(dual(lat), norm)
    product = primal[0] * du[0]
    return TransferenceReport(
        products=(product,),
        bound=AbsValue.one(),
        passed=product == AbsValue.one(),
        is_max_norm=True,
        max_product=product,
        bound_applies=True,
        primal_maxima=primal,
        dual_maxima=du,
    )


# ---------------------------------------------------------------------------
# seeded random instances for property corpora


def random_unit(rng: random.Random, field: FieldDesc) -> Scalar:
    """A coefficient-ring unit (valuation exactly 0), small by construction."""
    if field.kind is FieldKind.QP:
        def pick():
            while True:
                a = rng.randint(1, 40)
                if a % field.p:
                    return a
        return Fraction(rng.choice((-1, 1)) * pick(), pick())
    p = field.p

    def poly():
        deg = rng.randint(0, 2)
        coeffs = [rng.randint(1, p - 1)] + [rng.randrange(p) for _ in range(deg)]
        return Poly(p, coeffs)

    return RatFunc(poly(), poly())


def random_scalar(rng: random.Random, field: FieldDesc,
                  val_range: tuple[int, int] = (-3, 3)) -> Scalar:
    """Unit times uniformizer^v with v uniform in val_range."""
    v = rng.randint(*val_range)
    return random_unit(rng, field) * field.uniformizer() ** v


def random_lattice(rng: random.Random, field: FieldDesc, rank: int,
                   ambient: int | None = None,
                   val_range: tuple[int, int] = (-3, 3)) -> Lattice:
    """Random lattice with entry valuations in val_range, resampled until independent."""
    ambient = rank if ambient is None else ambient
    while True:
        cols = [[random_scalar(rng, field, val_range) for _ in range(ambient)]
                for _ in range(rank)]
        try:
            return Lattice.from_columns(field, cols)
        except ValueError:
            continue


def random_weight_exponents(rng: random.Random, dim: int,
                            max_value: int = 2, max_den: int = 4) -> list[Fraction]:
    """Exponents a/b in [0, max_value] with b <= max_den (weights all <= 1)."""
    out = []
    for _ in range(dim):
        b = rng.randint(1, max_den)
        a = rng.randint(0, max_value * b)
        out.append(Fraction(a, b))
    return out
