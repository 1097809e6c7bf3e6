"""Exact integer power series and the graded dimension formulas built on them.

All coefficients are Python ints, so nothing overflows and nothing is
approximated.  A weight signature (e, h) records generator weights e_i >= 1
and relator weights h_j >= 2; the attached rational series

    1 / (1 - sum_i t**e_i + sum_j t**h_j)

is the graded dimension series of the quotient by a strongly free sequence,
and the formulas below (reduced dimensions b_n, lower central dimensions
a_n, restricted filtration dimensions) are all derived from its roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arith import mobius


class NonRealizableError(ArithmeticError):
    """A dimension formula produced a negative or fractional value.

    Carries the offending index n.  A signature that triggers this cannot be
    realized by a strongly free sequence, so callers surface the error as a
    diagnostic rather than a crash.
    """

    def __init__(self, n: int, value, reason: str):
        super().__init__(f"dimension at n = {n} is {reason}: {value}")
        self.n = n
        self.value = value
        self.reason = reason


@dataclass(frozen=True)
class WeightSignature:
    """Generator weights e (each >= 1) and relator weights h (each >= 2)."""

    e: tuple[int, ...]
    h: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        if not self.e:
            raise ValueError("a signature needs at least one generator weight")
        if any(w < 1 for w in self.e):
            raise ValueError(f"generator weights must be >= 1, got {self.e}")
        if any(w < 2 for w in self.h):
            raise ValueError(f"relator weights must be >= 2, got {self.h}")

    @property
    def r(self) -> int:
        """Number of weight-1 generators."""
        return sum(1 for w in self.e if w == 1)

    def denominator(self) -> list[int]:
        """Coefficients of 1 - sum_i t**e_i + sum_j t**h_j."""
        den = [0] * (max(self.e + self.h) + 1)
        den[0] = 1
        for w in self.e:
            den[w] -= 1
        for w in self.h:
            den[w] += 1
        return den


@dataclass(frozen=True)
class IntSeries:
    """Truncated power series with exact integer coefficients c_0..c_N."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series carries at least its constant term")

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def pairs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.coeffs))


@dataclass(frozen=True)
class DimensionSequence:
    """A dimension sequence with an explicit kind tag and start index.

    kind is one of 'reduced_b' (start 2), 'lower_central_a' (start 1),
    'zassenhaus_a' (start 1) or 'quotient_dims' (start 0); values[k] is the
    dimension at n = start + k.
    """

    kind: str
    start: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def pairs(self) -> list[tuple[int, int]]:
        return [(self.start + k, v) for k, v in enumerate(self.values)]

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "start": self.start, "values": list(self.values)}


def _check_n_max(n_max: int, minimum: int = 0) -> None:
    if n_max < minimum:
        raise ValueError(f"n_max must be >= {minimum}, got {n_max}")


def _mul_trunc(a: list[int], b: list[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, ai in enumerate(a[: n_max + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: n_max + 1 - i]):
            out[i + j] += ai * bj
    return out


def expand_rational(numerator, denominator, n_max: int) -> IntSeries:
    """Expand numerator/denominator as a power series through degree n_max.

    The denominator must have constant term exactly 1, which keeps every
    coefficient an integer; c_n = num_n - sum_{k>=1} den_k * c_{n-k}.
    """
    _check_n_max(n_max)
    num = [int(c) for c in numerator]
    den = [int(c) for c in denominator]
    if not den or den[0] == 0:
        raise ValueError("denominator has zero constant term")
    if den[0] != 1:
        raise ValueError(f"denominator constant term must be 1, got {den[0]}")
    coeffs = [0] * (n_max + 1)
    for n in range(n_max + 1):
        c = num[n] if n < len(num) else 0
        for k in range(1, min(n, len(den) - 1) + 1):
            c -= den[k] * coeffs[n - k]
        coeffs[n] = c
    return IntSeries(tuple(coeffs))


def strongly_free_series(sig: WeightSignature, n_max: int) -> IntSeries:
    """Series of 1 / (1 - sum t**e_i + sum t**h_j) through degree n_max."""
    return expand_rational([1], sig.denominator(), n_max)


def gamma_series(sig: WeightSignature, n_max: int) -> IntSeries:
    """Series of the same rational function divided by (1 - t).

    Coefficients are the partial sums of strongly_free_series, the graded
    dimensions of the corresponding quotient over F2[pi].
    """
    den = _mul_trunc(sig.denominator(), [1, -1], n_max + len(sig.denominator()) + 1)
    return expand_rational([1], den, n_max)


def power_sums(sig: WeightSignature, length: int) -> tuple[int, ...]:
    """Power sums p_1..p_length of the inverse roots of the signature denominator.

    Newton's identities on 1 + c_1 t + ... + c_s t**s give
    p_1 = -c_1 and p_l = -l*c_l - sum_{i=1}^{l-1} c_i p_{l-i}; everything
    stays in Z, no root is ever extracted numerically.
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    den = sig.denominator()
    c = lambda i: den[i] if i < len(den) else 0
    p: list[int] = []
    for ell in range(1, length + 1):
        total = -ell * c(ell)
        for i in range(1, ell):
            total -= c(i) * p[ell - i - 1]
        p.append(total)
    return tuple(p)


def reduced_dims_bn(sig: WeightSignature, n_max: int) -> DimensionSequence:
    """Dimensions b_n, n = 2..n_max, of the reduced graded algebra of a strongly
    free quotient:

        b_n = (1/n) * sum_{l | n} mobius(n/l) * (p_l + (-1)**l * r)

    with p_l the denominator power sums and r the number of weight-1
    generators.  Raises NonRealizableError naming the first n where the
    formula goes fractional or negative; such a signature is not realizable
    by a strongly free sequence.
    """
    _check_n_max(n_max, 2)
    p = power_sums(sig, n_max)
    r = sig.r
    values = []
    for n in range(2, n_max + 1):
        total = 0
        for ell in range(1, n + 1):
            if n % ell == 0:
                total += mobius(n // ell) * (p[ell - 1] + (r if ell % 2 == 0 else -r))
        q, rem = divmod(total, n)
        if rem != 0:
            raise NonRealizableError(n, total / n, "not an integer")
        if q < 0:
            raise NonRealizableError(n, q, "negative")
        values.append(q)
    return DimensionSequence("reduced_b", 2, tuple(values))


def lower_central_dims(sig: WeightSignature, n_max: int) -> DimensionSequence:
    """Dimensions a_n, n = 1..n_max: a_1 = r and a_n = sum_{k=2}^{n} b_k."""
    _check_n_max(n_max, 1)
    values = [sig.r]
    if n_max >= 2:
        running = 0
        for b in reduced_dims_bn(sig, n_max).values:
            running += b
            values.append(running)
    return DimensionSequence("lower_central_a", 1, tuple(values))


def _one_plus_tn_pow(n: int, a: int, n_max: int) -> list[int]:
    """(1 + t**n)**a truncated: binomial coefficients on multiples of n."""
    out = [0] * (n_max + 1)
    for k in range(n_max // n + 1):
        out[n * k] = comb(a, k)
    return out


def _inv_one_minus_tn_pow(n: int, b: int, n_max: int) -> list[int]:
    """(1 - t**n)**(-b) truncated, b >= 0: multiset coefficients on multiples of n."""
    out = [0] * (n_max + 1)
    for k in range(n_max // n + 1):
        out[n * k] = comb(b + k - 1, k) if k else 1
    return out


def zassenhaus_dims(d: int, m: int, n_max: int) -> DimensionSequence:
    """Dimensions a_n extracted from prod_{n>=1} (1 + t**n)**a_n = 1/(1 - d*t + m*t**2).

    The a_n are read off degree by degree: divide the target series by the
    partial product so far and take the leading new coefficient.  Raises
    NonRealizableError on a negative a_n.
    """
    if d < 1 or m < 0:
        raise ValueError(f"need d >= 1 and m >= 0, got d = {d}, m = {m}")
    _check_n_max(n_max, 1)
    target = expand_rational([1], [1, -d, m], n_max)
    partial = [1]
    values = []
    for n in range(1, n_max + 1):
        quotient = expand_rational(target.coeffs, partial, n_max)
        a_n = quotient[n]
        if a_n < 0:
            raise NonRealizableError(n, a_n, "negative")
        values.append(a_n)
        partial = _mul_trunc(partial, _one_plus_tn_pow(n, a_n, n_max), n_max)
    return DimensionSequence("zassenhaus_a", 1, tuple(values))


def verify_cent_g(sig: WeightSignature, n_max: int) -> bool:
    """Check (1+t)**r * prod_{n>=2} (1 - t**n)**(-b_n) == strongly_free_series.

    Exact through degree n_max; True when the product identity holds.
    Propagates NonRealizableError from the b_n computation.
    """
    _check_n_max(n_max, 2)
    lhs = _one_plus_tn_pow(1, sig.r, n_max)
    for n, b_n in reduced_dims_bn(sig, n_max).pairs():
        lhs = _mul_trunc(lhs, _inv_one_minus_tn_pow(n, b_n, n_max), n_max)
    return tuple(lhs) == strongly_free_series(sig, n_max).coeffs
