"""Brute-force graded dimensions of relator-ideal quotients.

For relators rho_1..rho_m in the truncated free algebra, the degree-n slice
of the two-sided ideal they generate is spanned by the products u * rho * v
(and pi^k * u * rho * v over F2[pi]) with monomial words u, v.  Each product
becomes one bit-packed row over the degree-n monomial basis; the quotient
dimension is the ambient count minus the GF(2) rank.  This is the
independent check the certificate criteria are compared against: a strongly
free relator sequence must reproduce

    1 / (1 - sum t^{e_i} + sum t^{h_j})        over F2
    the same divided by (1 - t)                over F2[pi]

degree by degree, and any mismatch degree is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gf2
from .quadlie import F2, F2PI, NcPoly, WeightedAlphabet, relator_to_poly, unit_alphabet
from .series import DimensionSequence, WeightSignature, gamma_series, strongly_free_series


class MemoryGuardError(MemoryError):
    """The estimated row storage for a degree exceeds the configured cap."""


@lru_cache(maxsize=None)
def _words(weights: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for i, w in enumerate(weights, start=1):
        if w <= n:
            out.extend((i,) + rest for rest in _words(weights, n - w))
    return tuple(out)


def words_of_weight(alphabet: WeightedAlphabet, n: int) -> tuple[tuple[int, ...], ...]:
    """All words of total weight n, in lexicographic order."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    return _words(alphabet.weights, n)


def word_counts(alphabet: WeightedAlphabet, n_max: int) -> list[int]:
    """Number of words of each weight 0..n_max (no materialization)."""
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for n in range(1, n_max + 1):
        counts[n] = sum(counts[n - w] for w in alphabet.weights if w <= n)
    return counts


@dataclass(frozen=True)
class DegreeRank:
    degree: int
    ambient: int
    rank: int
    quotient: int


@dataclass(frozen=True)
class RankProfile:
    ring: str
    per_degree: tuple[DegreeRank, ...]

    def dims(self) -> DimensionSequence:
        return DimensionSequence(
            "quotient_dims", 0, tuple(row.quotient for row in self.per_degree)
        )

    def to_json_dict(self) -> dict:
        return {
            "ring": self.ring,
            "per_degree": [
                {
                    "degree": row.degree,
                    "ambient": row.ambient,
                    "rank": row.rank,
                    "quotient": row.quotient,
                }
                for row in self.per_degree
            ],
        }

    def table(self) -> str:
        lines = ["degree  ambient  rank  quotient"]
        for row in self.per_degree:
            lines.append(f"{row.degree:>6}  {row.ambient:>7}  {row.rank:>4}  {row.quotient:>8}")
        return "\n".join(lines)


def _check_relators(alphabet, relators, ring) -> list[int]:
    degrees = []
    for k, rel in enumerate(relators, 1):
        if rel.alphabet != alphabet or rel.ring != ring:
            raise ValueError(f"relator {k} lives in a different algebra")
        if rel.is_zero:
            raise ValueError(f"relator {k} is zero")
        deg = rel.degree()  # raises on inhomogeneous input
        if deg < 2:
            raise ValueError(f"relator {k} has degree {deg}; relators must have degree >= 2")
        degrees.append(deg)
    return degrees


def _estimate_rows(counts, degrees, ring, n: int) -> int:
    total = 0
    for h in degrees:
        if h > n:
            continue
        budget = n - h
        if ring == F2:
            total += sum(counts[a] * counts[budget - a] for a in range(budget + 1))
        else:
            for k in range(budget + 1):
                total += sum(counts[a] * counts[budget - k - a] for a in range(budget - k + 1))
    return total


def quotient_dims(
    alphabet: WeightedAlphabet,
    relators,
    n_max: int,
    ring: str = F2,
    *,
    memory_cap_mib: int = 1024,
) -> RankProfile:
    """Graded dimensions of the quotient by the two-sided ideal (rho_1..rho_m)
    for degrees 0..n_max, with the rank bookkeeping per degree.

    Relators must be nonzero, homogeneous of degree >= 2, and all in the same
    truncated algebra.  Row storage is estimated per degree before anything
    is allocated; crossing memory_cap_mib raises MemoryGuardError.
    """
    relators = tuple(relators)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    degrees = _check_relators(alphabet, relators, ring)
    counts = word_counts(alphabet, n_max)
    cap_bytes = memory_cap_mib * 2**20
    for n in range(n_max + 1):
        ambient = counts[n] if ring == F2 else sum(counts[: n + 1])
        n_words = max(1, (ambient + 63) >> 6)
        estimate = _estimate_rows(counts, degrees, ring, n) * n_words * 8
        if estimate > cap_bytes:
            raise MemoryGuardError(
                f"degree {n} needs about {estimate >> 20} MiB of rows,"
                f" above the {memory_cap_mib} MiB cap"
            )
    profile = []
    for n in range(n_max + 1):
        if ring == F2:
            ambient_monos = [(0, w) for w in words_of_weight(alphabet, n)]
        else:
            ambient_monos = [
                (k, w) for k in range(n + 1) for w in words_of_weight(alphabet, n - k)
            ]
        index = {mono: col for col, mono in enumerate(ambient_monos)}
        rows = []
        for rel, h in zip(relators, degrees):
            if h > n:
                continue
            budget = n - h
            pi_range = range(budget + 1) if ring == F2PI else None
            for kp in pi_range if pi_range is not None else (0,):
                for a in range(budget - kp + 1):
                    for u in words_of_weight(alphabet, a):
                        for v in words_of_weight(alphabet, budget - kp - a):
                            rows.append(
                                [index[(kp + kr, u + w + v)] for kr, w in rel.terms]
                            )
        rank = gf2.rank(gf2.pack_rows(rows, len(ambient_monos)), copy=False)
        profile.append(DegreeRank(n, len(ambient_monos), rank, len(ambient_monos) - rank))
    return RankProfile(ring, tuple(profile))


def independent_in_degree(polys) -> int:
    """GF(2) rank of equally graded polynomials on their degree's monomial basis.

    Zero polynomials contribute zero rows; any two nonzero inputs must agree
    in degree (and algebra), otherwise a degree mismatch is raised.
    """
    polys = tuple(polys)
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        return 0
    first = nonzero[0]
    degs = set()
    for p in nonzero:
        if p.alphabet != first.alphabet or p.ring != first.ring:
            raise ValueError("polynomials live in different algebras")
        if not p.is_homogeneous:
            raise ValueError("independence check needs homogeneous polynomials")
        degs.add(p.degree())
    if len(degs) != 1:
        raise ValueError(f"degree mismatch: {sorted(degs)}")
    support = sorted(
        set().union(*(p.terms for p in nonzero)), key=lambda mono: (mono[0], mono[1])
    )
    index = {mono: col for col, mono in enumerate(support)}
    rows = [[index[mono] for mono in p.terms] for p in polys]
    return gf2.rank_of_rows(rows, len(support))


@dataclass(frozen=True)
class OracleComparison:
    ring: str
    n_max: int
    oracle_dims: tuple[int, ...]
    expected_dims: tuple[int, ...]
    match: bool
    mismatch_degree: int | None
    profile: RankProfile

    def to_json_dict(self) -> dict:
        return {
            "ring": self.ring,
            "n_max": self.n_max,
            "oracle_dims": list(self.oracle_dims),
            "expected_dims": list(self.expected_dims),
            "match": self.match,
            "mismatch_degree": self.mismatch_degree,
            "profile": self.profile.to_json_dict(),
        }


def strongly_free_oracle(
    relators,
    n_max: int,
    ring: str = F2,
    *,
    d: int | None = None,
    memory_cap_mib: int = 1024,
) -> OracleComparison:
    """Compare brute-force quotient dimensions of quadratic relators against
    the strongly free prediction (gamma variant over F2[pi]).

    Relators are degree-2 objects with .d/.squares/.comms; each must have a
    nonzero quadratic part.  Pass d explicitly for an empty relator list.
    """
    relators = tuple(relators)
    if n_max < 2:
        raise ValueError("the oracle needs n_max >= 2")
    if relators:
        inferred = {rel.d for rel in relators}
        if len(inferred) != 1:
            raise ValueError(f"relators disagree on the generator count: {sorted(inferred)}")
        if d is not None and d != inferred.pop():
            raise ValueError("explicit d contradicts the relators")
        d = relators[0].d
    elif d is None:
        raise ValueError("an empty relator list needs an explicit d")
    alphabet = unit_alphabet(d)
    polys = []
    for k, rel in enumerate(relators, 1):
        poly = relator_to_poly(rel, ring, n_max, alphabet)
        if poly.is_zero:
            raise ValueError(f"relator {k} has zero quadratic part; the oracle needs degree-2 forms")
        polys.append(poly)
    profile = quotient_dims(alphabet, polys, n_max, ring, memory_cap_mib=memory_cap_mib)
    sig = WeightSignature((1,) * d, (2,) * len(relators))
    series = strongly_free_series(sig, n_max) if ring == F2 else gamma_series(sig, n_max)
    oracle = profile.dims().values
    expected = series.coeffs
    mismatch = next((n for n in range(n_max + 1) if oracle[n] != expected[n]), None)
    return OracleComparison(ring, n_max, oracle, expected, mismatch is None, mismatch, profile)
