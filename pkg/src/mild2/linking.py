"""Linking data of odd prime sets, the quadratic presentations they induce,
generator elimination, and the greedy augmentation search.

For an ordered set of odd primes S = (p_1, ..., p_d):

  a_i   = 1  iff p_i = 3 (mod 4)
  l_ij  = 1  iff p_i is a nonsquare mod p_j   (i != j)

Relator i has square part a_i * xi^2 and one commutator [xi, xj] for every
j != i with l_ij = 1; the product relation says prod_i xi^(a_i) is a square
times commutators, and eliminating one generator that appears in it rewrites
the remaining relators by

  l'_ij = l_ij  XOR  (l_it AND c_j)        (j != i, t; squares unchanged)

where t is the eliminated index and c_j its substitution bits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arith import BoundExceededError, check_odd_prime, legendre, next_prime_in_class


class NoEliminableGeneratorError(ValueError):
    """The presentation has no usable product relation to eliminate with."""


def ordered_prime_set(primes) -> tuple[int, ...]:
    """Validate an ordered tuple of distinct odd primes."""
    out = tuple(int(p) for p in primes)
    if not out:
        raise ValueError("at least one prime is required")
    for p in out:
        check_odd_prime(p)
    if len(set(out)) != len(out):
        raise ValueError(f"primes must be distinct, got {out}")
    return out


@dataclass(frozen=True)
class LinkingData:
    """Square classes a and linking matrix ell of an ordered odd prime set."""

    primes: tuple[int, ...]
    a: tuple[int, ...]
    ell: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.primes)

    def to_json_dict(self) -> dict:
        return {"primes": list(self.primes), "a": list(self.a), "ell": [list(r) for r in self.ell]}

    def text(self) -> str:
        lines = [f"S = ({', '.join(str(p) for p in self.primes)})"]
        lines.append(f"a = ({', '.join(str(x) for x in self.a)})")
        lines.append("ell =")
        for i, row in enumerate(self.ell):
            cells = ["." if i == j else str(v) for j, v in enumerate(row)]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def linking_data(primes) -> LinkingData:
    """Compute square classes and the linking matrix (diagonal fixed to 0)."""
    ps = ordered_prime_set(primes)
    a = tuple(1 if p % 4 == 3 else 0 for p in ps)
    ell = tuple(
        tuple(
            0 if i == j else (1 if legendre(ps[i], ps[j]) == -1 else 0)
            for j in range(len(ps))
        )
        for i in range(len(ps))
    )
    return LinkingData(ps, a, ell)


@dataclass(frozen=True)
class QuadraticRelator:
    """Degree-2 initial form: squares vector plus a set of commutator pairs.

    comms holds pairs (i, j) with i < j, 1-based; owner tags the generator the
    relator belongs to in a presentation, when there is one.
    """

    d: int
    squares: tuple[int, ...]
    comms: frozenset
    owner: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "squares", tuple(int(b) for b in self.squares))
        object.__setattr__(
            self, "comms", frozenset((min(i, j), max(i, j)) for i, j in self.comms)
        )
        if len(self.squares) != self.d:
            raise ValueError(f"squares vector has length {len(self.squares)}, expected {self.d}")
        if any(b not in (0, 1) for b in self.squares):
            raise ValueError("squares entries must be 0 or 1")
        for i, j in self.comms:
            if not (1 <= i < j <= self.d):
                raise ValueError(f"commutator pair ({i}, {j}) out of range for d = {self.d}")
        if self.owner is not None and not 1 <= self.owner <= self.d:
            raise ValueError(f"owner {self.owner} out of range 1..{self.d}")

    @property
    def is_zero(self) -> bool:
        return not any(self.squares) and not self.comms

    def has_koch_shape(self, i: int) -> bool:
        """True when the square (if any) sits at i and every commutator involves i."""
        if any(self.squares[k] for k in range(self.d) if k != i - 1):
            return False
        return all(i in pair for pair in self.comms)

    def comm_partners(self, i: int) -> list[int]:
        """Indices j with [xi, xj] present, ascending."""
        return sorted(a + b - i for a, b in self.comms if i in (a, b))

    def text(self) -> str:
        """Canonical text: owner square first as xi^2, then [xi,xj] ascending j."""
        if self.is_zero:
            return "1"
        if self.owner is not None and self.has_koch_shape(self.owner):
            o = self.owner
            parts = [f"x{o}^2"] if self.squares[o - 1] else []
            parts.extend(f"[x{o},x{j}]" for j in self.comm_partners(o))
            return "".join(parts)
        parts = [f"x{i}^2" for i in range(1, self.d + 1) if self.squares[i - 1]]
        parts.extend(f"[x{i},x{j}]" for i, j in sorted(self.comms))
        return "".join(parts)

    def to_json_dict(self) -> dict:
        """JSON form.  The schema records one square bit, attached to the
        owner index, so a relator that has squares but no owner does not fit
        and is rejected rather than silently truncated."""
        if self.owner is None and any(self.squares):
            raise ValueError(
                "a relator with square terms but no owner index has no JSON form"
            )
        return {
            "owner": self.owner,
            "square": self.squares[self.owner - 1] if self.owner else 0,
            "comms": [list(pair) for pair in sorted(self.comms)],
        }


@dataclass(frozen=True)
class Presentation:
    """Relators over generators x1..xd, with an optional product relation.

    product_relation is the exponent vector of prod xi^(a_i); primes records
    the source primes and history the eliminations performed.
    """

    d: int
    relators: tuple[QuadraticRelator, ...]
    product_relation: tuple[int, ...] | None = None
    primes: tuple[int, ...] | None = None
    history: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        if self.product_relation is not None:
            object.__setattr__(
                self, "product_relation", tuple(int(b) for b in self.product_relation)
            )
            if len(self.product_relation) != self.d:
                raise ValueError("product relation length does not match generator count")
            if any(b not in (0, 1) for b in self.product_relation):
                raise ValueError("product relation entries must be 0 or 1")
        if self.primes is not None:
            object.__setattr__(self, "primes", tuple(self.primes))
            if len(self.primes) != self.d:
                raise ValueError("primes length does not match generator count")
        for rel in self.relators:
            if rel.d != self.d:
                raise ValueError(f"relator on {rel.d} generators in a presentation with d = {self.d}")
        owners = [r.owner for r in self.relators if r.owner is not None]
        if len(set(owners)) != len(owners):
            raise ValueError(f"owner tags must be distinct, got {owners}")

    @property
    def m(self) -> int:
        return len(self.relators)

    def _label(self, i: int) -> str:
        return f"r{i}" + "'" * len(self.history)

    def product_text(self) -> str:
        if self.product_relation is None or not any(self.product_relation):
            return "1"
        return "".join(f"x{i}" for i, b in enumerate(self.product_relation, 1) if b)

    def text(self) -> str:
        lines = [f"{self._label(i)} = {rel.text()}" for i, rel in enumerate(self.relators, 1)]
        if self.product_relation is not None:
            lines.append(f"r = {self.product_text()}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        a = [0] * self.d
        ell = [[0] * self.d for _ in range(self.d)]
        for rel in self.relators:
            if rel.owner is not None and rel.has_koch_shape(rel.owner):
                i = rel.owner
                a[i - 1] = rel.squares[i - 1]
                for j in rel.comm_partners(i):
                    ell[i - 1][j - 1] = 1
        return {
            "primes": list(self.primes) if self.primes is not None else None,
            "a": a,
            "ell": ell,
            "relators": [rel.to_json_dict() for rel in self.relators],
            "product_relation": list(self.product_relation)
            if self.product_relation is not None
            else None,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Presentation":
        """Rebuild from the JSON form; the relators array is authoritative
        (a and ell are derived data and ignored on input)."""
        relators_raw = data.get("relators")
        if not isinstance(relators_raw, list):
            raise ValueError("presentation JSON needs a 'relators' array")
        a = data.get("a")
        product = data.get("product_relation")
        primes = data.get("primes")
        if isinstance(a, list) and a:
            d = len(a)
        elif isinstance(product, list) and product:
            d = len(product)
        elif isinstance(primes, list) and primes:
            d = len(primes)
        else:
            d = 0
            for raw in relators_raw:
                for pair in raw.get("comms", []):
                    d = max(d, *pair)
                if raw.get("owner"):
                    d = max(d, raw["owner"])
        relators = []
        for raw in relators_raw:
            owner = raw.get("owner")
            squares = [0] * d
            if raw.get("square"):
                if not owner:
                    raise ValueError("a square bit needs an owner index to attach to")
                squares[owner - 1] = 1
            relators.append(
                QuadraticRelator(d, tuple(squares), frozenset(tuple(p) for p in raw.get("comms", [])), owner)
            )
        return cls(
            d,
            tuple(relators),
            tuple(product) if product is not None else None,
            tuple(primes) if primes is not None else None,
        )


def koch_presentation(primes) -> Presentation:
    """Presentation induced by the linking data of an ordered odd prime set."""
    data = linking_data(primes)
    d = data.d
    relators = []
    for i in range(1, d + 1):
        squares = tuple(data.a[i - 1] if k == i - 1 else 0 for k in range(d))
        comms = frozenset(
            (min(i, j), max(i, j)) for j in range(1, d + 1) if j != i and data.ell[i - 1][j - 1]
        )
        relators.append(QuadraticRelator(d, squares, comms, owner=i))
    return Presentation(d, tuple(relators), product_relation=data.a, primes=data.primes)


def _substitute(rel: QuadraticRelator, t: int, c: tuple[int, ...]) -> QuadraticRelator:
    """Rewrite one relator under xt -> prod_j xj^(c_j) (c has c_t = 0)."""
    squares = list(rel.squares)
    comms = set(rel.comms)
    support = [j for j, bit in enumerate(c, 1) if bit]
    if squares[t - 1]:
        # xt^2 expands through the square of the substituted product:
        # sum c_j xj^2 plus cross commutators [xj, xj'].
        squares[t - 1] = 0
        for j in support:
            squares[j - 1] ^= 1
        for j, jp in itertools.combinations(support, 2):
            comms ^= {(j, jp)}
    for pair in [p for p in comms if t in p]:
        comms.remove(pair)
        other = pair[0] + pair[1] - t
        for j in support:
            if j != other:
                comms ^= {(min(other, j), max(other, j))}
    return QuadraticRelator(rel.d, tuple(squares), frozenset(comms), rel.owner)


def _drop_index(rel: QuadraticRelator, t: int) -> QuadraticRelator:
    shift = lambda i: i - 1 if i > t else i
    squares = tuple(b for k, b in enumerate(rel.squares, 1) if k != t)
    comms = frozenset((shift(i), shift(j)) for i, j in rel.comms)
    owner = shift(rel.owner) if rel.owner is not None else None
    return QuadraticRelator(rel.d - 1, squares, comms, owner)


def eliminate_generator(pres: Presentation, t: int | None = None) -> Presentation:
    """Remove one generator that appears in the product relation.

    t defaults to the largest index with product exponent 1.  Relator t is
    discarded; every remaining relator is rewritten by the substitution the
    product relation defines, then indices above t shift down by one.  The
    result has no product relation.
    """
    prod = pres.product_relation
    if prod is None or not any(prod):
        raise NoEliminableGeneratorError("the presentation has no nonzero product relation")
    if t is None:
        t = max(i for i, b in enumerate(prod, 1) if b)
    if not 1 <= t <= pres.d:
        raise ValueError(f"generator index {t} out of range 1..{pres.d}")
    if not prod[t - 1]:
        raise NoEliminableGeneratorError(f"generator x{t} does not appear in the product relation")
    c = tuple(b if j != t else 0 for j, b in enumerate(prod, 1))
    relators = tuple(
        _drop_index(_substitute(rel, t, c), t) for rel in pres.relators if rel.owner != t
    )
    primes = None
    note = f"eliminated x{t}"
    if pres.primes is not None:
        primes = tuple(p for k, p in enumerate(pres.primes, 1) if k != t)
        note = f"eliminated x{t} (prime {pres.primes[t - 1]})"
    return Presentation(
        pres.d - 1, relators, None, primes, pres.history + (note,)
    )


# ---------------------------------------------------------------------------
# Seed normalization, augmentation checks and the greedy augmentation search.


def normalize_seed(seed) -> tuple[int, ...]:
    """Order a seed set: primes = 1 (mod 4) ascending, then = 3 (mod 4) ascending.

    If either class is missing, the smallest prime of that class outside the
    seed is adjoined, so the result always has both classes and length >= 2.
    """
    ps = sorted(set(int(p) for p in seed))
    if not ps:
        raise ValueError("the seed must contain at least one odd prime")
    for p in ps:
        check_odd_prime(p)
    class1 = [p for p in ps if p % 4 == 1]
    class3 = [p for p in ps if p % 4 == 3]
    if not class1:
        class1 = [next_prime_in_class(3, 1, 4, avoid=ps, bound=10**6)]
    if not class3:
        class3 = [next_prime_in_class(3, 3, 4, avoid=ps, bound=10**6)]
    return tuple(class1 + class3)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = ()


def validate_augmentation(s0, q_aux, q_last: int) -> ValidationReport:
    """Check the augmentation conditions for a normalized seed s0 = (q_1..q_m),
    auxiliary primes q_aux = (q'_1..q'_m) and final prime q_last, reporting
    every violation:

      each q'_i = 1 (mod 4), all primes distinct from each other and s0;
      (a) legendre(q'_i, q'_j) = +1 for all i != j;
      (b) q'_1 nonsquare mod q_m; q'_i nonsquare mod q_i and mod q_{i-1}
          for i >= 2;
      q_last = 3 (mod 4), nonsquare mod q'_1, square mod q'_i for i >= 2.
    """
    s0 = tuple(int(p) for p in s0)
    q_aux = tuple(int(q) for q in q_aux)
    q_last = int(q_last)
    m = len(s0)
    bad: list[str] = []
    if m < 2:
        raise ValueError("the seed must be normalized (length >= 2)")
    if len(q_aux) != m:
        raise ValueError(f"expected {m} auxiliary primes, got {len(q_aux)}")
    for q in q_aux + (q_last,):
        check_odd_prime(q)
    everything = s0 + q_aux + (q_last,)
    if len(set(everything)) != len(everything):
        bad.append(f"primes are not pairwise distinct: {everything}")
    for i, q in enumerate(q_aux, 1):
        if q % 4 != 1:
            bad.append(f"q'_{i} = {q} is not 1 (mod 4)")
    for i, j in itertools.permutations(range(m), 2):
        if legendre(q_aux[i], q_aux[j]) != 1:
            bad.append(f"legendre({q_aux[i]}, {q_aux[j]}) != +1 (condition (a), i = {i + 1}, j = {j + 1})")
    if legendre(q_aux[0], s0[m - 1]) != -1:
        bad.append(f"q'_1 = {q_aux[0]} is a square mod q_{m} = {s0[m - 1]} (condition (b))")
    for i in range(1, m):
        if legendre(q_aux[i], s0[i]) != -1:
            bad.append(f"q'_{i + 1} = {q_aux[i]} is a square mod q_{i + 1} = {s0[i]} (condition (b))")
        if legendre(q_aux[i], s0[i - 1]) != -1:
            bad.append(f"q'_{i + 1} = {q_aux[i]} is a square mod q_{i} = {s0[i - 1]} (condition (b))")
    if q_last % 4 != 3:
        bad.append(f"q_last = {q_last} is not 3 (mod 4)")
    if legendre(q_last, q_aux[0]) != -1:
        bad.append(f"q_last = {q_last} is a square mod q'_1 = {q_aux[0]}")
    for i in range(1, m):
        if legendre(q_last, q_aux[i]) != 1:
            bad.append(f"q_last = {q_last} is a nonsquare mod q'_{i + 1} = {q_aux[i]}")
    return ValidationReport(not bad, tuple(bad))


def interleave(s0, q_aux, q_last: int) -> tuple[int, ...]:
    """Augmented ordered set (q'_1, q_1, q'_2, q_2, ..., q'_m, q_m, q_last)."""
    out = []
    for q_new, q_old in zip(q_aux, s0):
        out.extend((q_new, q_old))
    out.append(q_last)
    return tuple(out)


@dataclass(frozen=True)
class AugmentationResult:
    seed: tuple[int, ...]
    q_aux: tuple[int, ...]
    q_last: int
    S: tuple[int, ...]
    attempts: int

    def to_json_dict(self) -> dict:
        return {
            "seed": list(self.seed),
            "q_aux": list(self.q_aux),
            "q_last": self.q_last,
            "S": list(self.S),
            "attempts": self.attempts,
        }


def _class1_candidates(s0, chosen: tuple[int, ...], pos: int, bound: int):
    """Auxiliary primes for slot pos (0-based), ascending, filtered by the
    augmentation conditions against the seed and the slots already fixed."""
    m = len(s0)
    avoid = set(s0) | set(chosen)
    q = 2
    while True:
        try:
            q = next_prime_in_class(q + 1, 1, 4, avoid=avoid, bound=bound)
        except BoundExceededError:
            return
        if pos == 0:
            if legendre(q, s0[m - 1]) == -1:
                yield q
        elif (
            all(legendre(q, prev) == 1 and legendre(prev, q) == 1 for prev in chosen)
            and legendre(q, s0[pos]) == -1
            and legendre(q, s0[pos - 1]) == -1
        ):
            yield q


def _last_candidates(s0, q_aux: tuple[int, ...], bound: int):
    avoid = set(s0) | set(q_aux)
    q = 2
    while True:
        try:
            q = next_prime_in_class(q + 1, 3, 4, avoid=avoid, bound=bound)
        except BoundExceededError:
            return
        if legendre(q, q_aux[0]) == -1 and all(legendre(q, qp) == 1 for qp in q_aux[1:]):
            yield q


def augment(seed, bound: int = 10**6) -> AugmentationResult:
    """Greedy deterministic search for a mild augmentation of a seed set.

    Candidate tuples (q'_1..q'_m, q_last) are scanned in lexicographic order
    with the last slot moving fastest; the first tuple whose interleaved
    prime set gets a mild verdict wins.  attempts counts full tuples tried.
    Raises BoundExceededError when the space up to the bound is exhausted.
    """
    from .mildness import check_mild  # runtime import: mildness depends on this module

    s0 = normalize_seed(seed)
    m = len(s0)
    attempts = 0

    def tuples(chosen: tuple[int, ...]):
        if len(chosen) == m:
            yield chosen
            return
        for q in _class1_candidates(s0, chosen, len(chosen), bound):
            yield from tuples(chosen + (q,))

    for q_aux in tuples(()):
        for q_last in _last_candidates(s0, q_aux, bound):
            attempts += 1
            s = interleave(s0, q_aux, q_last)
            if check_mild(koch_presentation(s)).verdict == "mild":
                report = validate_augmentation(s0, q_aux, q_last)
                if not report.ok:
                    raise AssertionError(
                        f"internal error: candidate {s} violates {report.violations}"
                    )
                return AugmentationResult(s0, q_aux, q_last, s, attempts)
    raise BoundExceededError(
        f"no mild augmentation of seed {s0} with auxiliary primes <= {bound}"
    )
