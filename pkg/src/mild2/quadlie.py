"""Degree-truncated free associative algebras over F2 and F2[pi], the
square/bracket operators on them, and the basis-word enumerations.

A polynomial is a set of monomials, each with coefficient 1: coefficients
live in F2, so addition is symmetric difference.  A monomial is a pair
(pi_exp, word) where word is a tuple of 1-based letter indices; pi is a
central degree-1 variable, so every monomial normalizes to this form, and
the degree is pi_exp plus the total weight of the word.  Over the plain F2
ring pi_exp is always 0.

The square operator P acts on homogeneous elements: over F2 it is
P(u) = u*u (degree-1 u only); over F2[pi] it is P(u) = u*u + pi*u in degree
1 and P(u) = pi*u in higher degrees.  Both satisfy, for degree-1 u, v:

    P(u + v) = P(u) + P(v) + [u, v]
    [P(u), v] = [u, [u, v]]          (over F2)
    [P(u), v] = P([u, v]) + [u, [u, v]]   (over F2[pi], degree 1)

and these identities are what the randomized test suites pin down.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Union

F2 = "F2"
F2PI = "F2pi"
_RINGS = (F2, F2PI)


class TruncationError(ValueError):
    """Raised in strict mode when a product overflows the degree cap."""


@dataclass(frozen=True)
class WeightedAlphabet:
    """Letters x1..xd with positive weights, sorted nondecreasing.

    The first m letters have weight 1; the convention that weight-1 letters
    come first is what the basis enumerations below rely on.
    """

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise ValueError("an alphabet needs at least one letter")
        if any(w < 1 for w in self.weights):
            raise ValueError(f"letter weights must be >= 1, got {self.weights}")
        if any(a > b for a, b in zip(self.weights, self.weights[1:])):
            raise ValueError(f"letter weights must be nondecreasing, got {self.weights}")

    @property
    def d(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        """Number of weight-1 letters."""
        return sum(1 for w in self.weights if w == 1)

    def weight(self, letter: int) -> int:
        if not 1 <= letter <= self.d:
            raise ValueError(f"letter index {letter} out of range 1..{self.d}")
        return self.weights[letter - 1]

    def word_weight(self, word: tuple[int, ...]) -> int:
        return sum(self.weight(i) for i in word)


def unit_alphabet(d: int) -> WeightedAlphabet:
    """Alphabet of d letters, all of weight 1."""
    return WeightedAlphabet((1,) * d)


Monomial = tuple[int, tuple[int, ...]]


def _mono_str(mono: Monomial) -> str:
    k, word = mono
    parts = []
    if k == 1:
        parts.append("pi")
    elif k > 1:
        parts.append(f"pi^{k}")
    parts.extend(f"x{i}" for i in word)
    return ".".join(parts) if parts else "1"


@dataclass(frozen=True)
class NcPoly:
    """An element of the truncated free associative algebra.

    terms is a frozenset of (pi_exp, word) monomials, every one of degree at
    most n_max.  Multiplication silently drops monomials past the cap; pass
    strict=True to mul/pi_mul to turn the overflow into an error instead.
    """

    alphabet: WeightedAlphabet
    ring: str
    n_max: int
    terms: frozenset

    def __post_init__(self):
        if self.ring not in _RINGS:
            raise ValueError(f"ring must be one of {_RINGS}, got {self.ring!r}")
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        object.__setattr__(self, "terms", frozenset(self.terms))
        for k, word in self.terms:
            if k < 0 or (k > 0 and self.ring == F2):
                raise ValueError(f"bad pi exponent {k} for ring {self.ring}")
            if self._mono_degree((k, word)) > self.n_max:
                raise ValueError(f"monomial {_mono_str((k, word))} exceeds degree cap {self.n_max}")
            self.alphabet.word_weight(word)  # validates letter indices via weight lookup

    def _mono_degree(self, mono: Monomial) -> int:
        k, word = mono
        return k + self.alphabet.word_weight(word)

    @classmethod
    def zero(cls, alphabet: WeightedAlphabet, ring: str, n_max: int) -> "NcPoly":
        return cls(alphabet, ring, n_max, frozenset())

    @classmethod
    def generator(
        cls, alphabet: WeightedAlphabet, i: int, ring: str, n_max: int, *, strict: bool = False
    ) -> "NcPoly":
        """The letter xi as a polynomial; zero if its weight exceeds n_max."""
        if alphabet.weight(i) > n_max:
            if strict:
                raise TruncationError(f"letter x{i} has weight above the cap {n_max}")
            return cls.zero(alphabet, ring, n_max)
        return cls(alphabet, ring, n_max, frozenset({(0, (i,))}))

    @classmethod
    def from_monomials(cls, alphabet, ring, n_max, monomials) -> "NcPoly":
        """Build a polynomial from (pi_exp, word) pairs, XOR-folding repeats."""
        acc: set[Monomial] = set()
        for k, word in monomials:
            acc.symmetric_difference_update({(int(k), tuple(word))})
        return cls(alphabet, ring, n_max, frozenset(acc))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({self._mono_degree(m) for m in self.terms}))

    @property
    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"degree is defined for nonzero homogeneous elements, degrees = {degs}")
        return degs[0]

    def monomials(self) -> list[Monomial]:
        """Support sorted in the canonical order: degree, pi exponent, word."""
        return sorted(self.terms, key=lambda m: (self._mono_degree(m), m[0], m[1]))

    def __add__(self, other: "NcPoly") -> "NcPoly":
        _check_compatible(self, other)
        return NcPoly(self.alphabet, self.ring, self.n_max, self.terms ^ other.terms)

    def __mul__(self, other: "NcPoly") -> "NcPoly":
        return mul(self, other)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(_mono_str(m) for m in self.monomials())


def _check_compatible(u: NcPoly, v: NcPoly) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError("alphabet mismatch")
    if u.ring != v.ring:
        raise ValueError(f"ring mismatch: {u.ring} vs {v.ring}")
    if u.n_max != v.n_max:
        raise ValueError(f"truncation mismatch: {u.n_max} vs {v.n_max}")


def add(u: NcPoly, v: NcPoly) -> NcPoly:
    return u + v


def mul(u: NcPoly, v: NcPoly, *, strict: bool = False) -> NcPoly:
    """Product by concatenation, truncated past the degree cap."""
    _check_compatible(u, v)
    cap = u.n_max
    acc: set[Monomial] = set()
    for k1, w1 in u.terms:
        d1 = k1 + u.alphabet.word_weight(w1)
        for k2, w2 in v.terms:
            if d1 + k2 + v.alphabet.word_weight(w2) > cap:
                if strict:
                    raise TruncationError("product exceeds the degree cap")
                continue
            acc.symmetric_difference_update({(k1 + k2, w1 + w2)})
    return NcPoly(u.alphabet, u.ring, cap, frozenset(acc))


def pi_mul(u: NcPoly, *, strict: bool = False) -> NcPoly:
    """Multiply by the central variable pi (F2[pi] ring only)."""
    if u.ring != F2PI:
        raise ValueError("pi_mul is only defined over F2pi")
    acc: set[Monomial] = set()
    for k, word in u.terms:
        if k + 1 + u.alphabet.word_weight(word) > u.n_max:
            if strict:
                raise TruncationError("pi multiple exceeds the degree cap")
            continue
        acc.add((k + 1, word))
    return NcPoly(u.alphabet, u.ring, u.n_max, frozenset(acc))


def bracket(u: NcPoly, v: NcPoly, *, strict: bool = False) -> NcPoly:
    """[u, v] = uv + vu (char 2, so this is also the anticommutator)."""
    return mul(u, v, strict=strict) + mul(v, u, strict=strict)


def _check_p_operand(u: NcPoly) -> int:
    if u.is_zero:
        raise ValueError("P is not defined on zero")
    if not u.is_homogeneous:
        raise ValueError(f"P needs a homogeneous element, degrees = {u.degrees()}")
    return u.degree()


def p_quad(u: NcPoly) -> NcPoly:
    """Square operator over F2: P(u) = u*u for homogeneous u of degree 1."""
    if u.ring != F2:
        raise ValueError("p_quad is defined over F2; use p_mixed over F2pi")
    if _check_p_operand(u) != 1:
        raise ValueError(f"p_quad needs degree 1, got degree {u.degree()}")
    return mul(u, u)


def p_mixed(u: NcPoly) -> NcPoly:
    """Square operator over F2[pi]: u*u + pi*u in degree 1, pi*u above."""
    if u.ring != F2PI:
        raise ValueError("p_mixed is defined over F2pi; use p_quad over F2")
    if _check_p_operand(u) == 1:
        return mul(u, u) + pi_mul(u)
    return pi_mul(u)


# ---------------------------------------------------------------------------
# Bracket words: formal Lie/square expressions evaluated into the algebra.


@dataclass(frozen=True)
class Leaf:
    index: int


@dataclass(frozen=True)
class Square:
    arg: Leaf


@dataclass(frozen=True)
class Bracket:
    left: "BracketWord"
    right: "BracketWord"


BracketWord = Union[Leaf, Square, Bracket]


def bracket_weight(word: BracketWord, alphabet: WeightedAlphabet) -> int:
    if isinstance(word, Leaf):
        return alphabet.weight(word.index)
    if isinstance(word, Square):
        return 2 * alphabet.weight(word.arg.index)
    return bracket_weight(word.left, alphabet) + bracket_weight(word.right, alphabet)


def render_bracket(word: BracketWord) -> str:
    if isinstance(word, Leaf):
        return f"x{word.index}"
    if isinstance(word, Square):
        return f"P(x{word.arg.index})"
    return f"[{render_bracket(word.left)},{render_bracket(word.right)}]"


def evaluate(
    word: BracketWord, alphabet: WeightedAlphabet, ring: str, n_max: int, *, strict: bool = False
) -> NcPoly:
    """Evaluate a bracket word in the truncated algebra.

    Squares P(xi) require a weight-1 letter.  Anything whose weight exceeds
    n_max evaluates to zero (or raises, with strict=True).
    """
    if isinstance(word, Leaf):
        return NcPoly.generator(alphabet, word.index, ring, n_max, strict=strict)
    if isinstance(word, Square):
        if alphabet.weight(word.arg.index) != 1:
            raise ValueError(f"P(x{word.arg.index}) needs a weight-1 letter")
        if 2 > n_max:
            if strict:
                raise TruncationError("square exceeds the degree cap")
            return NcPoly.zero(alphabet, ring, n_max)
        arg = evaluate(word.arg, alphabet, ring, n_max, strict=strict)
        return p_quad(arg) if ring == F2 else p_mixed(arg)
    left = evaluate(word.left, alphabet, ring, n_max, strict=strict)
    right = evaluate(word.right, alphabet, ring, n_max, strict=strict)
    return bracket(left, right, strict=strict)


def relator_to_poly(relator, ring: str, n_max: int, alphabet: WeightedAlphabet | None = None) -> NcPoly:
    """Degree-2 polynomial sum(squares_i * xi*xi) + sum(comms (i,j) of xi*xj + xj*xi).

    The relator provides .d, .squares and .comms; pi never appears.  With
    n_max < 2 the image truncates to zero.
    """
    if alphabet is None:
        alphabet = unit_alphabet(relator.d)
    if alphabet.d != relator.d:
        raise ValueError(f"alphabet size {alphabet.d} does not match relator on {relator.d} letters")
    monos: list[Monomial] = []
    for i, bit in enumerate(relator.squares, start=1):
        if bit:
            monos.append((0, (i, i)))
    for i, j in relator.comms:
        monos.append((0, (i, j)))
        monos.append((0, (j, i)))
    if n_max < 2:
        monos = []
    return NcPoly.from_monomials(alphabet, ring, n_max, monos)


# ---------------------------------------------------------------------------
# Basis-word enumerations.


def _ad_chain(chain: tuple[int, ...], core: BracketWord) -> BracketWord:
    """ad(x_{chain[0]}) ... ad(x_{chain[-1]}) applied to core."""
    word = core
    for idx in reversed(chain):
        word = Bracket(Leaf(idx), word)
    return word


def enumerate_y(alphabet: WeightedAlphabet, k_max: int) -> dict[int, list[BracketWord]]:
    """Free-generator words of the positive part of the free mixed Lie algebra,
    grouped by degree.

    With m weight-1 letters and the remaining letters of weight >= 2 the
    families are, writing ad(u)(v) = [u, v]:

      (1) P(xi), i <= m, and [xi, xj], i < j <= m                (degree 2)
      (2) xj and [xi, xj], i <= m < j                            (degree e_j, e_j + 1)
      (3) ad(x_{i_1})..ad(x_{i_{k-3}}) ad(xj)^2 (x_{i_{k-2}}),
          i_1 > .. > i_{k-2}, j <= m outside the i's             (degree k)
      (4) ad(x_{i_1})..ad(x_{i_{k-1}})(x_{i_k}), i_1 > .. > i_{k-1},
          i_{k-1} < i_k <= m, i_k outside {i_1..i_{k-2}}         (degree k)
      (5) ad(x_{i_1})..ad(x_{i_{k-1}})(xj), i_1 > .. > i_{k-1} <= m < j
                                                                 (degree k - 1 + e_j)

    for k = 3..k_max.  The listing is exhaustive for degrees <= k_max and
    trimmed above that; per degree the count matches the coefficient of
    1 - (1+t)**m * (1 - sum_i m_i t**e_i).
    """
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    m, d = alphabet.m, alphabet.d
    grouped: dict[int, list[BracketWord]] = {}

    def put(word: BracketWord) -> None:
        w = bracket_weight(word, alphabet)
        if w <= k_max:
            grouped.setdefault(w, []).append(word)

    for i in range(1, m + 1):
        put(Square(Leaf(i)))
    for i, j in itertools.combinations(range(1, m + 1), 2):
        put(Bracket(Leaf(i), Leaf(j)))
    for j in range(m + 1, d + 1):
        put(Leaf(j))
    for i in range(1, m + 1):
        for j in range(m + 1, d + 1):
            put(Bracket(Leaf(i), Leaf(j)))
    for k in range(3, k_max + 1):
        for combo in itertools.combinations(range(1, m + 1), k - 2):
            run = tuple(reversed(combo))  # i_1 > ... > i_{k-2}
            for j in range(1, m + 1):
                if j not in combo:
                    core = Bracket(Leaf(j), Bracket(Leaf(j), Leaf(run[-1])))
                    put(_ad_chain(run[:-1], core))
        for combo in itertools.combinations(range(1, m + 1), k):
            low = combo[0]
            for i_k in combo[1:]:
                chain = tuple(sorted(set(combo) - {low, i_k}, reverse=True))
                put(_ad_chain(chain, Bracket(Leaf(low), Leaf(i_k))))
        for combo in itertools.combinations(range(1, m + 1), k - 1):
            run = tuple(reversed(combo))
            for j in range(m + 1, d + 1):
                put(_ad_chain(run, Leaf(j)))
    return {deg: grouped[deg] for deg in sorted(grouped)}


def y_count_poly(alphabet: WeightedAlphabet, n_max: int) -> list[int]:
    """Coefficients through t**n_max of 1 - (1+t)**m * (1 - sum_i m_i t**e_i),
    the generating polynomial counting enumerate_y per degree."""
    m = alphabet.m
    binom = [0] * (n_max + 1)
    for k in range(min(m, n_max) + 1):
        binom[k] = comb(m, k)
    inner = [0] * (n_max + 1)
    inner[0] = 1
    for w in alphabet.weights:
        if w <= n_max:
            inner[w] -= 1
    prod = [0] * (n_max + 1)
    for i, bi in enumerate(binom):
        if bi:
            for j, cj in enumerate(inner[: n_max + 1 - i]):
                prod[i + j] += bi * cj
    out = [-c for c in prod]
    out[0] += 1
    return out


def elimination_basis(
    alphabet: WeightedAlphabet, sigma: tuple[int, ...] | list[int] | set[int], n_max: int
) -> list[BracketWord]:
    """Free-generator words ad(s_1)..ad(s_n)(x), s_i in sigma, x outside sigma,
    of weight <= n_max, ordered by (n, chain indices, target index)."""
    sig = tuple(sorted(set(int(i) for i in sigma)))
    if any(not 1 <= i <= alphabet.d for i in sig):
        raise ValueError(f"sigma {sig} is not a subset of the alphabet 1..{alphabet.d}")
    rest = [i for i in range(1, alphabet.d + 1) if i not in sig]
    if not rest:
        raise ValueError("sigma must be a proper subset of the alphabet")
    out: list[BracketWord] = []
    if not sig:
        return [Leaf(i) for i in rest if alphabet.weight(i) <= n_max]
    min_sig = min(alphabet.weight(i) for i in sig)
    min_rest = min(alphabet.weight(i) for i in rest)
    for n in range((n_max - min_rest) // min_sig + 1):
        for chain in itertools.product(sig, repeat=n):
            base = sum(alphabet.weight(i) for i in chain)
            for target in rest:
                if base + alphabet.weight(target) <= n_max:
                    out.append(_ad_chain(chain, Leaf(target)))
    return out
