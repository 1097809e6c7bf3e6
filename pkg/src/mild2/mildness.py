"""Mildness certificates for quadratic relator systems.

Two sufficient criteria are implemented.  The rank criterion takes a
partition {1..d} = S u Sp: every relator must avoid xi^2 for i in S and
[xi, xj] for i, j both in S, and the m x (|S|*|Sp|) matrix of coefficients
on the basis {[xi, xj] : i in S, j in Sp} must have rank m.  The circuit
criterion is a closed-form special case for d even >= 4, m = d and relators
in Koch shape:

  (a) a_i = 0 for odd i,
  (b) l_ij = 0 for i, j both odd,
  (c) l_12 = l_23 = ... = l_{d-1,d} = l_{d1} = 1,
  (d) l_{1d} * l_{d,d-1} * ... * l_{32} * l_{21} = 0,

in which case the parity partition (S odd, Sp even) witnesses the rank
criterion.  check_mild chains elimination, the criteria and an optional
brute-force dimension oracle into one report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gf2
from .linking import Presentation, QuadraticRelator, eliminate_generator

MAX_ENUMERATION_D = 20


@dataclass(frozen=True)
class Partition:
    """A two-block partition of the generators 1..d."""

    S: tuple[int, ...]
    Sp: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(sorted(int(i) for i in self.S)))
        object.__setattr__(self, "Sp", tuple(sorted(int(i) for i in self.Sp)))
        if len(set(self.S)) != len(self.S) or len(set(self.Sp)) != len(self.Sp):
            raise ValueError(f"blocks contain repeats: {self.S} and {self.Sp}")
        if set(self.S) & set(self.Sp):
            raise ValueError(f"blocks overlap: {self.S} and {self.Sp}")

    def to_json_dict(self) -> dict:
        return {"S": list(self.S), "Sp": list(self.Sp)}


def parity_partition(d: int) -> Partition:
    return Partition(tuple(range(1, d + 1, 2)), tuple(range(2, d + 1, 2)))


def _check_same_d(relators) -> int:
    ds = {rel.d for rel in relators}
    if len(ds) != 1:
        raise ValueError(f"relators disagree on the generator count: {sorted(ds)}")
    return ds.pop()


def rank_criterion(relators, part: Partition) -> bool:
    """Rank test for one partition; True certifies strong freeness (mildness)."""
    relators = tuple(relators)
    if not relators:
        return True
    d = _check_same_d(relators)
    if set(part.S) | set(part.Sp) != set(range(1, d + 1)):
        raise ValueError(f"partition {part} does not cover 1..{d}")
    s_set = set(part.S)
    for rel in relators:
        if any(rel.squares[i - 1] for i in part.S):
            return False
        if any(i in s_set and j in s_set for i, j in rel.comms):
            return False
    basis = {
        (i, j): col for col, (i, j) in enumerate(itertools.product(part.S, part.Sp))
    }
    rows = [
        [basis[(i, j)] for i in part.S for j in part.Sp if (min(i, j), max(i, j)) in rel.comms]
        for rel in relators
    ]
    return gf2.rank_of_rows(rows, len(basis)) == len(relators)


def circuit_criterion(relators) -> bool | None:
    """Closed-form circuit test; None when the shape preconditions fail
    (d odd or < 4, m != d, or some relator not in Koch shape)."""
    relators = tuple(relators)
    if not relators:
        return None
    d = _check_same_d(relators)
    m = len(relators)
    if d < 4 or d % 2 or m != d:
        return None
    if any(not rel.has_koch_shape(i) for i, rel in enumerate(relators, 1)):
        return None
    a = [rel.squares[i - 1] for i, rel in enumerate(relators, 1)]
    ell = [[0] * (d + 1) for _ in range(d + 1)]
    for i, rel in enumerate(relators, 1):
        for j in rel.comm_partners(i):
            ell[i][j] = 1
    if any(a[i - 1] for i in range(1, d + 1, 2)):
        return False
    if any(ell[i][j] for i in range(1, d + 1, 2) for j in range(1, d + 1, 2) if i != j):
        return False
    if not all(ell[i][i + 1] for i in range(1, d)) or not ell[d][1]:
        return False
    reverse = ell[1][d]
    for i in range(d, 1, -1):
        reverse &= ell[i][i - 1]
    return reverse == 0


def find_mild_partition(relators) -> Partition | None:
    """First partition satisfying the rank criterion, or None.

    Order: the parity split (S odd, Sp even) first, then every subset Sp by
    ascending size and lexicographically within one size.
    """
    relators = tuple(relators)
    if not relators:
        return Partition((), ())
    d = _check_same_d(relators)
    if d > MAX_ENUMERATION_D:
        raise ValueError(f"exhaustive partition search is limited to d <= {MAX_ENUMERATION_D}")
    first = parity_partition(d)
    if rank_criterion(relators, first):
        return first
    everything = range(1, d + 1)
    for size in range(d + 1):
        for sp in itertools.combinations(everything, size):
            part = Partition(tuple(i for i in everything if i not in sp), sp)
            if rank_criterion(relators, part):
                return part
    return None


@dataclass(frozen=True)
class MildnessReport:
    """Outcome of the mildness pipeline.

    verdict: 'mild', 'not_shown' or 'inapplicable'; criterion: 'circuit',
    'rank' or 'none'; witness: the certifying partition when there is one.
    """

    verdict: str
    criterion: str
    witness: Partition | None
    oracle_depth: int | None
    notes: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "criterion": self.criterion,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "oracle_depth": self.oracle_depth,
            "notes": list(self.notes),
        }

    def text(self) -> str:
        lines = [f"verdict = {self.verdict}", f"criterion = {self.criterion}"]
        if self.witness is not None:
            lines.append(
                f"witness: S = {{{', '.join(map(str, self.witness.S))}}},"
                f" Sp = {{{', '.join(map(str, self.witness.Sp))}}}"
            )
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def check_mild(
    presentation: Presentation,
    *,
    oracle_depth: int | None = None,
    oracle_ring: str = "F2",
    memory_cap_mib: int = 1024,
) -> MildnessReport:
    """Full pipeline: eliminate through the product relation when one is
    present and nonzero, reject zero relators as inapplicable, then try the
    circuit criterion and the partition search.  With oracle_depth set, the
    brute-force dimension oracle runs on the final relators and its agreement
    is recorded in the notes.
    """
    notes: list[str] = []
    pres = presentation
    if pres.product_relation is not None and any(pres.product_relation):
        before = pres.d
        pres = eliminate_generator(pres)
        notes.append(f"{pres.history[-1]}; d: {before} -> {pres.d}")
    relators = pres.relators
    zero_at = [i for i, rel in enumerate(relators, 1) if rel.is_zero]
    witness: Partition | None = None
    if zero_at:
        verdict, criterion = "inapplicable", "none"
        notes.append(
            "relator(s) %s have zero quadratic part (initial form of higher degree);"
            " the degree-2 criteria do not apply" % ", ".join(str(i) for i in zero_at)
        )
    else:
        circuit = circuit_criterion(relators)
        if circuit is True:
            verdict, criterion = "mild", "circuit"
            witness = parity_partition(pres.d)
        else:
            witness = find_mild_partition(relators)
            if witness is not None:
                verdict, criterion = "mild", "rank"
            else:
                verdict, criterion = "not_shown", "none"
                notes.append("no partition satisfies the rank criterion; mildness undecided")
    if oracle_depth is not None:
        if verdict == "inapplicable" or not relators:
            notes.append("oracle skipped: no usable quadratic relators")
            oracle_depth = None
        else:
            from .oracle import strongly_free_oracle  # runtime import: oracle is heavier

            cmp = strongly_free_oracle(
                relators, oracle_depth, ring=oracle_ring, memory_cap_mib=memory_cap_mib
            )
            if cmp.match:
                notes.append(f"oracle({oracle_ring}): dimensions match through degree {oracle_depth}")
            else:
                notes.append(
                    f"oracle({oracle_ring}): dimension mismatch at degree {cmp.mismatch_degree}"
                )
    return MildnessReport(verdict, criterion, witness, oracle_depth, tuple(notes))
