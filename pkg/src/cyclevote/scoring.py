"""Score matrices for neutral points-based rules on cyclic-order outcomes.

A rule is a matrix M with rows indexed by outcomes, columns by ballots, and
entry[h][g] the points outcome h earns per vote for ballot g.  Neutrality
(invariance under joint relabelling) makes entries constant on the diagonal
orbits of ballot x outcome pairs, so a matrix is built by seeding one value
per orbit and propagating; unseeded orbits stay zero.

Named families cover the parametric rules analysed in this library: the
3-parameter family on 4-item cyclic ballots, the 6-parameter family on any
regular 24-ballot space (ROLO/TRAD), the 8-parameter family on 5-item cyclic
ballots, and the distance-weighted rules derived from transposition distance.
"""
from __future__ import annotations

import csv
import io
import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .ballots import Ballot, BallotSpace, build_ballot_space, outcome_space
from .cyclic_orders import (
    CyclicOrder,
    classify_pair,
    parse_order,
    reverse_order,
    transposition_distance,
)
from .symmetric_group import generators


class SeedConflictError(ValueError):
    """Two seeds land in one orbit with different values."""


@dataclass(frozen=True)
class ScoringMatrix:
    """Exact-rational score matrix: entries[h][g] = s(ballot g, outcome h)."""

    rule_name: str
    outcome_space: BallotSpace
    ballot_space: BallotSpace
    entries: tuple[tuple[Fraction, ...], ...]

    def score(self, ballot: Ballot, outcome: CyclicOrder) -> Fraction:
        return self.entries[self.outcome_space.index_of(outcome)][self.ballot_space.index_of(ballot)]

    def row(self, outcome: CyclicOrder) -> tuple[Fraction, ...]:
        return self.entries[self.outcome_space.index_of(outcome)]

    def column(self, ballot: Ballot) -> tuple[Fraction, ...]:
        g = self.ballot_space.index_of(ballot)
        return tuple(row[g] for row in self.entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + self.ballot_space.labels())
        for h, row in zip(self.outcome_space.ballots, self.entries):
            writer.writerow([self.outcome_space.label(h)] + [format_rational(x) for x in row])
        return buf.getvalue()

    def is_neutral(self) -> bool:
        """Check entry[sh][sg] == entry[h][g] for a generating set, all cells."""
        for sigma in generators(self.ballot_space.n):
            for h in range(len(self.outcome_space)):
                sh = self.outcome_space.act_index(sigma, h)
                for g in range(len(self.ballot_space)):
                    sg = self.ballot_space.act_index(sigma, g)
                    if self.entries[sh][sg] != self.entries[h][g]:
                        return False
        return True


def format_rational(x: Fraction) -> str:
    """p/q with the denominator omitted when 1.

    >>> format_rational(Fraction(-3, 6))
    '-1/2'
    """
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def _pair_orbits(ballot_space: BallotSpace, outcomes: BallotSpace) -> tuple[tuple[int, ...], int]:
    """Orbit id of every (outcome, ballot) cell under the diagonal action.

    Returns a flat row-major tuple of orbit ids and the orbit count.  Ids are
    assigned in scan order, so they are deterministic for a given space pair.
    """
    gens = generators(ballot_space.n)
    n_out, n_bal = len(outcomes), len(ballot_space)
    ids = [-1] * (n_out * n_bal)
    ballot_moves = [[ballot_space.act_index(g, i) for i in range(n_bal)] for g in gens]
    outcome_moves = [[outcomes.act_index(g, i) for i in range(n_out)] for g in gens]
    count = 0
    for start in range(n_out * n_bal):
        if ids[start] >= 0:
            continue
        ids[start] = count
        queue = deque([start])
        while queue:
            cell = queue.popleft()
            h, g = divmod(cell, n_bal)
            for om, bm in zip(outcome_moves, ballot_moves):
                nxt = om[h] * n_bal + bm[g]
                if ids[nxt] < 0:
                    ids[nxt] = count
                    queue.append(nxt)
        count += 1
    return tuple(ids), count


def orbit_count(ballot_space: BallotSpace, outcomes: BallotSpace | None = None) -> int:
    """Number of free parameters of a neutral rule on this ballot space."""
    outcomes = outcomes or outcome_space(ballot_space.n)
    return _pair_orbits(ballot_space, outcomes)[1]


def build_neutral_matrix(
    ballot_space: BallotSpace,
    seeds: Sequence[tuple[Ballot, CyclicOrder, Fraction]],
    outcomes: BallotSpace | None = None,
    rule_name: str = "seeded",
) -> ScoringMatrix:
    """Propagate seed values over their orbits; unseeded orbits stay zero.

    Two seeds in one orbit conflict unless they agree (agreement warns).
    """
    outcomes = outcomes or outcome_space(ballot_space.n)
    ids, count = _pair_orbits(ballot_space, outcomes)
    n_bal = len(ballot_space)
    values: list[Fraction | None] = [None] * count
    for ballot, order, value in seeds:
        value = Fraction(value)
        cell = outcomes.index_of(order) * n_bal + ballot_space.index_of(ballot)
        oid = ids[cell]
        if values[oid] is None:
            values[oid] = value
        elif values[oid] != value:
            raise SeedConflictError(
                f"seed ({ballot_space.label(ballot)}, {outcomes.label(order)}) = "
                f"{value} conflicts with {values[oid]} in the same orbit"
            )
        else:
            warnings.warn(
                f"duplicate seed for one orbit: ({ballot_space.label(ballot)}, "
                f"{outcomes.label(order)})",
                stacklevel=2,
            )
    filled = [Fraction(0) if v is None else v for v in values]
    entries = tuple(
        tuple(filled[ids[h * n_bal + g]] for g in range(n_bal))
        for h in range(len(outcomes))
    )
    return ScoringMatrix(rule_name, outcomes, ballot_space, entries)


@dataclass(frozen=True)
class RuleParams:
    """A named rule family plus its rational parameters."""

    family: str
    params: tuple[Fraction, ...] = ()


FAMILY_ARITY = {
    "generic4": 3,
    "rolo_generic": 6,
    "rolo_x1": 1,
    "rolo21": 0,
    "trad21": 0,
    "generic5": 8,
    "distance5": 5,
    "adjusted_distance5": 0,
}

#: Outcomes of the reference enumeration that anchor the six ROLO parameters:
#: the base ballot A|D,C scores (a, b, c, d, e, f) down the outcome column.
_ROLO_ANCHOR_OUTCOMES = ("ACBD", "ADBC", "ABCD", "ADCB", "ABDC", "ACDB")

#: Ballots of the 5-item reference enumeration that anchor the parameters
#: a..h of the generic rule, all scored against the outcome (ABCDE).
_CO5_ANCHOR_BALLOTS = (
    "ABCDE", "AEDCB", "ABCED", "ADECB", "ABDEC", "ACEDB", "ACEBD", "ADBEC",
)


def named_rule(rp: RuleParams) -> ScoringMatrix:
    """Instantiate a named rule family (reference orderings throughout)."""
    arity = FAMILY_ARITY.get(rp.family)
    if arity is None:
        raise ValueError(f"unknown rule family: {rp.family!r}")
    if len(rp.params) != arity:
        raise ValueError(f"{rp.family} takes {arity} parameters, got {len(rp.params)}")
    params = tuple(Fraction(p) for p in rp.params)
    name = rp.family if not params else f"{rp.family}({','.join(map(str, params))})"

    if rp.family == "generic4":
        return _generic4(params, name)
    if rp.family == "rolo_generic":
        return _regular24("rolo", params, name)
    if rp.family == "rolo_x1":
        x = params[0]
        return _regular24("rolo", (x, 0, 1, 0, 0, 1), name)
    if rp.family == "rolo21":
        return _regular24("rolo", (2, 0, 1, 0, 0, 1), "rolo21")
    if rp.family == "trad21":
        return _regular24("trad", (2, 1, 1, 0, 0, 0), "trad21")
    if rp.family == "generic5":
        space = build_ballot_space("cyclic", 5, "paper")
        base = parse_order("ABCDE")
        seeds = [
            (space.parse(text), base, value)
            for text, value in zip(_CO5_ANCHOR_BALLOTS, params)
        ]
        return build_neutral_matrix(space, seeds, space, name)
    if rp.family == "distance5":
        return _distance5(params, name)
    if rp.family == "adjusted_distance5":
        return _adjusted_distance5()
    raise AssertionError(rp.family)


def rule(family: str, *params) -> ScoringMatrix:
    """Shorthand: rule("generic4", 2, 1, 0)."""
    return named_rule(RuleParams(family, tuple(Fraction(p) for p in params)))


def _generic4(params: tuple[Fraction, ...], name: str) -> ScoringMatrix:
    a, b, c = params
    space = build_ballot_space("cyclic", 4, "paper")
    entries = tuple(
        tuple(a if g == h else b if g == reverse_order(h) else c for g in space)
        for h in space
    )
    return ScoringMatrix(name, space, space, entries)


def _regular24(kind: str, params: tuple[Fraction, ...], name: str) -> ScoringMatrix:
    ordering = "paper" if kind == "rolo" else "canonical"
    space = build_ballot_space(kind, 4, ordering)
    base = space[0]
    seeds = [
        (base, parse_order(text), value)
        for text, value in zip(_ROLO_ANCHOR_OUTCOMES, params)
    ]
    return build_neutral_matrix(space, seeds, None, name)


def _distance5(weights: tuple[Fraction, ...], name: str) -> ScoringMatrix:
    space = build_ballot_space("cyclic", 5, "paper")
    entries = tuple(
        tuple(weights[transposition_distance(g, h)] for g in space) for h in space
    )
    return ScoringMatrix(name, space, space, entries)


def _adjusted_distance5() -> ScoringMatrix:
    """The sum-zero distance rule with both step-relation orbits zeroed out."""
    base = _distance5(tuple(Fraction(v) for v in (2, 1, 0, -1, -2)), "adjusted_distance5")
    space = base.ballot_space
    entries = tuple(
        tuple(
            Fraction(0) if classify_pair(h, g).tag in ("Step", "StepReversal") else base.entries[hi][gi]
            for gi, g in enumerate(space)
        )
        for hi, h in enumerate(space)
    )
    return ScoringMatrix("adjusted_distance5", space, space, entries)


def parse_params(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated rational parameter list like "2,1,0" or "1/2,-1"."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(Fraction(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad parameter list: {text!r}") from None


def parse_seed_file(text: str, ballot_space: BallotSpace) -> list[tuple[Ballot, CyclicOrder, Fraction]]:
    """Parse seed lines "<ballot> <order> <rational>"; '#' starts a comment."""
    seeds = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ValueError(f"seed line {lineno}: expected 3 fields, got {len(fields)}")
        ballot = ballot_space.parse(fields[0])
        order = parse_order(fields[1])
        try:
            value = Fraction(fields[2])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"seed line {lineno}: bad rational {fields[2]!r}") from None
        seeds.append((ballot, order, value))
    return seeds
