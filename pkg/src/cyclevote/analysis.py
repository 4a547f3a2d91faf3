"""Tallying and linear analysis of neutral rules.

Profiles are exact rational weight vectors over a ballot space (negative
weights model profile differentials).  Beyond tallying, this module exposes
the kernel and effective space of a rule, fixed catalogs of invariant
subspaces for the three 24-or-6 dimensional spaces of interest, expansion of
profiles over a catalog, reports of how a rule scales each catalog subspace,
and a deterministic recipe for "masking" profiles whose raw ballot counts
point away from the order they actually elect.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg as la
from .ballots import BallotSpace, favorite_order
from .cyclic_orders import CyclicOrder, reverse_order
from .scoring import ScoringMatrix, format_rational
from .symmetric_group import Partition, Permutation, inverse


class MaskingInfeasibleError(ValueError):
    """The rule's kernel offers no usable direction for the requested masking."""


@dataclass(frozen=True)
class Profile:
    """Rational weights over a ballot space; entries may be negative."""

    space: BallotSpace
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.space):
            raise ValueError(
                f"profile length {len(self.weights)} != space size {len(self.space)}"
            )

    def __getitem__(self, ballot) -> Fraction:
        return self.weights[self.space.index_of(ballot)]

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))


def profile(space: BallotSpace, weights: Iterable) -> Profile:
    return Profile(space, la.vec(weights))


def profile_from_ballots(space: BallotSpace, weighted: dict) -> Profile:
    """Profile from a {ballot: weight} mapping; omitted ballots weigh zero."""
    w = [Fraction(0)] * len(space)
    for ballot, value in weighted.items():
        w[space.index_of(ballot)] = Fraction(value)
    return Profile(space, tuple(w))


def act_on_profile(sigma: Permutation, p: Profile) -> Profile:
    """Relabelled profile: the new weight of x is the old weight of sigma^-1 x."""
    inv = inverse(sigma)
    space = p.space
    return Profile(
        space,
        tuple(p.weights[space.act_index(inv, i)] for i in range(len(space))),
    )


def parse_profile(text: str, space: BallotSpace) -> Profile:
    """Parse profile lines "<ballot><TAB><rational>"; '#' comments, omitted = 0."""
    weights = [Fraction(0)] * len(space)
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split("\t") if "\t" in line else line.split()
        if len(fields) != 2:
            raise ValueError(f"profile line {lineno}: expected 2 fields")
        ballot = space.parse(fields[0])
        try:
            weights[space.index_of(ballot)] += Fraction(fields[1])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"profile line {lineno}: bad rational {fields[1]!r}") from None
    return Profile(space, tuple(weights))


def format_profile(p: Profile) -> str:
    return "\n".join(
        f"{p.space.label(b)}\t{format_rational(w)}"
        for b, w in zip(p.space.ballots, p.weights)
    )


@dataclass(frozen=True)
class TallyResult:
    scores: tuple[Fraction, ...]
    winners: frozenset[CyclicOrder]


def tally(m: ScoringMatrix, p: Profile) -> TallyResult:
    """Scores = M p; winners are the full argmax set, ties never broken."""
    if p.space != m.ballot_space:
        raise ValueError(f"profile space {p.space!r} != rule ballot space {m.ballot_space!r}")
    scores = la.mat_vec(m.entries, p.weights)
    top = max(scores)
    winners = frozenset(
        m.outcome_space[i] for i, s in enumerate(scores) if s == top
    )
    return TallyResult(scores, winners)


def kernel_basis(m: ScoringMatrix) -> list[la.Vector]:
    """Exact basis of the profiles M sends to the all-zero score vector."""
    return la.nullspace(m.entries)


def effective_basis(m: ScoringMatrix) -> list[la.Vector]:
    """Basis of the orthogonal complement of the kernel (the row space of M)."""
    return la.row_space_basis(m.entries)


# -- invariant-subspace catalogs ---------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    label: str
    partition: Partition
    vectors: tuple[la.Vector, ...]


@dataclass(frozen=True)
class SubspaceCatalog:
    space_id: str
    n: int
    dim: int
    entries: tuple[CatalogEntry, ...]

    def entry(self, label: str) -> CatalogEntry:
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def all_vectors(self) -> list[la.Vector]:
        return [v for e in self.entries for v in e.vectors]


def _entry(label: str, parts: tuple[int, ...], rows: Sequence[Sequence[int]]) -> CatalogEntry:
    return CatalogEntry(label, Partition(parts), tuple(la.vec(r) for r in rows))


# 6-dimensional space of 4-item cyclic orders, reference enumeration.
# "nonadj" spans the plane of contrasts between the three choices of the item
# opposite A; its three listed spanning vectors sum to zero.  "rev" spans the
# contrasts between each order and its reversal.
_CO4_ENTRIES = (
    _entry("T", (4,), [[1] * 6]),
    _entry("nonadj", (2, 2), [
        [2, 2, -1, -1, -1, -1],
        [-1, -1, 2, 2, -1, -1],
        [-1, -1, -1, -1, 2, 2],
    ]),
    _entry("rev", (2, 1, 1), [
        [1, -1, 0, 0, 0, 0],
        [0, 0, 1, -1, 0, 0],
        [0, 0, 0, 0, 1, -1],
    ]),
)

# 24-dimensional regular ballot space (ROLO/TRAD enumeration).  The v-span is
# the double copy of the two-dimensional irreducible; each w/u triplet spans
# one copy of its three-dimensional irreducible and the triplets are mutually
# orthogonal.
_ROLO4_ENTRIES = (
    _entry("T", (4,), [[1] * 24]),
    _entry("v", (2, 2), [
        [2, 2, 2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
        [-1, -1, -1, -1, -1, -1, -1, -1, 2, 2, 2, 2, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1],
        [2, 2, -2, -2, 2, 2, -2, -2, 1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1],
        [1, 1, -1, -1, 1, 1, -1, -1, 2, 2, -2, -2, 2, 2, -2, -2, 1, 1, -1, -1, 1, 1, -1, -1],
    ]),
    _entry("w1", (2, 1, 1), [
        [1, 1, 1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, -1, -1, -1, -1],
    ]),
    _entry("w2", (2, 1, 1), [
        [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0],
        [1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 1, -1],
        [0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    ]),
    _entry("w3", (2, 1, 1), [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, -1, 1],
        [0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0],
        [-1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ]),
    _entry("sign", (1, 1, 1, 1), [
        [1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1],
    ]),
    _entry("u1", (3, 1), [
        [1, 1, -1, -1, -1, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 1, 1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, -1, -1, 1, 1],
    ]),
    _entry("u2", (3, 1), [
        [0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0],
        [1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, -1, 1],
        [0, 0, -1, 1, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    ]),
    _entry("u3", (3, 1), [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, -1, 1],
        [1, -1, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0],
    ]),
)

# 24-dimensional space of 5-item cyclic orders, reference enumeration
# (reversal pairs adjacent).  The twelve reversal pairs fall into six
# "step couples" {1,9}, {2,8}, {3,12}, {4,11}, {5,7}, {6,10} (1-based pair
# indices), each pair coupled with the pair of its every-second-seat reading.
# Each y is flat on a step couple against the rest; each z separates the two
# pairs of one couple.  The pair-difference vectors e(2k) - e(2k+1) span the
# 12-dimensional double copy of the six-dimensional irreducible.
_CO5_Y = (
    [5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1],
    [-1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1],
    [-1, -1, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5],
    [-1, -1, -1, -1, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5, -1, -1],
    [-1, -1, -1, -1, -1, -1, -1, -1, 5, 5, -1, -1, 5, 5, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
)
_CO5_Z = (
    [5, 5, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -5, -5, -1, -1, 1, 1, -1, -1],
    [1, 1, 5, 5, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, -5, -5, -1, -1, 1, 1, -1, -1, 1, 1],
    [1, 1, -1, -1, 5, 5, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, -5, -5],
    [-1, -1, 1, 1, 1, 1, -1, -1, 5, 5, 1, 1, -5, -5, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1, 1, 1, 5, 5, -1, -1, 1, 1, -1, -1, -5, -5, -1, -1, 1, 1],
)
_CO5_ENTRIES = (
    _entry("T", (5,), [[1] * 24]),
    _entry("sign", (1, 1, 1, 1, 1), [
        [1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1],
    ]),
    _entry("y", (2, 2, 1), _CO5_Y),
    _entry("z", (3, 2), _CO5_Z),
    _entry("pairdiff", (3, 1, 1), [
        [0] * (2 * k) + [1, -1] + [0] * (22 - 2 * k) for k in range(12)
    ]),
)


def subspace_catalog(space_id: str) -> SubspaceCatalog:
    """Fixed invariant-subspace tables: "co4", "rolo4", "trad4", or "co5".

    The TRAD enumeration acts index-by-index exactly like the ROLO reference
    enumeration, so the two share one table.
    """
    if space_id == "co4":
        return SubspaceCatalog("co4", 4, 6, _CO4_ENTRIES)
    if space_id in ("rolo4", "trad4"):
        return SubspaceCatalog(space_id, 4, 24, _ROLO4_ENTRIES)
    if space_id == "co5":
        return SubspaceCatalog("co5", 5, 24, _CO5_ENTRIES)
    raise ValueError(f"no subspace catalog for {space_id!r}")


def catalog_for_space(space: BallotSpace) -> SubspaceCatalog:
    space_id = f"{space.kind.replace('cyclic', 'co')}{space.n}"
    return subspace_catalog(space_id)


@dataclass(frozen=True)
class DecomposedComponent:
    label: str
    partition: Partition
    coefficients: tuple[Fraction, ...]
    component: la.Vector


def decompose_profile(p: Profile, catalog: SubspaceCatalog) -> list[DecomposedComponent]:
    """Expand p over the catalog vectors; the components sum back to p.

    Within an entry whose listed vectors are linearly dependent (the co4
    "nonadj" spanning set), later dependent vectors get coefficient zero, so
    the expansion is unique.
    """
    if len(p.weights) != catalog.dim:
        raise ValueError(f"profile dim {len(p.weights)} != catalog dim {catalog.dim}")
    columns = catalog.all_vectors()
    coeffs = la.solve_in_span(columns, p.weights)
    if coeffs is None:
        raise ValueError(f"catalog {catalog.space_id} does not span the profile")
    out = []
    pos = 0
    for entry in catalog.entries:
        k = len(entry.vectors)
        cs = tuple(coeffs[pos:pos + k])
        component = la.zeros(catalog.dim)
        for c, v in zip(cs, entry.vectors):
            if c:
                component = la.add(component, la.scale(c, v))
        out.append(DecomposedComponent(entry.label, entry.partition, cs, component))
        pos += k
    return out


# -- scaling reports ----------------------------------------------------------

@dataclass(frozen=True)
class EntryScaling:
    """How a rule treats one catalog subspace.

    kind "scalar": every basis vector maps to scalar * itself ("zero" when the
    scalar is 0).  kind "mapped": the images are recorded verbatim, along with
    their expansion over the outcome catalog when one exists.
    """

    label: str
    partition: Partition
    kind: str
    scalar: Fraction | None
    images: tuple[la.Vector, ...]
    image_coords: tuple[tuple[Fraction, ...], ...] | None


@dataclass(frozen=True)
class ScalingReport:
    rule_name: str
    entries: tuple[EntryScaling, ...]
    #: Exact eigenvalue of M M^T on each outcome-catalog subspace, or None
    #: when the subspace is not an eigenspace.
    quadratic: dict[str, Fraction | None]

    def scalar(self, label: str) -> Fraction:
        for e in self.entries:
            if e.label == label:
                if e.scalar is None:
                    raise ValueError(f"entry {label!r} does not act by a scalar")
                return e.scalar
        raise KeyError(label)


def scaling_report(
    m: ScoringMatrix,
    catalog: SubspaceCatalog,
    outcome_catalog: SubspaceCatalog | None = None,
    expand_images: bool = True,
) -> ScalingReport:
    """Apply the rule to every catalog basis vector and classify the action.

    With expand_images the image of every "mapped" basis vector is also
    expressed in outcome-catalog coordinates; skipping that keeps bulk
    parameter sweeps cheap.
    """
    if catalog.dim != len(m.ballot_space):
        raise ValueError(
            f"catalog dim {catalog.dim} != ballot space size {len(m.ballot_space)}"
        )
    same_space = m.outcome_space == m.ballot_space
    if outcome_catalog is None:
        outcome_catalog = catalog if same_space else catalog_for_space(m.outcome_space)
    outcome_columns = outcome_catalog.all_vectors()

    entries = []
    for entry in catalog.entries:
        images = tuple(la.mat_vec(m.entries, v) for v in entry.vectors)
        scalar = _common_scalar(entry.vectors, images) if same_space else None
        if scalar is not None:
            kind = "zero" if scalar == 0 else "scalar"
            entries.append(EntryScaling(entry.label, entry.partition, kind, scalar, images, None))
            continue
        if all(la.is_zero(img) for img in images):
            entries.append(
                EntryScaling(entry.label, entry.partition, "zero", Fraction(0), images, None)
            )
            continue
        coords = None
        if expand_images:
            coords = tuple(
                tuple(la.solve_in_span(outcome_columns, img) or ()) for img in images
            )
        entries.append(EntryScaling(entry.label, entry.partition, "mapped", None, images, coords))

    mmt = la.mat_mul(m.entries, la.transpose(m.entries))
    quadratic = {}
    for entry in outcome_catalog.entries:
        quadratic[entry.label] = _common_scalar(
            entry.vectors, tuple(la.mat_vec(mmt, v) for v in entry.vectors)
        )
    return ScalingReport(m.rule_name, tuple(entries), quadratic)


def _common_scalar(vectors, images) -> Fraction | None:
    """The single k with image == k * vector for every pair, if one exists."""
    k = None
    for v, img in zip(vectors, images):
        if la.is_zero(v):
            if not la.is_zero(img):
                return None
            continue
        pivot = next(i for i, x in enumerate(v) if x != 0)
        cand = img[pivot] / v[pivot]
        if la.scale(cand, v) != tuple(img):
            return None
        if k is None:
            k = cand
        elif k != cand:
            return None
    return Fraction(0) if k is None else k


def generic4_scalars_to_params(t: Fraction, u: Fraction, v: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Invert the three subspace scalars of the 4-item generic family.

    The family (a, b, c) scales the subspaces by t = a+b+4c, u = a+b-2c and
    v = a-b; solving gives a = t/6 + u/3 + v/2, b = t/6 + u/3 - v/2 and
    c = t/6 - u/6.
    """
    t, u, v = Fraction(t), Fraction(u), Fraction(v)
    a = t / 6 + u / 3 + v / 2
    b = t / 6 + u / 3 - v / 2
    c = t / 6 - u / 6
    return a, b, c


# -- masking profiles ---------------------------------------------------------

def masking_profile(
    m: ScoringMatrix,
    target: CyclicOrder,
    decoys: frozenset[CyclicOrder] | set[CyclicOrder],
    magnitude: Fraction = Fraction(1),
) -> Profile:
    """A nonnegative profile electing target while its raw weight points elsewhere.

    Recipe: start from the effective-space differential contrasting target
    with its reversal (scaled by magnitude), the profile the rule itself maps
    to a target-first score vector.  Then add the kernel direction that
    raises the decoys' raw ballot counts fastest: the orthogonal projection
    of the decoy-ballot indicator onto the kernel, the canonical maximizer.
    When that projection vanishes (kernel moves cannot change total decoy
    weight at all), subtract the kernel component of the target's own ballot
    indicator instead, draining raw support from the winner's ballots.  The
    kernel summand is doubled until ballots favouring other orders hold a
    strict weight majority; finally the smallest uniform shift makes every
    weight nonnegative.  Kernel and uniform summands never change the winner;
    the result is verified to elect exactly the target.
    """
    magnitude = Fraction(magnitude)
    if magnitude <= 0:
        raise ValueError("magnitude must be positive")
    if target in decoys:
        raise ValueError("target cannot be one of its own decoys")
    space = m.ballot_space
    n_out = len(m.outcome_space)

    y = [Fraction(0)] * n_out
    y[m.outcome_space.index_of(target)] = Fraction(1)
    y[m.outcome_space.index_of(reverse_order(target))] = Fraction(-1)
    base = la.scale(magnitude, la.mat_vec(la.transpose(m.entries), y))

    favorites = [favorite_order(b, space.n) for b in space.ballots]
    decoy_flag = la.vec(1 if fav in decoys else 0 for fav in favorites)
    target_flag = la.vec(1 if fav == target else 0 for fav in favorites)
    rows = la.row_space_basis(m.entries)
    boost = la.sub(decoy_flag, _project_onto_span(rows, decoy_flag))
    if la.is_zero(boost):
        drain = la.sub(target_flag, _project_onto_span(rows, target_flag))
        boost = la.scale(-1, drain)
    if la.is_zero(boost):
        raise MaskingInfeasibleError(
            "the kernel holds no usable direction for this target/decoy set"
        )

    ones = la.vec([1] * len(space))
    chosen = None
    for doublings in range(24):
        beta = magnitude * (2**doublings)
        candidate = la.add(base, la.scale(beta, boost))
        low = min(candidate)
        shifted = la.add(candidate, la.scale(-low, ones)) if low < 0 else candidate
        chosen = shifted
        masked_mass = sum(
            (w for w, fav in zip(shifted, favorites) if fav != target), Fraction(0)
        )
        if 2 * masked_mass > sum(shifted, Fraction(0)):
            break

    result = Profile(space, chosen)
    outcome = tally(m, result)
    if outcome.winners != frozenset({target}):
        raise MaskingInfeasibleError(
            f"recipe failed to elect {target} uniquely under {m.rule_name}"
        )
    return result


def _project_onto_span(basis: Sequence[la.Vector], v: la.Vector) -> la.Vector:
    """Orthogonal projection of v onto span(basis), by the exact normal equations."""
    if not basis:
        return la.zeros(len(v))
    gram = [[la.dot(a, b) for b in basis] for a in basis]
    rhs = [la.dot(a, v) for a in basis]
    aug = [la.vec(row) + (r,) for row, r in zip(gram, rhs)]
    reduced, pivots = la.rref(aug)
    coeffs = [Fraction(0)] * len(basis)
    for row, p in zip(reduced, pivots):
        if p == len(basis):
            raise AssertionError("normal equations inconsistent")  # Gram systems never are
        coeffs[p] = row[len(basis)]
    out = la.zeros(len(v))
    for c, b in zip(coeffs, basis):
        if c:
            out = la.add(out, la.scale(c, b))
    return out
