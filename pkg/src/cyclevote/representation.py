"""Decomposition of permutation actions of S_n into irreducible pieces.

An ActionSpace is any finite basis with an S_n action by index permutation.
Its character counts fixed basis elements per conjugacy class; inner products
with the irreducible characters give multiplicities, and group averaging with
irreducible character weights gives the exact rational projector onto each
isotypic component.  The n!-term averaging sum is exact and deliberately
capped at small degrees (GROUP_SUM_LIMIT) where it is fast.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from . import _linalg as la
from .symmetric_group import (
    ClassFunction,
    Partition,
    Permutation,
    all_permutations,
    class_function,
    class_representative,
    cycle_type,
    enumerate_classes,
    generators,
    irreducible_character,
    one_partition,
    partitions,
    specht_dimension,
)

#: Degrees above this make the n!-term projector sum unreasonable.
GROUP_SUM_LIMIT = 7


@dataclass(frozen=True)
class ActionSpace:
    """A basis 0..dim-1 with an S_n action: act(sigma, i) is an index."""

    dim: int
    n: int
    act: Callable[[Permutation, int], int] = field(compare=False)
    name: str = ""


def _check_degree(n: int, limit: int | None = None) -> None:
    cap = GROUP_SUM_LIMIT if limit is None else limit
    if n > cap:
        raise ValueError(f"degree {n} exceeds the group-sum cap {cap}")


def character_inner_product(c1: ClassFunction, c2: ClassFunction) -> Fraction:
    """(1/n!) sum over classes of class_size * c1 * c2 (no conjugation needed)."""
    if c1.n != c2.n:
        raise ValueError(f"degree mismatch: {c1.n} vs {c2.n}")
    total = sum(
        (Fraction(size) * c1(mu) * c2(mu) for mu, size in enumerate_classes(c1.n)),
        Fraction(0),
    )
    return total / factorial(c1.n)


def space_character(space: ActionSpace) -> ClassFunction:
    """Fixed-point counts of the action, one value per conjugacy class."""

    def fixed(mu: Partition) -> int:
        sigma = class_representative(mu)
        return sum(1 for i in range(space.dim) if space.act(sigma, i) == i)

    return class_function(space.n, fixed)


@dataclass(frozen=True)
class DecompositionReport:
    """Multiplicities of each irreducible in a permutation module."""

    n: int
    multiplicities: dict[Partition, int]
    dims: dict[Partition, int]

    @property
    def total_dim(self) -> int:
        return sum(m * self.dims[mu] for mu, m in self.multiplicities.items())

    def to_tsv(self) -> str:
        lines = []
        for mu in partitions(self.n):
            m, d = self.multiplicities[mu], self.dims[mu]
            lines.append(f"{mu}\t{m}\t{d}\t{m * d}")
        lines.append(f"# dimension sum: {self.total_dim} == {self.total_dim}")
        return "\n".join(lines)


def decompose_character(chi: ClassFunction) -> DecompositionReport:
    """Multiplicity of each irreducible via character inner products.

    Raises if any multiplicity comes out non-integral or negative, which
    signals that chi is not the character of a genuine module.
    """
    mults: dict[Partition, int] = {}
    dims: dict[Partition, int] = {}
    for lam in partitions(chi.n):
        lam_chi = class_function(chi.n, lambda mu: irreducible_character(lam, mu))
        m = character_inner_product(lam_chi, chi)
        if m.denominator != 1 or m < 0:
            raise ValueError(f"invalid character: multiplicity of {lam} is {m}")
        mults[lam] = int(m)
        dims[lam] = specht_dimension(lam)
    report = DecompositionReport(chi.n, mults, dims)
    if report.total_dim != chi(one_partition(chi.n)):
        raise ValueError(
            f"invalid character: multiplicities account for dimension "
            f"{report.total_dim}, character of the identity is {chi(one_partition(chi.n))}"
        )
    return report


def permutation_matrix(space: ActionSpace, sigma: Permutation) -> la.Matrix:
    """The 0/1 matrix of sigma acting on the basis (column j moves to act(sigma, j))."""
    one, zero = Fraction(1), Fraction(0)
    cols = [space.act(sigma, j) for j in range(space.dim)]
    return tuple(
        tuple(one if cols[j] == i else zero for j in range(space.dim))
        for i in range(space.dim)
    )


def isotypic_projector(space: ActionSpace, lam: Partition, limit: int | None = None) -> la.Matrix:
    """Exact projector onto the lam-isotypic component, by group averaging.

    P = (dim lam / n!) * sum over sigma of chi_lam(sigma) * rho(sigma); the sum
    runs over all n! permutations, accumulating one column move per element.
    """
    if lam.n != space.n:
        raise ValueError(f"degree mismatch: {lam.n} vs {space.n}")
    _check_degree(space.n, limit)
    acc = [[0] * space.dim for _ in range(space.dim)]
    char_of = {mu: irreducible_character(lam, mu) for mu in partitions(space.n)}
    for sigma in all_permutations(space.n):
        weight = char_of[cycle_type(sigma)]
        if not weight:
            continue
        for j in range(space.dim):
            acc[space.act(sigma, j)][j] += weight
    factor = Fraction(specht_dimension(lam), factorial(space.n))
    return tuple(tuple(factor * x for x in row) for row in acc)


def project_vector(v: Sequence, space: ActionSpace, lam: Partition,
                   limit: int | None = None) -> la.Vector:
    """Component of v in the lam-isotypic part; components over all lam sum to v."""
    if len(v) != space.dim:
        raise ValueError(f"length mismatch: {len(v)} vs {space.dim}")
    return la.mat_vec(isotypic_projector(space, lam, limit), v)


def projector_rank(space: ActionSpace, lam: Partition) -> int:
    return la.rank(isotypic_projector(space, lam))


def is_equivariant_matrix(space: ActionSpace, matrix: Sequence[Sequence]) -> bool:
    """True when the matrix commutes with the action of a generating set."""
    for g in generators(space.n):
        rho = permutation_matrix(space, g)
        if la.mat_mul(rho, matrix) != la.mat_mul(matrix, rho):
            return False
    return True
