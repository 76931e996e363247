"""Rank-17 divisor-class model of a generic jacobian Kummer surface.

The ambient space has basis ``L, E0, E12, ..., E56`` with the diagonal form
``diag(4, -2, ..., -2)``: the sixteen node classes are mutually orthogonal
(-2)-classes orthogonal to L.  The sixteen trope classes are half-integer
vectors; together with the basis they generate the full divisor-class
lattice, which is where every membership question (evenness of a node set,
dual-lattice checks) is decided.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache, cached_property

from .labels import (
    BASIS_LABELS,
    INDEX_PAIRS,
    NODE_LABELS,
    TROPE_LABELS,
    complement_triple,
    node_label,
)
from .lattice import (
    QuadraticSpace,
    RationalVector,
    SublatticeModel,
    _smith_normal_form,
)
from .nodecode import EMPTY, FULL, NodeSet

HALF = Fraction(1, 2)


def trope_support(label: str) -> tuple[str, ...]:
    """The six basis labels subtracted from L in the trope's defining relation.

    ``C0`` and the ``C1j`` are the covering-ramification tropes: each uses E0
    together with the five nodes whose index pair contains a fixed symbol.
    The remaining ``Cjk`` come from conics through six of the double points
    and use six nodes, E0 excluded.
    """
    if label == "C0":
        return ("E0",) + tuple(node_label(1, k) for k in range(2, 7))
    j, k = int(label[1]), int(label[2])
    if j == 1:
        return ("E0",) + tuple(node_label(m, k) for m in range(1, 7) if m != k)
    l, m, n = complement_triple(j, k)
    return (
        node_label(1, j),
        node_label(1, k),
        node_label(j, k),
        node_label(l, m),
        node_label(l, n),
        node_label(m, n),
    )


class JacobianKummerNS:
    """The divisor-class lattice together with its node/trope bookkeeping.

    Immutable after construction; the even-set scan is cached on first use.
    """

    def __init__(self) -> None:
        self.space = QuadraticSpace.diagonal(BASIS_LABELS, [4] + [-2] * 16)
        gens = [self.space.basis_vector(label) for label in BASIS_LABELS]
        gens += [self.trope_class(label) for label in TROPE_LABELS]
        self.ns = SublatticeModel(self.space, tuple(gens))

    # -- classes ---------------------------------------------------------

    def node_class(self, label: str) -> RationalVector:
        if label not in NODE_LABELS:
            raise ValueError(f"unknown node label {label!r}")
        return self.space.basis_vector(label)

    def trope_class(self, label: str) -> RationalVector:
        if label == "C11":  # alias used by the hatted-sum conventions
            label = "C0"
        if label not in TROPE_LABELS:
            raise ValueError(f"unknown trope label {label!r}")
        values: dict[str, Fraction] = {"L": HALF}
        for node in trope_support(label):
            values[node] = -HALF
        return self.space.vector(values)

    def node_set_sum(self, s: NodeSet) -> RationalVector:
        values = {label: 1 for label in s.labels()}
        return self.space.vector(values)

    def half_sum(self, s: NodeSet) -> RationalVector:
        return HALF * self.node_set_sum(s)

    # -- configuration -----------------------------------------------------

    def incidence_matrix(self) -> list[list[int]]:
        """16 x 16 table of trope-node intersection numbers, in canonical order."""
        table = []
        for t in TROPE_LABELS:
            tv = self.trope_class(t)
            row = []
            for n in NODE_LABELS:
                value = self.space.inner(tv, self.node_class(n))
                if value.denominator != 1:
                    raise ValueError(f"non-integral intersection ({t}, {n})")
                row.append(value.numerator)
            table.append(row)
        return table

    # -- the double-plane covering involution --------------------------------

    def covering_involution(self, v: RationalVector) -> RationalVector:
        """Linear extension of: L -> 3L - 4E0, E0 -> 2L - 3E0, nodes fixed."""
        self.space._check_member(v)
        a, b = v.coords[0], v.coords[1]
        coords = list(v.coords)
        coords[0] = 3 * a + 2 * b
        coords[1] = -4 * a - 3 * b
        return RationalVector(self.space, tuple(coords))

    def covering_involution_images(self) -> dict[str, RationalVector]:
        return {
            label: self.covering_involution(self.space.basis_vector(label))
            for label in BASIS_LABELS
        }

    # -- even sets -------------------------------------------------------

    @cached_property
    def even_sets(self) -> tuple[NodeSet, ...]:
        """All node subsets whose half-sum lies in the lattice (full 2^16 scan)."""
        den = self.ns.denominator
        if den != 2:
            raise ValueError(f"unexpected lattice denominator {den}")
        positions = [self.space.index(label) for label in NODE_LABELS]
        dim = self.space.dim
        tester = self.ns.contains_scaled
        found = []
        for mask in range(1 << 16):
            vec = [0] * dim
            m = mask
            while m:
                low = m & -m
                vec[positions[low.bit_length() - 1]] = 1
                m ^= low
            if tester(vec):
                found.append(NodeSet(mask))
        return tuple(sorted(found))

    def is_even_set(self, s: NodeSet) -> bool:
        return self.ns.contains(self.half_sum(s))

    def even_eights(self) -> tuple[NodeSet, ...]:
        return tuple(s for s in self.even_sets if s.weight == 8)

    def even_eights_containing(self, s: NodeSet) -> tuple[NodeSet, ...]:
        return tuple(e for e in self.even_eights() if s.is_subset_of(e))

    def even_eight_identity(self, i: int, j: int) -> bool:
        """The node sum of the (i, j) even eight equals
        2(L - E0) - 2 C_1i - 2 C_1j - 2 E_ij, exactly."""
        if not (1 <= i < j <= 6):
            raise ValueError(f"need 1 <= i < j <= 6, got ({i}, {j})")
        t_i = self.trope_class(f"C1{i}")  # C11 aliases C0
        t_j = self.trope_class(f"C1{j}")
        l_minus_e0 = self.space.basis_vector("L") - self.space.basis_vector("E0")
        e_ij = self.node_class(node_label(i, j))
        lhs = 2 * l_minus_e0 - 2 * t_i - 2 * t_j - 2 * e_ij
        rhs = self.node_set_sum(even_eight(i, j))
        return lhs == rhs

    # -- dual-lattice elements ----------------------------------------------

    def independent_discriminant_elements(self) -> bool:
        """Both distinguished half-sums of four nodes lie in the dual lattice,
        outside the lattice, with classes independent modulo the lattice."""
        v1 = self.half_sum(NodeSet.from_labels(["E13", "E14", "E23", "E24"]))
        v2 = self.half_sum(NodeSet.from_labels(["E12", "E23", "E15", "E35"]))
        return (
            self.ns.in_dual(v1)
            and self.ns.in_dual(v2)
            and not self.ns.contains(v1)
            and not self.ns.contains(v2)
            and not self.ns.contains(v1 + v2)
        )


@cache
def jacobian_kummer_ns() -> JacobianKummerNS:
    """Shared immutable model instance."""
    return JacobianKummerNS()


def even_eight(i: int, j: int) -> NodeSet:
    """The eight nodes E_ik, E_jk for k outside {i, j}; never contains E0."""
    if not (1 <= i < j <= 6):
        raise ValueError(f"need 1 <= i < j <= 6, got ({i}, {j})")
    labels = [node_label(i, k) for k in range(1, 7) if k not in (i, j)]
    labels += [node_label(j, k) for k in range(1, 7) if k not in (i, j)]
    return NodeSet.from_labels(labels)


def all_even_eight_pairs() -> tuple[tuple[int, int], ...]:
    return INDEX_PAIRS


def isogeny_polarization_type(ptype: tuple[int, ...], degree: int) -> tuple[int, ...]:
    """Pull a polarization type back along an isogeny of the given degree.

    The product of the type entries scales by the degree; the result is
    normalized to a divisor chain by elementary-divisor reduction of the
    scaled diagonal (the degree multiplies the last entry).
    """
    entries = tuple(int(d) for d in ptype)
    if not entries or any(d <= 0 for d in entries):
        raise ValueError("polarization type must be a nonempty tuple of positive integers")
    for a, b in zip(entries, entries[1:]):
        if b % a != 0:
            raise ValueError(f"type entries must form a divisor chain, got {entries}")
    if not isinstance(degree, int) or degree < 1:
        raise ValueError(f"isogeny degree must be a positive integer, got {degree!r}")
    scaled = list(entries)
    scaled[-1] *= degree
    g = len(scaled)
    diag_matrix = [[scaled[i] if i == j else 0 for j in range(g)] for i in range(g)]
    diag, _, _ = _smith_normal_form(diag_matrix)
    return tuple(diag)


__all__ = [
    "EMPTY",
    "FULL",
    "JacobianKummerNS",
    "all_even_eight_pairs",
    "even_eight",
    "isogeny_polarization_type",
    "jacobian_kummer_ns",
    "trope_support",
]
