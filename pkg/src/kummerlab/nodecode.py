"""Binary-code view of node subsets.

A ``NodeSet`` is a 16-bit mask over the canonical node order (``E0, E12, ...,
E56``).  The family of even node sets, viewed as vectors over F2, must form a
linear code whose weight-8 words behave like the affine hyperplanes of a
4-dimensional geometry: distinct hyperplanes are parallel (disjoint) or meet
in a plane of four points.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from .labels import NODE_INDEX, NODE_LABELS

GROUND_SIZE = 16
_FULL_MASK = (1 << GROUND_SIZE) - 1


class CodeError(ValueError):
    """Raised when a family of node sets violates a code-structure requirement."""


@dataclass(frozen=True, order=True)
class NodeSet:
    """An immutable subset of the sixteen node labels, stored as a bitmask."""

    bits: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= _FULL_MASK:
            raise CodeError(f"bitmask out of range: {self.bits}")

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "NodeSet":
        bits = 0
        for label in labels:
            try:
                bits |= 1 << NODE_INDEX[label]
            except KeyError:
                raise CodeError(f"unknown node label {label!r}") from None
        return cls(bits)

    def labels(self) -> tuple[str, ...]:
        return tuple(
            label for k, label in enumerate(NODE_LABELS) if self.bits >> k & 1
        )

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, label: str) -> bool:
        return bool(self.bits >> NODE_INDEX[label] & 1)

    def __xor__(self, other: "NodeSet") -> "NodeSet":
        return NodeSet(self.bits ^ other.bits)

    def __and__(self, other: "NodeSet") -> "NodeSet":
        return NodeSet(self.bits & other.bits)

    def __or__(self, other: "NodeSet") -> "NodeSet":
        return NodeSet(self.bits | other.bits)

    def complement(self) -> "NodeSet":
        return NodeSet(self.bits ^ _FULL_MASK)

    def is_subset_of(self, other: "NodeSet") -> bool:
        return self.bits & other.bits == self.bits


EMPTY = NodeSet(0)
FULL = NodeSet(_FULL_MASK)


@dataclass(frozen=True)
class BinaryCode:
    """A linear code over F2 on the sixteen node positions, stored extensionally."""

    codewords: frozenset[NodeSet]

    def __post_init__(self) -> None:
        words = frozenset(self.codewords)
        if EMPTY not in words:
            raise CodeError("a linear code must contain the empty word")
        size = len(words)
        if size & (size - 1):
            raise CodeError("codeword count must be a power of two")
        for a in words:
            for b in words:
                if a ^ b not in words:
                    raise CodeError("codewords are not closed under symmetric difference")
        object.__setattr__(self, "codewords", words)

    @property
    def dimension(self) -> int:
        return len(self.codewords).bit_length() - 1


def _span(masks: Iterable[int]) -> set[int]:
    """Linear span over F2 via a reduced bit basis."""
    basis: list[int] = []
    for mask in masks:
        for b in basis:
            mask = min(mask, mask ^ b)
        if mask:
            basis.append(mask)
            basis.sort(reverse=True)
    span = {0}
    for b in basis:
        span |= {w ^ b for w in span}
    return span


def code_from_even_sets(evens: Iterable[NodeSet]) -> BinaryCode:
    """Linear closure of the given family; the family itself must already be closed."""
    given = {s.bits for s in evens}
    closure = _span(given)
    extra = closure - given
    if extra:
        sample = NodeSet(min(extra)).labels()
        raise CodeError(
            f"even-set family not linear: closure adds {len(extra)} words, e.g. {list(sample)}"
        )
    return BinaryCode(frozenset(NodeSet(b) for b in closure))


def weight_enumerator(code: BinaryCode) -> dict[int, int]:
    """Exact histogram weight -> number of codewords of that weight."""
    hist: dict[int, int] = {}
    for word in code.codewords:
        hist[word.weight] = hist.get(word.weight, 0) + 1
    return dict(sorted(hist.items()))


def check_affine_hyperplane_family(eights: Iterable[NodeSet]) -> bool:
    """True iff the weight-8 sets pairwise meet in 0 or 4 points and are
    closed under complement, as the hyperplane family of AG(4, 2) must be."""
    members = list(eights)
    for s in members:
        if s.weight != 8:
            raise CodeError(f"expected weight-8 sets, got weight {s.weight}")
    mask_set = {s.bits for s in members}
    for s in members:
        if s.bits ^ _FULL_MASK not in mask_set:
            return False
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a == b:
                continue
            if (a.bits & b.bits).bit_count() not in (0, 4):
                return False
    return True
