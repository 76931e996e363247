from itertools import product

import pytest

from kummerlab.kummer_ns import even_eight, jacobian_kummer_ns
from kummerlab.nikulin import (
    halfsum_branch_root_count,
    nikulin_lattice,
    roots,
    saturation_gram_matches,
    saturation_index,
)
from kummerlab.nodecode import NodeSet

MODEL = jacobian_kummer_ns()
LATTICE = nikulin_lattice()


def brute_force_box_roots():
    """Independent oracle: scan the whole box lam in {-2..2}^8, eps in {0,1}.

    The norm of sum(lam_i c_i) + eps*d is -2*a - 2*eps*b - 4*eps with
    a = sum(lam^2), b = sum(lam).  Half-tuples are combined through their
    (a, b) statistics, which enumerates exactly the 2 * 5^8 box.
    """
    halves = [
        (lams, sum(x * x for x in lams), sum(lams))
        for lams in product(range(-2, 3), repeat=4)
    ]
    integral = []
    half_branch = []
    for left, a1, b1 in halves:
        for right, a2, b2 in halves:
            a, b = a1 + a2, b1 + b2
            if -2 * a == -2:
                integral.append(left + right)
            if -2 * a - 2 * b - 4 == -2:
                half_branch.append(left + right)
    return integral, half_branch


class TestRoots:
    def test_matches_box_oracle(self):
        integral, half_branch = brute_force_box_roots()
        assert half_branch == []
        oracle_coords = set()
        for lams in integral:
            coords = [0] * 8
            for k, lam in enumerate(lams):
                coords[k] = lam
            oracle_coords.add(tuple(coords))
        found = roots(LATTICE)
        assert {tuple(int(c) for c in v.coords) for v in found} == oracle_coords
        assert len(found) == 16

    def test_exactly_signed_basis(self):
        expected = set()
        for label in LATTICE.space.labels:
            v = LATTICE.space.basis_vector(label)
            expected.add(v.coords)
            expected.add((-v).coords)
        assert {v.coords for v in roots(LATTICE)} == expected

    def test_halfsum_branch_empty(self):
        assert halfsum_branch_root_count(LATTICE) == 0

    def test_halfsum_norm(self):
        assert LATTICE.halfsum.norm() == -4

    def test_closed_under_negation_no_duplicates(self):
        found = roots(LATTICE)
        coords = [v.coords for v in found]
        assert len(set(coords)) == len(coords)
        for v in found:
            assert (-v).coords in set(coords)

    def test_every_root_has_norm_minus_two(self):
        for v in roots(LATTICE):
            assert v.norm() == -2


class TestLatticeShape:
    def test_rank(self):
        assert LATTICE.lattice.rank == 8

    def test_even(self):
        assert LATTICE.lattice.is_even()

    def test_negative_definite(self):
        assert LATTICE.lattice.is_negative_definite()

    def test_discriminant_order(self):
        group = LATTICE.lattice.discriminant_group()
        assert group.order == 64
        assert group.invariant_factors == (2,) * 6

    def test_halfsum_in_lattice(self):
        assert LATTICE.lattice.contains(LATTICE.halfsum)


class TestSaturation:
    def test_index_two(self):
        assert saturation_index(even_eight(1, 2), MODEL) == 2

    def test_gram_matches_for_34(self):
        assert saturation_index(even_eight(3, 4), MODEL) == 2
        assert saturation_gram_matches(even_eight(3, 4), MODEL)

    def test_all_fifteen(self):
        for i in range(1, 7):
            for j in range(i + 1, 7):
                eight = even_eight(i, j)
                assert saturation_index(eight, MODEL) == 2
                assert saturation_gram_matches(eight, MODEL)

    def test_non_even_rejected(self):
        bad = NodeSet.from_labels(
            ["E0", "E12", "E13", "E14", "E15", "E16", "E23", "E24"]
        )
        with pytest.raises(ValueError, match="not an even set"):
            saturation_index(bad, MODEL)
