import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from kummerlab.kummer_ns import jacobian_kummer_ns
from kummerlab.lattice import (
    LatticeError,
    QuadraticSpace,
    RationalVector,
    SublatticeModel,
    vector_from_json,
    vector_to_json,
)
from kummerlab.nikulin import nikulin_lattice

MODEL = jacobian_kummer_ns()
SPACE = MODEL.space


def basis(label):
    return SPACE.basis_vector(label)


class TestInner:
    def test_polarization_square(self):
        assert SPACE.inner(basis("L"), basis("L")) == 4

    def test_node_square(self):
        assert SPACE.inner(basis("E0"), basis("E0")) == -2
        assert SPACE.inner(basis("E12"), basis("E12")) == -2

    def test_node_orthogonal_to_l(self):
        assert SPACE.inner(basis("L"), basis("E12")) == 0
        assert SPACE.inner(basis("L"), basis("E0")) == 0

    def test_dimension_mismatch(self):
        other = QuadraticSpace.diagonal(("a", "b"), [1, 1])
        with pytest.raises(LatticeError):
            SPACE.inner(basis("L"), other.basis_vector("a"))

    @given(
        st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=17, max_size=17),
        st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=17, max_size=17),
    )
    @settings(max_examples=50, deadline=None)
    def test_symmetry(self, a, b):
        v, w = SPACE.vector(a), SPACE.vector(b)
        assert SPACE.inner(v, w) == SPACE.inner(w, v)


class TestSpaceValidation:
    def test_asymmetric_gram_rejected(self):
        with pytest.raises(LatticeError):
            QuadraticSpace(("a", "b"), ((Fraction(1), Fraction(2)), (Fraction(3), Fraction(1))))

    def test_duplicate_labels_rejected(self):
        with pytest.raises(LatticeError):
            QuadraticSpace.diagonal(("a", "a"), [1, 1])


class TestHNF:
    def test_identity_generators_fixed(self):
        space = QuadraticSpace.diagonal(("a", "b", "c"), [1, 1, 1])
        gens = tuple(space.basis_vector(x) for x in ("a", "b", "c"))
        lat = SublatticeModel(space, gens)
        reduced = lat.hnf_basis()
        assert tuple(v.coords for v in reduced.generators) == tuple(g.coords for g in gens)

    def test_duplicate_rows_collapse(self):
        space = QuadraticSpace.diagonal(("a", "b"), [1, 1])
        v = space.vector([2, 3])
        lat = SublatticeModel(space, (v, v, v))
        assert lat.rank == 1
        assert lat.hnf_basis().rank == 1

    def test_full_generator_family_has_rank_17(self):
        # oracle: exact rank over Q of the denominator-cleared generator matrix
        rows = [[int(c * 2) for c in g.coords] for g in MODEL.ns.generators]
        assert Matrix(rows).rank() == 17
        assert MODEL.ns.rank == 17

    def test_idempotent_and_span_preserving(self):
        rng = random.Random(20260809)
        reduced = MODEL.ns.hnf_basis()
        double_reduced = reduced.hnf_basis()
        assert tuple(v.coords for v in reduced.generators) == tuple(
            v.coords for v in double_reduced.generators
        )
        for _ in range(100):
            coords = [
                Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2])) for _ in range(17)
            ]
            v = SPACE.vector(coords)
            assert MODEL.ns.contains(v) == reduced.contains(v)


class TestContains:
    def test_zero_vector(self):
        assert MODEL.ns.contains(SPACE.zero())

    def test_trope_half_integer_class(self):
        assert MODEL.ns.contains(MODEL.trope_class("C0"))

    def test_half_node_not_contained(self):
        half_node = Fraction(1, 2) * basis("E12")
        # oracle: a lattice member must pair integrally with every generator,
        # but against the C12 trope the pairing is 1/2
        assert SPACE.inner(half_node, MODEL.trope_class("C12")) == Fraction(1, 2)
        assert not MODEL.ns.contains(half_node)

    @given(
        st.integers(min_value=-4, max_value=4),
        st.integers(min_value=-4, max_value=4),
        st.integers(min_value=0, max_value=32),
        st.integers(min_value=0, max_value=32),
    )
    @settings(max_examples=60, deadline=None)
    def test_integer_combination_closure(self, a, b, gi, gj):
        gens = MODEL.ns.generators
        v = gens[gi % len(gens)]
        w = gens[gj % len(gens)]
        assert MODEL.ns.contains(a * v + b * w)

    def test_coordinates_roundtrip(self):
        zb = MODEL.ns.zbasis()
        v = 3 * zb[0] - 2 * zb[5] + zb[16]
        coeffs = MODEL.ns.coordinates_of(v)
        expected = [0] * 17
        expected[0], expected[5], expected[16] = 3, -2, 1
        assert list(coeffs) == expected


class TestDiscriminantGroup:
    def test_unimodular_is_trivial(self):
        space = QuadraticSpace.diagonal(("a", "b"), [1, 1])
        lat = SublatticeModel(space, (space.basis_vector("a"), space.basis_vector("b")))
        group = lat.discriminant_group()
        assert group.invariant_factors == ()
        assert group.order == 1

    def test_rank8_halfsum_lattice_order(self):
        # oracle: Smith normal form of the canonical 8x8 Gram matrix
        gram = Matrix([[int(x) for x in row] for row in nikulin_lattice().canonical_gram()])
        diag = smith_normal_form(gram, domain=ZZ)
        oracle = [abs(diag[i, i]) for i in range(8) if abs(diag[i, i]) > 1]
        group = nikulin_lattice().lattice.discriminant_group()
        assert list(group.invariant_factors) == oracle
        assert group.order == 64

    def test_divisor_lattice_invariant_factors(self):
        # oracle: Smith normal form of the 17x17 Z-basis Gram matrix
        gram = Matrix([[int(x) for x in row] for row in MODEL.ns.gram_zbasis()])
        diag = smith_normal_form(gram, domain=ZZ)
        oracle = [abs(diag[i, i]) for i in range(17) if abs(diag[i, i]) > 1]
        group = MODEL.ns.discriminant_group()
        assert list(group.invariant_factors) == oracle == [2, 2, 2, 2, 4]

    def test_factor_product_equals_determinant(self):
        for lat in (MODEL.ns, nikulin_lattice().lattice):
            gram = Matrix([[int(x) for x in row] for row in lat.gram_zbasis()])
            assert lat.discriminant_group().order == abs(gram.det())

    def test_generator_lifts(self):
        group = MODEL.ns.discriminant_group()
        for factor, lift in zip(group.invariant_factors, group.generator_lifts):
            assert MODEL.ns.in_dual(lift)
            assert not MODEL.ns.contains(lift)
            assert MODEL.ns.contains(factor * lift)

    def test_degenerate_lattice_rejected(self):
        space = QuadraticSpace.diagonal(("a", "b"), [1, 0])
        lat = SublatticeModel(space, (space.basis_vector("a"), space.basis_vector("b")))
        with pytest.raises(LatticeError):
            lat.discriminant_group()


class TestDual:
    def test_lattice_vectors_in_dual(self):
        for g in MODEL.ns.generators[:8]:
            assert MODEL.ns.in_dual(g)

    def test_quadruple_half_sum_in_dual(self):
        v = Fraction(1, 2) * (
            basis("E13") + basis("E14") + basis("E23") + basis("E24")
        )
        assert MODEL.ns.in_dual(v)
        assert not MODEL.ns.contains(v)

    def test_half_node_not_in_dual(self):
        assert not MODEL.ns.in_dual(Fraction(1, 2) * basis("E12"))


class TestIsometry:
    def test_identity(self):
        images = {lab: SPACE.basis_vector(lab) for lab in SPACE.labels}
        assert MODEL.ns.is_isometry(images)

    def test_covering_involution(self):
        assert MODEL.ns.is_isometry(MODEL.covering_involution_images())

    def test_swap_l_e0_rejected(self):
        images = {lab: SPACE.basis_vector(lab) for lab in SPACE.labels}
        images["L"], images["E0"] = images["E0"], images["L"]
        assert not MODEL.ns.is_isometry(images)

    def test_form_preserving_but_lattice_breaking(self):
        space = QuadraticSpace.diagonal(("a", "b"), [1, 1])
        lat = SublatticeModel(space, (space.basis_vector("a"), space.basis_vector("b")))
        rotation = {
            "a": space.vector([Fraction(3, 5), Fraction(4, 5)]),
            "b": space.vector([Fraction(-4, 5), Fraction(3, 5)]),
        }
        assert not lat.is_isometry(rotation)

    def test_missing_label_raises(self):
        with pytest.raises(LatticeError):
            MODEL.ns.is_isometry({"L": basis("L")})

    def test_accepted_map_preserves_all_pairings(self):
        images = MODEL.covering_involution_images()
        assert MODEL.ns.is_isometry(images)
        for a in SPACE.labels:
            for b in SPACE.labels:
                lhs = SPACE.inner(images[a], images[b])
                rhs = SPACE.inner(SPACE.basis_vector(a), SPACE.basis_vector(b))
                assert lhs == rhs


class TestSectionsAndIndex:
    def test_coordinate_section_simple(self):
        space = QuadraticSpace.diagonal(("a", "b", "c"), [1, 1, 1])
        gens = (
            space.vector([1, 1, 0]),
            space.vector([0, 2, 0]),
            space.vector([0, 0, 3]),
        )
        lat = SublatticeModel(space, gens)
        section = lat.coordinate_section(["a", "b"])
        assert section.rank == 2
        assert section.contains(space.vector([1, 1, 0]))
        assert not section.contains(space.vector([0, 0, 3]))

    def test_index_of_sublattice(self):
        space = QuadraticSpace.diagonal(("a", "b"), [1, 1])
        big = SublatticeModel(space, (space.basis_vector("a"), space.basis_vector("b")))
        small = SublatticeModel(space, (space.vector([2, 0]), space.vector([0, 3])))
        assert big.index_of_sublattice(small) == 6

    def test_index_requires_containment(self):
        space = QuadraticSpace.diagonal(("a", "b"), [1, 1])
        big = SublatticeModel(space, (space.vector([2, 0]), space.vector([0, 2])))
        other = SublatticeModel(space, (space.vector([1, 0]), space.vector([0, 1])))
        with pytest.raises(LatticeError):
            big.index_of_sublattice(other)


class TestJson:
    def test_trope_class_roundtrip(self):
        v = MODEL.trope_class("C23")
        payload = vector_to_json(v)
        assert payload["basis"][0] == "L"
        assert payload["coords"][0] == ["1", "2"]
        assert vector_from_json(SPACE, payload) == v

    def test_wrong_basis_rejected(self):
        payload = vector_to_json(MODEL.trope_class("C0"))
        payload["basis"] = payload["basis"][::-1]
        with pytest.raises(LatticeError):
            vector_from_json(SPACE, payload)

    @given(
        st.lists(
            st.fractions(max_denominator=10**6),
            min_size=17,
            max_size=17,
        )
    )
    @settings(max_examples=50, deadline=None)
    def test_roundtrip_exact(self, coords):
        v = SPACE.vector(coords)
        assert vector_from_json(SPACE, vector_to_json(v)) == v
