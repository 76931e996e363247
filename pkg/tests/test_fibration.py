from fractions import Fraction

import pytest

from kummerlab.fibration import (
    Fiber,
    FiberComponent,
    Fibration,
    FibrationError,
    build_fibration,
    build_jacobian_fibration,
    classify_fiber,
    euler_sum,
    even_eight_from_fibers,
    kodaira_euler,
    transform_double_cover,
)
from kummerlab.kummer_ns import even_eight, jacobian_kummer_ns
from kummerlab.lattice import QuadraticSpace
from kummerlab.nodecode import EMPTY

MODEL = jacobian_kummer_ns()
FIB = build_jacobian_fibration(MODEL)


class TestClassification:
    def test_star_fiber(self):
        comps = [FiberComponent(MODEL.trope_class("C0"), 2)] + [
            FiberComponent(MODEL.node_class(f"E1{k}"), 1) for k in (3, 4, 5, 6)
        ]
        assert classify_fiber(comps) == "I0*"

    def test_two_component_fiber(self):
        fiber_class = FIB.fiber_class
        node = MODEL.node_class("E45")
        first = fiber_class - node
        assert first.norm() == -2
        assert first.dot(node) == 2
        comps = [FiberComponent(first, 1), FiberComponent(node, 1)]
        assert classify_fiber(comps) == "I2"

    def test_cycle_fiber(self):
        space = QuadraticSpace(
            ("a", "b", "c"),
            tuple(
                tuple(Fraction(x) for x in row)
                for row in [[-2, 1, 1], [1, -2, 1], [1, 1, -2]]
            ),
        )
        comps = [FiberComponent(space.basis_vector(lab), 1) for lab in ("a", "b", "c")]
        assert classify_fiber(comps) == "I3"

    def test_single_component_rejected(self):
        with pytest.raises(FibrationError, match="unrecognized"):
            classify_fiber([FiberComponent(MODEL.node_class("E12"), 1)])

    def test_norm_enforced(self):
        with pytest.raises(FibrationError, match="norm -2"):
            FiberComponent(MODEL.space.basis_vector("L"), 1)

    def test_euler_table(self):
        assert kodaira_euler("smooth") == 0
        assert kodaira_euler("I0*") == 6
        assert kodaira_euler("I7") == 7
        with pytest.raises(FibrationError):
            kodaira_euler("IV*")


class TestJacobianFibration:
    def test_fiber_class_is_isotropic(self):
        assert FIB.fiber_class.norm() == 0

    def test_component_sums(self):
        for fiber in FIB.fibers:
            assert fiber.weighted_sum() == FIB.fiber_class

    def test_star_fiber_expansion(self):
        # E15 + E16 + 2 C0 + E13 + E14 collapses to L - E0 - E12
        total = (
            MODEL.node_class("E15")
            + MODEL.node_class("E16")
            + 2 * MODEL.trope_class("C0")
            + MODEL.node_class("E13")
            + MODEL.node_class("E14")
        )
        assert total == FIB.fiber_class

    def test_types(self):
        types = [f.kodaira_type for f in FIB.fibers]
        assert types == ["I0*", "I0*"] + ["I2"] * 6

    def test_sections(self):
        assert len(FIB.sections) == 4
        expected = {MODEL.trope_class(f"C1{k}").coords for k in (3, 4, 5, 6)}
        assert {s.coords for s in FIB.sections} == expected
        for s in FIB.sections:
            assert s.dot(FIB.fiber_class) == 1

    def test_euler_sum(self):
        assert euler_sum(FIB) == 2 * 6 + 6 * 2 == 24

    def test_empty_fiber_list(self):
        empty = Fibration(FIB.fiber_class, (), ())
        assert euler_sum(empty) == 0


class TestEvenEightIdentity:
    def test_identity_holds(self):
        assert even_eight_from_fibers(FIB, MODEL)

    def test_multiplicity_one_components(self):
        stars = [f for f in FIB.fibers if f.kodaira_type == "I0*"]
        mult_one = set()
        for fiber in stars:
            mult_one |= {c.coords for c in fiber.multiplicity_one_components()}
        expected = {MODEL.node_class(lab).coords for lab in even_eight(1, 2).labels()}
        assert mult_one == expected

    def test_wrong_trope_breaks_identity(self):
        lhs = MODEL.node_set_sum(even_eight(1, 2))
        f1 = FIB.fibers[0].weighted_sum()
        f2 = FIB.fibers[1].weighted_sum()
        good = f1 + f2 - 2 * (MODEL.trope_class("C0") + MODEL.trope_class("C12"))
        bad = f1 + f2 - 2 * (MODEL.trope_class("C0") + MODEL.trope_class("C13"))
        assert lhs == good
        assert lhs != bad


class TestDoubleCoverTransform:
    def test_twelve_two_component_fibers(self):
        out = transform_double_cover(FIB, even_eight(1, 2), MODEL)
        types = [f.kodaira_type for f in out.fibers]
        assert types.count("I2") == 12
        assert types.count("smooth") == 2
        assert euler_sum(out) == 24
        assert len(out.sections) == 4

    def test_star_fibers_become_smooth(self):
        out = transform_double_cover(FIB, even_eight(1, 2), MODEL)
        assert out.fibers[0].kodaira_type == "smooth"
        assert out.fibers[0].euler_number == 0
        assert out.fibers[1].kodaira_type == "smooth"

    def test_empty_branch_is_identity(self):
        assert transform_double_cover(FIB, EMPTY, MODEL) is FIB

    def test_partial_incidence_rejected(self):
        with pytest.raises(FibrationError, match="incidence not covered"):
            transform_double_cover(FIB, even_eight(1, 3), MODEL)

    def test_non_even_branch_rejected(self):
        from kummerlab.nodecode import NodeSet

        bad = NodeSet.from_labels(
            ["E0", "E12", "E13", "E14", "E15", "E16", "E23", "E24"]
        )
        with pytest.raises(FibrationError, match="even eight"):
            transform_double_cover(FIB, bad, MODEL)


class TestSweep:
    def test_all_fifteen_pairs(self):
        for i in range(1, 7):
            for j in range(i + 1, 7):
                fib = build_fibration(MODEL, i, j)
                assert fib.fiber_class.norm() == 0
                types = sorted(f.kodaira_type for f in fib.fibers)
                assert types == ["I0*", "I0*"] + ["I2"] * 6
                assert euler_sum(fib) == 24
                assert even_eight_from_fibers(fib, MODEL)
                assert all(s.dot(fib.fiber_class) == 1 for s in fib.sections)
                out = transform_double_cover(fib, even_eight(i, j), MODEL)
                assert sum(1 for f in out.fibers if f.kodaira_type == "I2") == 12
                assert euler_sum(out) == 24

    def test_bad_pair_rejected(self):
        with pytest.raises(FibrationError):
            build_fibration(MODEL, 3, 3)


class TestInvariants:
    def test_components_norms_and_pairings(self):
        for fiber in FIB.fibers:
            comps = fiber.components
            for c in comps:
                assert c.divisor.norm() == -2
            for a in range(len(comps)):
                for b in range(a + 1, len(comps)):
                    assert comps[a].divisor.dot(comps[b].divisor) >= 0

    def test_fiber_euler_consistency(self):
        with pytest.raises(FibrationError):
            Fiber((), "smooth", 5)
