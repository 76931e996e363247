"""Registry of verification checks.

Every finite claim the package certifies appears here exactly once, with a
stable identifier, a one-line description of what is computed, and the
mathematical claim being verified.  Checks marked ``flagged`` record known
ambiguities in the source material; they never fail a run.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional

from . import covers, fibration as fib_mod, nikulin as nik_mod
from .kummer_ns import (
    JacobianKummerNS,
    all_even_eight_pairs,
    even_eight,
    isogeny_polarization_type,
    jacobian_kummer_ns,
)
from .labels import NODE_LABELS, TROPE_LABELS
from .nodecode import (
    NodeSet,
    check_affine_hyperplane_family,
    code_from_even_sets,
    weight_enumerator,
)

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"

# frozen from the Smith-normal-form oracle over the 17x17 Z-basis Gram matrix
NS_INVARIANT_FACTORS = (2, 2, 2, 2, 4)
NIKULIN_INVARIANT_FACTORS = (2, 2, 2, 2, 2, 2)


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    detail: str
    data: Optional[object] = None


@dataclass(frozen=True)
class CheckDef:
    id: str
    description: str
    claim: str
    run: Callable[["CheckContext"], tuple[bool, str, Optional[object]]]
    flagged: bool = False


class CheckContext:
    """Shared lazily-built objects so expensive scans run once per process."""

    @cached_property
    def model(self) -> JacobianKummerNS:
        return jacobian_kummer_ns()

    @cached_property
    def eights(self) -> tuple[NodeSet, ...]:
        return self.model.even_eights()

    @cached_property
    def fibration(self):
        return fib_mod.build_jacobian_fibration(self.model)

    @cached_property
    def transformed(self):
        return fib_mod.transform_double_cover(
            self.fibration, even_eight(1, 2), self.model
        )


def _labels(sets) -> list[list[str]]:
    return [list(s.labels()) for s in sets]


# ---------------------------------------------------------------------------
# check bodies
# ---------------------------------------------------------------------------


def _count30(ctx: CheckContext):
    count = len(ctx.eights)
    return count == 30, f"{count} even eights among the sixteen nodes", {"count": count}


def _census(ctx: CheckContext):
    hist: dict[int, int] = {}
    for s in ctx.model.even_sets:
        hist[s.weight] = hist.get(s.weight, 0) + 1
    ok = hist == {0: 1, 8: 30, 16: 1}
    return ok, f"even-set weights over all 65536 subsets: {hist}", {
        "weights": {str(k): v for k, v in sorted(hist.items())}
    }


def _delta15(ctx: CheckContext):
    no_e0 = [s for s in ctx.eights if "E0" not in s]
    deltas = {even_eight(i, j) for i, j in all_even_eight_pairs()}
    ok = len(no_e0) == 15 and set(no_e0) == deltas
    return ok, f"{len(no_e0)} even eights avoid E0 and match the index-pair family", {
        "sets": _labels(sorted(no_e0))
    }


def _code_dim(ctx: CheckContext):
    code = code_from_even_sets(ctx.model.even_sets)
    ok = code.dimension == 5 and len(code.codewords) == 32
    return ok, f"even sets form a closed linear code of dimension {code.dimension}", {
        "dimension": code.dimension,
        "codewords": len(code.codewords),
    }


def _code_weights(ctx: CheckContext):
    code = code_from_even_sets(ctx.model.even_sets)
    hist = weight_enumerator(code)
    ok = hist == {0: 1, 8: 30, 16: 1}
    return ok, f"weight enumerator {hist}", {
        "weights": {str(k): v for k, v in hist.items()}
    }


def _code_affine(ctx: CheckContext):
    ok = check_affine_hyperplane_family(ctx.eights)
    return ok, "weight-8 words pairwise meet in 0 or 4 nodes, complements included", None


def _sixteen_six(ctx: CheckContext):
    table = ctx.model.incidence_matrix()
    zero_one = all(x in (0, 1) for row in table for x in row)
    rows = all(sum(row) == 6 for row in table)
    cols = all(sum(table[r][c] for r in range(16)) == 6 for c in range(16))
    ok = zero_one and rows and cols
    return ok, "each trope meets six nodes and each node meets six tropes", {
        "tropes": list(TROPE_LABELS),
        "nodes": list(NODE_LABELS),
        "matrix": table,
    }


def _tropes_contained(ctx: CheckContext):
    missing = [
        t for t in TROPE_LABELS if not ctx.model.ns.contains(ctx.model.trope_class(t))
    ]
    return not missing, "all sixteen half-integer trope classes lie in the lattice", {
        "missing": missing
    }


def _trope_pairings(ctx: CheckContext):
    m = ctx.model
    tropes = [m.trope_class(t) for t in TROPE_LABELS]
    big = m.space.basis_vector("L")
    norms = all(t.norm() == -2 for t in tropes)
    degrees = all(m.space.inner(big, t) == 2 for t in tropes)
    orthogonal = all(
        tropes[a].dot(tropes[b]) == 0
        for a in range(16)
        for b in range(a + 1, 16)
    )
    ok = norms and degrees and orthogonal
    return ok, "trope norms -2, degree 2 against L, mutually orthogonal", {
        "norms_ok": norms,
        "degrees_ok": degrees,
        "orthogonal": orthogonal,
    }


def _rank17(ctx: CheckContext):
    rank = ctx.model.ns.rank
    gens = len(ctx.model.ns.generators)
    return rank == 17, f"{gens} generators reduce to a rank-{rank} basis", {
        "generators": gens,
        "rank": rank,
    }


def _ns_discriminant(ctx: CheckContext):
    group = ctx.model.ns.discriminant_group()
    ok = group.invariant_factors == NS_INVARIANT_FACTORS and group.order == 64
    return ok, f"invariant factors {list(group.invariant_factors)}, order {group.order}", {
        "invariant_factors": list(group.invariant_factors),
        "order": group.order,
    }


def _alpha(ctx: CheckContext):
    m = ctx.model
    images = m.covering_involution_images()
    isometry = m.ns.is_isometry(images)
    involution = all(
        m.covering_involution(m.covering_involution(m.space.basis_vector(lab)))
        == m.space.basis_vector(lab)
        for lab in m.space.labels
    )
    fixes_nodes = all(
        m.covering_involution(m.node_class(n)) == m.node_class(n)
        for n in NODE_LABELS[1:]
    )
    fixed_tropes = ["C0"] + [f"C1{j}" for j in range(2, 7)]
    fixes_tropes = all(
        m.covering_involution(m.trope_class(t)) == m.trope_class(t)
        for t in fixed_tropes
    )
    moved = m.space.basis_vector("L") - 2 * m.space.basis_vector("E0")
    moves_tropes = all(
        m.covering_involution(m.trope_class(t)) == m.trope_class(t) + moved
        for t in TROPE_LABELS
        if t not in fixed_tropes
    )
    ok = isometry and involution and fixes_nodes and fixes_tropes and moves_tropes
    return ok, "covering involution is an involutive isometry with the stated action", {
        "isometry": isometry,
        "involution": involution,
        "fixes_nodes": fixes_nodes,
        "fixes_ramification_tropes": fixes_tropes,
        "translates_conic_tropes": moves_tropes,
    }


def _delta_identity(i: int, j: int):
    def body(ctx: CheckContext):
        ok = ctx.model.even_eight_identity(i, j)
        return ok, f"node sum of the ({i},{j}) even eight equals 2(L-E0) - 2C_1{i} - 2C_1{j} - 2E_{i}{j}", None

    return body


def _containment_1324(ctx: CheckContext):
    query = NodeSet.from_labels(["E13", "E14", "E23", "E24"])
    matches = ctx.model.even_eights_containing(query)
    restricted = {s for s in matches if "E0" not in s}
    expected = {even_eight(1, 2), even_eight(3, 4)}
    ok = restricted == expected
    return ok, "E0-avoiding even eights through E13,E14,E23,E24 are exactly the (1,2) and (3,4) eights", {
        "all_matches": _labels(sorted(matches)),
        "restricted_matches": _labels(sorted(restricted)),
    }


def _containment_1235(ctx: CheckContext):
    query = NodeSet.from_labels(["E12", "E23", "E15", "E35"])
    matches = ctx.model.even_eights_containing(query)
    restricted = sorted(s for s in matches if "E0" not in s)
    ok = len(restricted) == 2 and even_eight(2, 5) in restricted
    return ok, "exactly two E0-avoiding even eights contain E12,E23,E15,E35; one is the (2,5) eight", {
        "all_matches": _labels(sorted(matches)),
        "restricted_matches": _labels(restricted),
    }


def _disc_elements(ctx: CheckContext):
    ok = ctx.model.independent_discriminant_elements()
    return ok, "both half-sums of four nodes are dual-lattice classes, independent modulo the lattice", None


def _nik_roots(ctx: CheckContext):
    n = nik_mod.nikulin_lattice()
    found = nik_mod.roots(n)
    expected = set()
    for lab in n.space.labels:
        v = n.space.basis_vector(lab)
        expected.add(v.coords)
        expected.add((-v).coords)
    ok = len(found) == 16 and {v.coords for v in found} == expected
    return ok, f"norm -2 enumeration returns {len(found)} vectors, the signed basis", {
        "count": len(found)
    }


def _nik_eps1(ctx: CheckContext):
    count = nik_mod.halfsum_branch_root_count(nik_mod.nikulin_lattice())
    return count == 0, "the half-integer branch of the enumeration is empty", {
        "count": count
    }


def _nik_disc(ctx: CheckContext):
    group = nik_mod.nikulin_lattice().lattice.discriminant_group()
    ok = group.invariant_factors == NIKULIN_INVARIANT_FACTORS and group.order == 64
    return ok, f"discriminant group of order {group.order} with factors {list(group.invariant_factors)}", {
        "invariant_factors": list(group.invariant_factors),
        "order": group.order,
    }


def _nik_shape(ctx: CheckContext):
    n = nik_mod.nikulin_lattice()
    even = n.lattice.is_even()
    negdef = n.lattice.is_negative_definite()
    halfsum_norm = n.halfsum.norm()
    ok = even and negdef and halfsum_norm == -4 and n.lattice.rank == 8
    return ok, "rank 8, even, negative definite, half-sum of norm -4", {
        "even": even,
        "negative_definite": negdef,
        "halfsum_norm": int(halfsum_norm),
    }


def _nik_saturation(i: int, j: int):
    def body(ctx: CheckContext):
        eight = even_eight(i, j)
        index = nik_mod.saturation_index(eight, ctx.model)
        gram_ok = nik_mod.saturation_gram_matches(eight, ctx.model)
        ok = index == 2 and gram_ok
        return ok, f"({i},{j}) eight saturates with index {index}; Gram matches the abstract lattice", {
            "index": index,
            "gram_matches": gram_ok,
        }

    return body


def _fib_f2(ctx: CheckContext):
    norm = ctx.fibration.fiber_class.norm()
    return norm == 0, f"fiber class self-intersection {norm}", None


def _fib_sections(ctx: CheckContext):
    pairings = [s.dot(ctx.fibration.fiber_class) for s in ctx.fibration.sections]
    ok = len(pairings) == 4 and all(p == 1 for p in pairings)
    return ok, "four trope sections each meet the fiber class once", {
        "count": len(pairings)
    }


def _fib_classify(ctx: CheckContext):
    types = [f.kodaira_type for f in ctx.fibration.fibers]
    ok = types[:2] == ["I0*", "I0*"] and types[2:] == ["I2"] * 6
    return ok, f"fiber types {types}", {"types": types}


def _fib_euler(ctx: CheckContext):
    total = fib_mod.euler_sum(ctx.fibration)
    return total == 24, f"2*6 + 6*2 = {total}", {"euler_sum": total}


def _fib_identity(ctx: CheckContext):
    ok = fib_mod.even_eight_from_fibers(ctx.fibration, ctx.model)
    return ok, "the even eight equals F1 + F2 - 2*(central tropes), components matching", None


def _fib_cover(ctx: CheckContext):
    out = ctx.transformed
    i2 = sum(1 for f in out.fibers if f.kodaira_type == "I2")
    smooth = sum(1 for f in out.fibers if f.kodaira_type == "smooth")
    total = fib_mod.euler_sum(out)
    ok = i2 == 12 and smooth == 2 and total == 24 and len(out.sections) == 4
    return ok, f"cover fibration has {i2} two-component fibers, Euler sum {total}", {
        "i2_fibers": i2,
        "smooth_from_stars": smooth,
        "euler_sum": total,
        "sections": len(out.sections),
    }


def _fib_sweep(i: int, j: int):
    def body(ctx: CheckContext):
        f = fib_mod.build_fibration(ctx.model, i, j)
        ok = (
            f.fiber_class.norm() == 0
            and fib_mod.euler_sum(f) == 24
            and fib_mod.even_eight_from_fibers(f, ctx.model)
        )
        out = fib_mod.transform_double_cover(f, even_eight(i, j), ctx.model)
        i2 = sum(1 for x in out.fibers if x.kodaira_type == "I2")
        ok = ok and i2 == 12 and fib_mod.euler_sum(out) == 24
        return ok, f"pencil through the ({i},{j}) point passes all fibration checks", {
            "i2_fibers_on_cover": i2
        }

    return body


def _cover_e10(ctx: CheckContext):
    t = covers.build_quartic_cover()
    return t.euler == 10, f"Euler number of the quartic double cover is {t.euler}", {
        "euler": t.euler
    }


def _cover_k2(ctx: CheckContext):
    t = covers.build_quartic_cover()
    h_sq = t.pairing("l1", "l1")
    ok = t.k_squared == 2 and h_sq == 2
    return ok, f"K^2 = {t.k_squared} and pulled-back hyperplane square {h_sq}", {
        "k_squared": t.k_squared,
        "h_squared": int(h_sq),
    }


def _cover_chi(ctx: CheckContext):
    chi = covers.noether_chi(covers.build_quartic_cover())
    return chi == 1, f"(K^2 + e)/12 = {chi}", {"chi": str(chi)}


def _cover_dp2(ctx: CheckContext):
    ok = covers.verify_weak_del_pezzo(covers.build_quartic_cover())
    return ok, "invariants match a plane blown up at seven points (9-7=2, 3+7=10)", None


def _cover_table(ctx: CheckContext):
    table = covers.curve_table_T()
    return True, "declared curve table satisfies all three pullback aggregates (= 8)", {
        "table": table
    }


def _cover_x_euler(ctx: CheckContext):
    x = covers.build_final_cover()
    return x.euler == 24, f"Euler number of the final cover is {x.euler}", {
        "euler": x.euler
    }


def _cover_x_canonical(ctx: CheckContext):
    x = covers.build_final_cover()
    ok = x.canonical.is_zero() and x.k_squared == 0
    return ok, "canonical class of the final cover is numerically trivial", None


def _cover_x_chi(ctx: CheckContext):
    chi = covers.noether_chi(covers.build_final_cover())
    return chi == 2, f"(K^2 + e)/12 = {chi}", {"chi": str(chi)}


def _cover_sixteen(ctx: CheckContext):
    inv = covers.sixteen_curves_on_X()
    ok = (
        inv["total"] == 16
        and inv["split_preimages_of_exceptional"] == 12
        and inv["exceptional_of_cover"] == 2
        and inv["aggregate_cross"] == 8
    )
    return ok, "sixteen disjoint rational curves: 12 split + 2 exceptional + 2 conic pieces", inv


def _cover_incidence(ctx: CheckContext):
    config = covers.sextic_configuration()
    points = config.double_points()
    per_line = [len(config.points_on_line(i)) for i in range(1, 7)]
    degrees = config.degrees()
    ok = (
        len(points) == 15
        and per_line == [5] * 6
        and len(config.quartic_singular_points()) == 6
        and degrees == {"sextic": 6, "quartic": 4, "residual_conic": 2}
    )
    return ok, "15 double points, 5 per line, 6 blown for the quartic, degrees 6 = 4 + 2", {
        "double_points": len(points),
        "points_per_line": per_line,
        "quartic_singular_points": len(config.quartic_singular_points()),
        "degrees": degrees,
    }


def _cross_euler(ctx: CheckContext):
    fib_total = fib_mod.euler_sum(ctx.transformed)
    surf_total = covers.build_final_cover().euler
    ok = fib_total == surf_total == 24
    return ok, f"fiber Euler sum {fib_total} agrees with the surface Euler number {surf_total}", {
        "fibration": fib_total,
        "surface": surf_total,
    }


def _polarization(ctx: CheckContext):
    main = isogeny_polarization_type((1, 1), 2)
    identity = isogeny_polarization_type((1, 1), 1)
    doubled = isogeny_polarization_type((1, 2), 2)
    ok = main == (1, 2) and identity == (1, 1) and doubled == (1, 4)
    return ok, f"(1,1) pulls back to {main} along a degree-2 isogeny", {
        "degree2": list(main),
        "degree1": list(identity),
        "type12_degree2": list(doubled),
    }


# ---------------------------------------------------------------------------
# flagged open questions
# ---------------------------------------------------------------------------


def _flag_relation3(ctx: CheckContext):
    return True, (
        "trope classes C_jk are indexed by the ten (3,3)-partitions of {1..6}, "
        "i.e. pairs 2 <= j < k <= 6; a stray index bound in the source relation "
        "is normalized to this convention"
    ), None


def _flag_containment(ctx: CheckContext):
    q1 = NodeSet.from_labels(["E13", "E14", "E23", "E24"])
    q2 = NodeSet.from_labels(["E12", "E23", "E15", "E35"])
    return True, (
        "the containment claims hold among E0-avoiding even eights; the full "
        "census adds one complement-type eight containing E0 to each answer"
    ), {
        "quadruple_1324_full": _labels(sorted(ctx.model.even_eights_containing(q1))),
        "quadruple_1235_full": _labels(sorted(ctx.model.even_eights_containing(q2))),
    }


def _flag_effectivity(ctx: CheckContext):
    return True, (
        "the root enumeration covers all norm -2 lattice vectors; whether a "
        "class is represented by an actual curve is not decidable in the "
        "lattice model"
    ), None


def _flag_pencil(ctx: CheckContext):
    return True, (
        "the genus-1 class on the quartic cover has self-intersection 2, a "
        "pencil with base points; the fibration bookkeeping is recorded on "
        "the blown-up cover where its square is 0"
    ), None


def _flag_blowdown(ctx: CheckContext):
    return True, (
        "the seven-curve blowdown sequence of the degree-two surface is not "
        "determined by the recorded data; only the invariant arithmetic "
        "9 - 7 = 2 and 3 + 7 = 10 is checked"
    ), None


def _flag_we_diagonal(ctx: CheckContext):
    return True, (
        "individual diagonal pairings of the conic and line preimages are "
        "undeclared; aggregate consistency forces their sum to 4 and nothing "
        "more"
    ), {"forced_diagonal_sum": 4}


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


def _build_registry() -> tuple[CheckDef, ...]:
    defs: list[CheckDef] = [
        CheckDef(
            "even_sets.count30",
            "census the weight-8 results of the exhaustive even-set scan",
            "the sixteen nodes admit exactly thirty even eights",
            _count30,
        ),
        CheckDef(
            "even_sets.census",
            "scan all 65536 node subsets for half-sum membership in the lattice",
            "even node sets have weight 0, 8 or 16, with counts 1/30/1",
            _census,
        ),
        CheckDef(
            "even_sets.delta15",
            "filter the even eights avoiding E0 and compare with the index-pair family",
            "exactly fifteen even eights avoid E0 and they are the index-pair eights",
            _delta15,
        ),
        CheckDef(
            "code.linear_dim5",
            "take the linear closure of the even-set family over F2",
            "the 32 even sets already form a linear code of dimension 5",
            _code_dim,
        ),
        CheckDef(
            "code.weight_enumerator",
            "histogram the codeword weights",
            "weight enumerator 1 + 30 z^8 + z^16",
            _code_weights,
        ),
        CheckDef(
            "code.affine_hyperplanes",
            "pairwise-intersect the thirty weight-8 codewords",
            "distinct even eights meet in 0 or 4 nodes and complements are members",
            _code_affine,
        ),
        CheckDef(
            "config.sixteen_six",
            "compute the 16x16 trope-node intersection table",
            "a (16,6) configuration: 0/1 entries, all rows and columns sum to 6",
            _sixteen_six,
        ),
        CheckDef(
            "ns.tropes_contained",
            "test lattice membership of every trope class",
            "all sixteen half-integer trope classes lie in the divisor lattice",
            _tropes_contained,
        ),
        CheckDef(
            "ns.trope_pairings",
            "compute all trope norms and pairwise trope intersections",
            "tropes have norm -2, meet L twice, and are mutually orthogonal",
            _trope_pairings,
        ),
        CheckDef(
            "ns.rank17",
            "reduce the node and trope generators to a Hermite basis",
            "the divisor lattice has rank 17",
            _rank17,
        ),
        CheckDef(
            "ns.discriminant",
            "Smith normal form of the Z-basis Gram matrix",
            "discriminant group of order 64 with invariant factors (2,2,2,2,4)",
            _ns_discriminant,
        ),
        CheckDef(
            "alpha.isometry",
            "verify the covering involution of the double-plane model on the lattice",
            "an involutive isometry fixing nodes and ramification tropes",
            _alpha,
        ),
        CheckDef(
            "containment.quadruple_1324",
            "scan the even eights containing E13, E14, E23, E24",
            "among E0-avoiding even eights, exactly the (1,2) and (3,4) eights",
            _containment_1324,
        ),
        CheckDef(
            "containment.quadruple_1235",
            "scan the even eights containing E12, E23, E15, E35",
            "exactly two E0-avoiding even eights, one of them the (2,5) eight",
            _containment_1235,
        ),
        CheckDef(
            "ns.disc_elements",
            "test two half-sums of four nodes against lattice and dual lattice",
            "two independent order-2 classes in the discriminant group",
            _disc_elements,
        ),
        CheckDef(
            "nikulin.roots16",
            "enumerate all norm -2 vectors of the rank-8 half-sum lattice",
            "the only norm -2 classes are the sixteen signed basis vectors",
            _nik_roots,
        ),
        CheckDef(
            "nikulin.eps1_none",
            "enumerate the half-integer branch of the root search",
            "no norm -2 vector involves the half-sum generator",
            _nik_eps1,
        ),
        CheckDef(
            "nikulin.disc64",
            "Smith normal form of the canonical rank-8 Gram matrix",
            "discriminant group of order 2^6",
            _nik_disc,
        ),
        CheckDef(
            "nikulin.even_negdef",
            "check parity and definiteness of the rank-8 lattice",
            "an even negative-definite lattice whose half-sum has norm -4",
            _nik_shape,
        ),
        CheckDef(
            "fibration.F2zero",
            "square the fiber class L - E0 - E12",
            "the fiber class is isotropic",
            _fib_f2,
        ),
        CheckDef(
            "fibration.sections4",
            "pair the four trope sections with the fiber class",
            "four sections each meeting a fiber once",
            _fib_sections,
        ),
        CheckDef(
            "fibration.classify",
            "classify all eight fibers from their component dual graphs",
            "two star fibers and six two-component fibers",
            _fib_classify,
        ),
        CheckDef(
            "fibration.eulersum24",
            "sum the Euler numbers of the singular fibers",
            "2*6 + 6*2 = 24, the Euler number of a K3 surface",
            _fib_euler,
        ),
        CheckDef(
            "fibration.delta12_identity",
            "compare the even eight with F1 + F2 minus twice the central tropes",
            "the even eight is the multiplicity-one locus of the two star fibers",
            _fib_identity,
        ),
        CheckDef(
            "fibration.cover12I2",
            "transform the fibration through the branched double cover",
            "exactly twelve two-component fibers upstairs, Euler sum still 24",
            _fib_cover,
        ),
        CheckDef(
            "cover.eT10",
            "Euler number of the double cover branched along the quartic lines",
            "e = 2*9 - 4*2 = 10",
            _cover_e10,
        ),
        CheckDef(
            "cover.kT2",
            "canonical square and hyperplane square on the quartic cover",
            "K^2 = 2 and the pulled-back hyperplane has square 2",
            _cover_k2,
        ),
        CheckDef(
            "cover.chi1",
            "evaluate the Noether quotient on the quartic cover",
            "holomorphic Euler characteristic 1",
            _cover_chi,
        ),
        CheckDef(
            "cover.weak_dp2",
            "compare invariants against a seven-point blowup of the plane",
            "a degree-two weak del Pezzo surface",
            _cover_dp2,
        ),
        CheckDef(
            "cover.curve_table",
            "check the declared curve table against the pullback aggregates",
            "all three aggregate identities equal 8",
            _cover_table,
        ),
        CheckDef(
            "cover.X_euler24",
            "Euler number of the genus-1 branched cover",
            "e = 2*12 - 0 = 24",
            _cover_x_euler,
        ),
        CheckDef(
            "cover.X_canonical",
            "canonical class of the final cover",
            "numerically trivial canonical class",
            _cover_x_canonical,
        ),
        CheckDef(
            "cover.X_chi2",
            "evaluate the Noether quotient on the final cover",
            "holomorphic Euler characteristic 2",
            _cover_x_chi,
        ),
        CheckDef(
            "cover.X_sixteen",
            "inventory the disjoint rational curves on the final cover",
            "sixteen disjoint rational curves: 12 + 2 + 2",
            _cover_sixteen,
        ),
        CheckDef(
            "cover.incidence_sextic",
            "count the incidences of the six-line-plus-conic configuration",
            "15 double points, 5 per line, 6 quartic singular points, degree 6 = 4 + 2",
            _cover_incidence,
        ),
        CheckDef(
            "cross.euler24",
            "compare the transformed fiber Euler sum with the surface Euler number",
            "two independent computations of the Euler number 24 agree",
            _cross_euler,
        ),
        CheckDef(
            "polarization.type12",
            "pull a principal polarization back along a degree-2 isogeny",
            "type (1,1) becomes type (1,2)",
            _polarization,
        ),
    ]

    for i, j in all_even_eight_pairs():
        defs.append(
            CheckDef(
                f"delta.identity.{i}{j}",
                f"expand the trope identity for the ({i},{j}) even eight",
                "the even eight is cut out by two tropes, L - E0 and one node",
                _delta_identity(i, j),
            )
        )
    for i, j in all_even_eight_pairs():
        defs.append(
            CheckDef(
                f"nikulin.saturation.{i}{j}",
                f"saturate the ({i},{j}) even eight inside the divisor lattice",
                "index-2 saturation generated by the nodes and their half-sum",
                _nik_saturation(i, j),
            )
        )
    for i, j in all_even_eight_pairs():
        defs.append(
            CheckDef(
                f"fibration.sweep.{i}{j}",
                f"run the full fibration pipeline for the ({i},{j}) pencil",
                "every index pair yields the same fiber and cover bookkeeping",
                _fib_sweep(i, j),
            )
        )

    defs += [
        CheckDef(
            "oq.relation3_index_range",
            "record the index convention for the conic tropes",
            "trope indexing follows the ten (3,3)-partitions",
            _flag_relation3,
            flagged=True,
        ),
        CheckDef(
            "oq.containment_full_answers",
            "record the full even-eight containment answer sets",
            "each quadruple query has one extra match containing E0",
            _flag_containment,
            flagged=True,
        ),
        CheckDef(
            "oq.nikulin_effectivity",
            "record the scope of the root enumeration",
            "effectivity of norm -2 classes is outside the lattice model",
            _flag_effectivity,
            flagged=True,
        ),
        CheckDef(
            "oq.pencil_base_points",
            "record where the genus-1 pencil becomes base-point free",
            "the pencil has square 2 before and 0 after the two blowups",
            _flag_pencil,
            flagged=True,
        ),
        CheckDef(
            "oq.blowdown_sequence",
            "record the unverified part of the del Pezzo blowdown",
            "only the numerical consequences of seven blowdowns are checked",
            _flag_blowdown,
            flagged=True,
        ),
        CheckDef(
            "oq.we_diagonal",
            "record the undetermined diagonal of the curve table",
            "only the diagonal sum 4 is forced by pullback consistency",
            _flag_we_diagonal,
            flagged=True,
        ),
    ]

    defs.sort(key=lambda d: d.id)
    ids = [d.id for d in defs]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate check ids in the registry")
    return tuple(defs)


REGISTRY: tuple[CheckDef, ...] = _build_registry()


def list_checks() -> list[tuple[str, str, str]]:
    """(id, description, claim) for every registered check, in id order."""
    return [(d.id, d.description, d.claim) for d in REGISTRY]


def run_check(check: CheckDef, ctx: CheckContext) -> CheckResult:
    try:
        ok, detail, data = check.run(ctx)
    except Exception as exc:  # a crashed check is a failed check
        return CheckResult(check.id, FAIL, f"error: {exc}", None)
    if check.flagged:
        return CheckResult(check.id, FLAGGED, detail, data)
    return CheckResult(check.id, PASS if ok else FAIL, detail, data)


def run_checks(ids: list[str] | None = None) -> list[CheckResult]:
    """Run the selected checks (all when ids is None) in id order."""
    ctx = CheckContext()
    selected = REGISTRY if ids is None else [d for d in REGISTRY if d.id in set(ids)]
    return [run_check(d, ctx) for d in selected]
