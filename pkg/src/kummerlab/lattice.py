"""Exact rational quadratic spaces and integral sublattice arithmetic.

Everything is computed with `fractions.Fraction`; no floating point appears
anywhere in the package.  A sublattice is stored as a generator matrix over a
fixed ambient space.  Normal forms (Hermite, Smith) run on integer matrices
obtained by clearing denominators with a single scalar; the matrices involved
are tiny (at most 33 x 17), so the routines use plain fraction-free pivoting
with no modular-arithmetic shortcuts.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm, prod


class LatticeError(ValueError):
    """Structural misuse: wrong space, bad dimensions, degenerate lattice."""


# ---------------------------------------------------------------------------
# integer matrix kernels: xgcd, HNF, SNF, determinants
# ---------------------------------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _hnf_rows(
    rows: Sequence[Sequence[int]], ncols: int, want_kernel: bool = False
) -> tuple[list[list[int]], list[int], list[list[int]]]:
    """Row-style Hermite normal form by unimodular row operations.

    Returns ``(hnf, pivots, kernel)``.  The hnf rows have strictly increasing
    pivot columns, positive pivots, and every entry above a pivot reduced into
    ``[0, pivot)``; this form is unique for the row span, so it serves as the
    canonical basis.  ``kernel`` (only populated when requested) is a basis of
    the left kernel of the input matrix in input-row coordinates.
    """
    work: list[list[int]] = []
    trans: list[list[int]] = []
    pivots: list[int] = []
    kernel: list[list[int]] = []
    m = len(rows)

    for ri, row in enumerate(rows):
        vec = [int(x) for x in row]
        if len(vec) != ncols:
            raise LatticeError(f"row has {len(vec)} entries, expected {ncols}")
        tr = [0] * m
        if want_kernel:
            tr[ri] = 1
        while True:
            j = next((c for c, x in enumerate(vec) if x), None)
            if j is None:
                if want_kernel:
                    kernel.append(tr)
                break
            pos = bisect_left(pivots, j)
            if pos < len(pivots) and pivots[pos] == j:
                head = work[pos]
                a, b = head[j], vec[j]
                if b % a == 0:
                    q = b // a
                    vec = [x - q * y for x, y in zip(vec, head)]
                    if want_kernel:
                        tr = [x - q * y for x, y in zip(tr, trans[pos])]
                else:
                    g, s, t = _xgcd(a, b)
                    u, v = -(b // g), a // g
                    work[pos] = [s * x + t * y for x, y in zip(head, vec)]
                    vec = [u * x + v * y for x, y in zip(head, vec)]
                    if want_kernel:
                        ht = trans[pos]
                        trans[pos] = [s * x + t * y for x, y in zip(ht, tr)]
                        tr = [u * x + v * y for x, y in zip(ht, tr)]
            else:
                if vec[j] < 0:
                    vec = [-x for x in vec]
                    tr = [-x for x in tr]
                work.insert(pos, vec)
                pivots.insert(pos, j)
                trans.insert(pos, tr)
                break

    # reduce entries above each pivot into [0, pivot)
    for i in range(1, len(work)):
        p = pivots[i]
        piv = work[i][p]
        for k in range(i):
            q = work[k][p] // piv
            if q:
                work[k] = [x - q * y for x, y in zip(work[k], work[i])]
    return work, pivots, kernel


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _smith_normal_form(
    mat: Sequence[Sequence[int]],
) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms: U * mat * V = diag(d), d_i | d_{i+1}.

    U and V are unimodular; the diagonal entries are non-negative.
    """
    a = [[int(x) for x in row] for row in mat]
    m = len(a)
    n = len(a[0]) if a else 0
    u = _identity(m)
    v = _identity(n)

    def row_combine(i1: int, i2: int, col: int) -> None:
        p, q = a[i1][col], a[i2][col]
        if q == 0:
            return
        if p != 0 and q % p == 0:
            f = q // p
            a[i2] = [x - f * y for x, y in zip(a[i2], a[i1])]
            u[i2] = [x - f * y for x, y in zip(u[i2], u[i1])]
            return
        g, s, t = _xgcd(p, q)
        w, z = -(q // g), p // g
        a[i1], a[i2] = (
            [s * x + t * y for x, y in zip(a[i1], a[i2])],
            [w * x + z * y for x, y in zip(a[i1], a[i2])],
        )
        u[i1], u[i2] = (
            [s * x + t * y for x, y in zip(u[i1], u[i2])],
            [w * x + z * y for x, y in zip(u[i1], u[i2])],
        )

    def col_combine(j1: int, j2: int, row: int) -> None:
        p, q = a[row][j1], a[row][j2]
        if q == 0:
            return
        if p != 0 and q % p == 0:
            f = q // p
            for r in a:
                r[j2] -= f * r[j1]
            for r in v:
                r[j2] -= f * r[j1]
            return
        g, s, t = _xgcd(p, q)
        w, z = -(q // g), p // g
        for r in a:
            r[j1], r[j2] = s * r[j1] + t * r[j2], w * r[j1] + z * r[j2]
        for r in v:
            r[j1], r[j2] = s * r[j1] + t * r[j2], w * r[j1] + z * r[j2]

    t = 0
    while t < min(m, n):
        # bring a nonzero entry of the trailing submatrix to position (t, t)
        pivot = next(
            ((i, j) for i in range(t, m) for j in range(t, n) if a[i][j]), None
        )
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r in a:
                r[t], r[pj] = r[pj], r[t]
            for r in v:
                r[t], r[pj] = r[pj], r[t]
        while True:
            for i in range(t + 1, m):
                row_combine(t, i, t)
            for j in range(t + 1, n):
                col_combine(t, j, t)
            if all(a[i][t] == 0 for i in range(t + 1, m)) and all(
                a[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        # enforce divisibility of the remaining submatrix by the pivot
        d = a[t][t]
        offender = next(
            (
                (i, j)
                for i in range(t + 1, m)
                for j in range(t + 1, n)
                if a[i][j] % d != 0
            ),
            None,
        )
        if offender is not None:
            i, _ = offender
            a[t] = [x + y for x, y in zip(a[t], a[i])]
            u[t] = [x + y for x, y in zip(u[t], u[i])]
            continue
        t += 1

    diag = []
    for i in range(min(m, n)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
        diag.append(a[i][i])
    return diag, u, v


def _det_int(mat: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_fraction(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a square matrix of fractions by Gaussian elimination."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


# ---------------------------------------------------------------------------
# quadratic space and vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticSpace:
    """A labelled basis with a symmetric bilinear form given by exact rationals."""

    labels: tuple[str, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        gram = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        if len(set(labels)) != len(labels):
            raise LatticeError("basis labels must be unique")
        n = len(labels)
        if len(gram) != n or any(len(row) != n for row in gram):
            raise LatticeError("Gram matrix shape must match the label count")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError("Gram matrix must be symmetric")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "gram", gram)

    @classmethod
    def diagonal(cls, labels: Iterable[str], entries: Iterable[int | Fraction]) -> "QuadraticSpace":
        labels = tuple(labels)
        diag = [Fraction(e) for e in entries]
        if len(diag) != len(labels):
            raise LatticeError("diagonal length must match the label count")
        gram = tuple(
            tuple(diag[i] if i == j else Fraction(0) for j in range(len(labels)))
            for i in range(len(labels))
        )
        return cls(labels, gram)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {label: k for k, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise LatticeError(f"unknown basis label {label!r}") from None

    def basis_vector(self, label: str) -> "RationalVector":
        coords = [Fraction(0)] * self.dim
        coords[self.index(label)] = Fraction(1)
        return RationalVector(self, tuple(coords))

    def zero(self) -> "RationalVector":
        return RationalVector(self, (Fraction(0),) * self.dim)

    def vector(self, values: Sequence[int | Fraction] | Mapping[str, int | Fraction]) -> "RationalVector":
        """Build a vector from a coordinate sequence or a label -> value mapping."""
        if isinstance(values, Mapping):
            coords = [Fraction(0)] * self.dim
            for label, value in values.items():
                coords[self.index(label)] = Fraction(value)
            return RationalVector(self, tuple(coords))
        coords = tuple(Fraction(v) for v in values)
        if len(coords) != self.dim:
            raise LatticeError(f"expected {self.dim} coordinates, got {len(coords)}")
        return RationalVector(self, coords)

    def _check_member(self, v: "RationalVector") -> None:
        if v.space is not self and v.space != self:
            raise LatticeError("vector belongs to a different quadratic space")

    def inner(self, v: "RationalVector", w: "RationalVector") -> Fraction:
        """The bilinear form v^T * gram * w, computed exactly."""
        self._check_member(v)
        self._check_member(w)
        total = Fraction(0)
        for i, vi in enumerate(v.coords):
            if vi:
                row = self.gram[i]
                acc = Fraction(0)
                for j, wj in enumerate(w.coords):
                    if wj:
                        acc += row[j] * wj
                total += vi * acc
        return total


@dataclass(frozen=True)
class RationalVector:
    """A vector of exact rational coordinates over a fixed quadratic space."""

    space: QuadraticSpace
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != self.space.dim:
            raise LatticeError(
                f"expected {self.space.dim} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    def coeff(self, label: str) -> Fraction:
        return self.coords[self.space.index(label)]

    def dot(self, other: "RationalVector") -> Fraction:
        return self.space.inner(self, other)

    def norm(self) -> Fraction:
        return self.space.inner(self, self)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _binop_space(self, other: "RationalVector") -> None:
        if self.space is not other.space and self.space != other.space:
            raise LatticeError("vectors belong to different quadratic spaces")

    def __add__(self, other: "RationalVector") -> "RationalVector":
        self._binop_space(other)
        return RationalVector(
            self.space, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "RationalVector") -> "RationalVector":
        self._binop_space(other)
        return RationalVector(
            self.space, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "RationalVector":
        return RationalVector(self.space, tuple(-a for a in self.coords))

    def __mul__(self, scalar: int | Fraction) -> "RationalVector":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return RationalVector(self.space, tuple(a * scalar for a in self.coords))

    __rmul__ = __mul__


# every divisor symbol in the package is carried as one of these
DivisorClass = RationalVector


def vector_to_json(v: RationalVector) -> dict:
    """Interchange form: decimal-string numerators/denominators, exact round trip."""
    return {
        "basis": list(v.space.labels),
        "coords": [[str(c.numerator), str(c.denominator)] for c in v.coords],
    }


def vector_from_json(space: QuadraticSpace, payload: Mapping) -> RationalVector:
    if tuple(payload["basis"]) != space.labels:
        raise LatticeError("serialized basis labels do not match the target space")
    coords = tuple(Fraction(int(num), int(den)) for num, den in payload["coords"])
    return RationalVector(space, coords)


# ---------------------------------------------------------------------------
# sublattices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiscriminantGroup:
    """Invariant factors of dual-modulo-lattice, with lifted generators."""

    invariant_factors: tuple[int, ...]
    generator_lifts: tuple[RationalVector, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(f) for f in self.invariant_factors)
        if any(f <= 1 for f in factors):
            raise LatticeError("invariant factors must exceed 1")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                raise LatticeError("invariant factors must form a divisibility chain")
        if len(self.generator_lifts) != len(factors):
            raise LatticeError("one generator lift per invariant factor")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors) if self.invariant_factors else 1


@dataclass(frozen=True)
class SublatticeModel:
    """The integer span of finitely many rational vectors in an ambient space."""

    space: QuadraticSpace
    generators: tuple[RationalVector, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        for g in gens:
            self.space._check_member(g)
        object.__setattr__(self, "generators", gens)

    # -- canonical basis -----------------------------------------------------

    @cached_property
    def _scaled(self) -> tuple[int, tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """(denominator D, HNF rows of D * generators, pivot columns)."""
        den = 1
        for g in self.generators:
            for c in g.coords:
                den = lcm(den, c.denominator)
        int_rows = [
            [int(c * den) for c in g.coords] for g in self.generators
        ]
        hnf, pivots, _ = _hnf_rows(int_rows, self.space.dim)
        return den, tuple(tuple(r) for r in hnf), tuple(pivots)

    @property
    def denominator(self) -> int:
        """Scalar clearing every generator denominator."""
        return self._scaled[0]

    @property
    def rank(self) -> int:
        return len(self._scaled[1])

    def zbasis(self) -> tuple[RationalVector, ...]:
        den, hnf, _ = self._scaled
        return tuple(
            RationalVector(self.space, tuple(Fraction(x, den) for x in row))
            for row in hnf
        )

    def hnf_basis(self) -> "SublatticeModel":
        """Equivalent sublattice whose generators are the canonical HNF basis."""
        return SublatticeModel(self.space, self.zbasis())

    def same_lattice(self, other: "SublatticeModel") -> bool:
        if self.space != other.space:
            return False
        return tuple(v.coords for v in self.zbasis()) == tuple(
            v.coords for v in other.zbasis()
        )

    # -- membership ----------------------------------------------------------

    def contains_scaled(self, scaled: Sequence[int]) -> bool:
        """Membership test for v given the integer vector denominator * v."""
        _, hnf, pivots = self._scaled
        x = list(scaled)
        for row, p in zip(hnf, pivots):
            c = x[p]
            if c:
                q, r = divmod(c, row[p])
                if r:
                    return False
                for k in range(p, len(x)):
                    x[k] -= q * row[k]
        return not any(x)

    def contains(self, v: RationalVector) -> bool:
        """True iff v is an integer combination of the generators."""
        self.space._check_member(v)
        den = self.denominator
        scaled = []
        for c in v.coords:
            s = c * den
            if s.denominator != 1:
                return False
            scaled.append(s.numerator)
        return self.contains_scaled(scaled)

    def coordinates_of(self, v: RationalVector) -> tuple[int, ...] | None:
        """Integer coordinates of v in the canonical HNF basis, or None."""
        self.space._check_member(v)
        den, hnf, pivots = self._scaled
        x = []
        for c in v.coords:
            s = c * den
            if s.denominator != 1:
                return None
            x.append(s.numerator)
        coeffs = []
        for row, p in zip(hnf, pivots):
            c = x[p]
            if c:
                q, r = divmod(c, row[p])
                if r:
                    return None
                for k in range(p, len(x)):
                    x[k] -= q * row[k]
                coeffs.append(q)
            else:
                coeffs.append(0)
        if any(x):
            return None
        return tuple(coeffs)

    # -- invariants ----------------------------------------------------------

    def gram_zbasis(self) -> list[list[Fraction]]:
        basis = self.zbasis()
        return [[self.space.inner(a, b) for b in basis] for a in basis]

    def discriminant_group(self) -> DiscriminantGroup:
        """Smith normal form of the Z-basis Gram matrix, with lifted generators."""
        basis = self.zbasis()
        if not basis:
            return DiscriminantGroup((), ())
        gram = self.gram_zbasis()
        int_gram = []
        for row in gram:
            int_row = []
            for x in row:
                if x.denominator != 1:
                    raise LatticeError("Gram matrix of the Z-basis is not integral")
                int_row.append(x.numerator)
            int_gram.append(int_row)
        diag, u, _ = _smith_normal_form(int_gram)
        if len(diag) < len(basis) or any(d == 0 for d in diag):
            raise LatticeError("degenerate lattice: Gram determinant is zero")
        factors = []
        lifts = []
        for i, d in enumerate(diag):
            if d > 1:
                factors.append(d)
                coords = [Fraction(0)] * self.space.dim
                for k, c in enumerate(u[i]):
                    if c:
                        for a in range(self.space.dim):
                            coords[a] += c * basis[k].coords[a]
                lift = RationalVector(
                    self.space, tuple(c / d for c in coords)
                )
                lifts.append(lift)
        return DiscriminantGroup(tuple(factors), tuple(lifts))

    def in_dual(self, v: RationalVector) -> bool:
        """True iff v pairs integrally with every generator."""
        self.space._check_member(v)
        return all(
            self.space.inner(v, g).denominator == 1 for g in self.generators
        )

    def is_even(self) -> bool:
        """Integral Gram with even diagonal, i.e. every vector has even norm."""
        gram = self.gram_zbasis()
        n = len(gram)
        for i in range(n):
            for j in range(n):
                if gram[i][j].denominator != 1:
                    return False
        return all(gram[i][i].numerator % 2 == 0 for i in range(n))

    def is_negative_definite(self) -> bool:
        """All leading principal minors of the negated Z-basis Gram are positive."""
        gram = self.gram_zbasis()
        neg = [[-x for x in row] for row in gram]
        for k in range(1, len(neg) + 1):
            minor = [row[:k] for row in neg[:k]]
            if _det_fraction(minor) <= 0:
                return False
        return True

    # -- maps and sublattices --------------------------------------------------

    def is_isometry(self, images: Mapping[str, RationalVector]) -> bool:
        """True iff the map defined on the basis labels preserves the form and
        carries this lattice bijectively onto itself."""
        if set(images) != set(self.space.labels):
            raise LatticeError("images must be given for every basis label")
        rows = []
        for label in self.space.labels:
            img = images[label]
            self.space._check_member(img)
            rows.append(img)
        # form preservation on all basis pairs
        n = self.space.dim
        for i in range(n):
            for j in range(i, n):
                if rows[i].dot(rows[j]) != self.space.gram[i][j]:
                    return False
        # the lattice must map into itself with unimodular coefficient matrix
        coeff_rows = []
        for b in self.zbasis():
            image_coords = [Fraction(0)] * n
            for i, ci in enumerate(b.coords):
                if ci:
                    for a in range(n):
                        image_coords[a] += ci * rows[i].coords[a]
            image = RationalVector(self.space, tuple(image_coords))
            coeffs = self.coordinates_of(image)
            if coeffs is None:
                return False
            coeff_rows.append(list(coeffs))
        return abs(_det_int(coeff_rows)) == 1

    def coordinate_section(self, labels: Iterable[str]) -> "SublatticeModel":
        """Sublattice of all lattice vectors supported on the given labels.

        This is the intersection with the rational coordinate subspace, hence
        the saturation of any sublattice spanned inside those coordinates.
        """
        keep = {self.space.index(label) for label in labels}
        others = [i for i in range(self.space.dim) if i not in keep]
        den, hnf, _ = self._scaled
        if not others:
            return self.hnf_basis()
        restricted = [[row[c] for c in others] for row in hnf]
        _, _, kernel = _hnf_rows(restricted, len(others), want_kernel=True)
        vectors = []
        for combo in kernel:
            coords = [0] * self.space.dim
            for r, c in enumerate(combo):
                if c:
                    for a in range(self.space.dim):
                        coords[a] += c * hnf[r][a]
            vectors.append(
                RationalVector(
                    self.space, tuple(Fraction(x, den) for x in coords)
                )
            )
        return SublatticeModel(self.space, tuple(vectors))

    def index_of_sublattice(self, sub: "SublatticeModel") -> int:
        """Index [self : sub] for a finite-index sublattice of equal rank."""
        if self.space != sub.space:
            raise LatticeError("sublattice lives in a different space")
        if sub.rank != self.rank:
            raise LatticeError("ranks differ, the index is not finite")
        coeff_rows = []
        for b in sub.zbasis():
            coeffs = self.coordinates_of(b)
            if coeffs is None:
                raise LatticeError("given lattice is not contained in this one")
            coeff_rows.append(list(coeffs))
        det = _det_int(coeff_rows)
        return abs(det)
