"""Root-system data for the Cartan types B_n, D_n, G2 and F4.

Conventions (Bourbaki numbering throughout):

* the Cartan matrix entry ``M[i][j]`` is the pairing of the j-th simple root
  with the i-th simple coroot, so column j of M is the j-th simple root
  written in fundamental-weight coordinates;
* weights are coordinate vectors in the basis of fundamental weights;
* root lengths are normalized so that long roots have squared length 2
  (short roots then have squared length 1 in B/D/F4 and 2/3 in G2).

Each type also carries its standard degree-2 classes t_1, ..., t_n (and the
extra half-sum class t for F4), hard-coded in weight coordinates so that the
classical torus descriptions are reproduced exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotARootError, OutOfRangeError, UnsupportedRankError
from .polyring import Polynomial, Rational, _norm_coeff

FAMILIES = ("B", "D", "G2", "F4")

Weight = tuple  # coordinate vector in the fundamental-weight basis


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedRankError(f"unknown family {self.family!r}")
        if self.family == "B" and self.rank < 2:
            raise UnsupportedRankError("type B requires rank >= 2")
        if self.family == "D" and self.rank < 4:
            raise UnsupportedRankError("type D requires rank >= 4")
        if self.family == "G2" and self.rank != 2:
            raise UnsupportedRankError("type G2 has rank 2")
        if self.family == "F4" and self.rank != 4:
            raise UnsupportedRankError("type F4 has rank 4")

    @property
    def name(self) -> str:
        if self.family in ("G2", "F4"):
            return self.family
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.name


def cartan_type(family: str, rank: int | None = None) -> CartanType:
    """Build a CartanType, defaulting the rank for the exceptional types."""
    if family in ("G2", "F4"):
        return CartanType(family, rank if rank is not None else (2 if family == "G2" else 4))
    if rank is None:
        raise UnsupportedRankError(f"type {family} needs an explicit rank")
    return CartanType(family, rank)


@dataclass(frozen=True)
class Root:
    """A root, stored both in simple-root and weight coordinates."""

    simple_coords: tuple
    omega: Weight
    length_sq: Rational
    coroot_on_omega: tuple = field(compare=False)
    # coroot_on_omega[i] is the pairing of the i-th fundamental weight with
    # the coroot of this root, so (beta^vee | lam) = sum_i c_i * lam_i.

    @property
    def is_positive(self) -> bool:
        return all(m >= 0 for m in self.simple_coords)

    def __str__(self):
        return str(Polynomial.linear_form(self.omega))


def _cartan_matrix(family: str, n: int) -> tuple:
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if family == "B":
        for i in range(n - 1):
            rows[i][i + 1] = -1
            rows[i + 1][i] = -1
        rows[n - 1][n - 2] = -2
    elif family == "D":
        for i in range(n - 2):
            rows[i][i + 1] = -1
            rows[i + 1][i] = -1
        rows[n - 3][n - 1] = -1
        rows[n - 1][n - 3] = -1
    elif family == "G2":
        rows = [[2, -3], [-1, 2]]
    elif family == "F4":
        rows = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    return tuple(tuple(r) for r in rows)


def _simple_length_sq(family: str, n: int) -> tuple:
    if family == "B":
        return (2,) * (n - 1) + (1,)
    if family == "D":
        return (2,) * n
    if family == "G2":
        return (Fraction(2, 3), 2)
    return (2, 2, 1, 1)


def _unit(n: int, j: int, c: Rational = 1) -> tuple:
    return tuple(c if k == j else 0 for k in range(n))


def _t_vectors(family: str, n: int):
    """The classes t_i in weight coordinates, plus the extra class for F4."""
    if family == "B":
        ts = [_unit(n, 0)]
        for i in range(1, n - 1):
            v = [0] * n
            v[i - 1], v[i] = -1, 1
            ts.append(tuple(v))
        v = [0] * n
        v[n - 2], v[n - 1] = -1, 2
        ts.append(tuple(v))
        return tuple(ts), None
    if family == "D":
        ts = [_unit(n, 0)]
        for i in range(1, n - 2):
            v = [0] * n
            v[i - 1], v[i] = -1, 1
            ts.append(tuple(v))
        v = [0] * n
        v[n - 3], v[n - 2], v[n - 1] = -1, 1, 1
        ts.append(tuple(v))
        v = [0] * n
        v[n - 2], v[n - 1] = -1, 1
        ts.append(tuple(v))
        return tuple(ts), None
    if family == "G2":
        return ((-1, 0), (-1, 1), (2, -1)), None
    # F4: t_1..t_4 and t = c_1/2
    return (
        (0, 0, 0, -1),
        (1, 0, 0, -1),
        (-1, 1, 0, -1),
        (0, -1, 2, -1),
    ), (0, 0, 1, -2)


_NUM_POSITIVE = {
    "B": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "G2": lambda n: 6,
    "F4": lambda n: 24,
}


class RootDatum:
    """All root-system data for one Cartan type.

    Immutable after construction; every operation on it is pure, so a single
    instance can be shared freely.
    """

    def __init__(self, ct: CartanType):
        self.cartan_type = ct
        self.rank = ct.rank
        self.cartan_matrix = _cartan_matrix(ct.family, ct.rank)
        self.simple_length_sq = _simple_length_sq(ct.family, ct.rank)
        self.t_vectors, self.extra_t = _t_vectors(ct.family, ct.rank)
        self.fundamental_weights = tuple(_unit(ct.rank, j) for j in range(ct.rank))

        self._close_roots()
        expected = _NUM_POSITIVE[ct.family](ct.rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"reflection closure found {len(self.positive_roots)} positive "
                f"roots for {ct}, expected {expected}"
            )
        self.num_positive_roots = expected

    # -- construction ------------------------------------------------------

    def _close_roots(self):
        n = self.rank
        M = self.cartan_matrix
        seen = {_unit(n, j) for j in range(n)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for m in frontier:
                omega_i = [sum(M[i][j] * m[j] for j in range(n)) for i in range(n)]
                for i in range(n):
                    m2 = list(m)
                    m2[i] -= omega_i[i]
                    m2 = tuple(m2)
                    if m2 not in seen:
                        seen.add(m2)
                        nxt.append(m2)
            frontier = nxt

        def make_root(m: tuple) -> Root:
            omega = tuple(sum(M[i][j] * m[j] for j in range(n)) for i in range(n))
            lsq = _norm_coeff(
                sum(
                    Fraction(m[i]) * omega[i] * self.simple_length_sq[i]
                    for i in range(n)
                )
                / 2
            )
            cvec = tuple(
                _norm_coeff(Fraction(m[i]) * self.simple_length_sq[i] / lsq)
                for i in range(n)
            )
            return Root(m, omega, lsq, cvec)

        positives = sorted(
            (m for m in seen if all(x >= 0 for x in m)), key=lambda m: (sum(m), m)
        )
        self.positive_roots = tuple(make_root(m) for m in positives)
        self.simple_roots = tuple(
            make_root(_unit(n, j)) for j in range(n)
        )
        self.all_roots = tuple(make_root(m) for m in sorted(seen))
        self._by_omega = {r.omega: r for r in self.all_roots}

    # -- lookups -----------------------------------------------------------

    def root_by_omega(self, omega: Weight) -> Root:
        r = self._by_omega.get(tuple(omega))
        if r is None:
            raise NotARootError(f"{tuple(omega)} is not a root of {self.cartan_type}")
        return r

    def is_root(self, omega: Weight) -> bool:
        return tuple(omega) in self._by_omega

    def simple_root(self, i: int) -> Root:
        """The i-th simple root, 1-based."""
        if not 1 <= i <= self.rank:
            raise OutOfRangeError(f"simple root index {i} out of range")
        return self.simple_roots[i - 1]

    @property
    def num_t_classes(self) -> int:
        return len(self.t_vectors)

    @property
    def t_basis(self) -> tuple:
        """All degree-2 t-classes, including the extra class t for F4."""
        if self.extra_t is not None:
            return self.t_vectors + (self.extra_t,)
        return self.t_vectors

    def t_weight(self, i: int) -> Weight:
        """The class t_i (1-based) in weight coordinates."""
        if not 1 <= i <= self.num_t_classes:
            raise OutOfRangeError(f"t-class index {i} out of range")
        return self.t_vectors[i - 1]

    def t_poly(self, i: int) -> Polynomial:
        return Polynomial.linear_form(self.t_weight(i))

    def extra_t_poly(self) -> Polynomial:
        if self.extra_t is None:
            raise OutOfRangeError(f"type {self.cartan_type} has no extra class t")
        return Polynomial.linear_form(self.extra_t)

    def degree2_lattice_basis(self, variant: str) -> tuple:
        """Weight-coordinate basis of the degree-2 lattice for a group form.

        ``simply_connected`` uses the fundamental weights, ``special_orthogonal``
        the span of the t-classes.
        """
        if variant == "simply_connected":
            return self.fundamental_weights
        if variant == "special_orthogonal":
            return self.t_basis
        raise ValueError(f"unknown variant {variant!r}")

    def __repr__(self):
        return f"RootDatum({self.cartan_type})"


def build_root_datum(ct: CartanType) -> RootDatum:
    """Construct the root datum for a supported Cartan type."""
    return RootDatum(ct)


def coroot_pairing(datum: RootDatum, beta: Root, lam: Weight) -> Rational:
    """Pairing (beta^vee | lam) of a coroot with a weight, exact.

    Integral whenever ``lam`` has integer coordinates; this is checked.
    """
    if not datum.is_root(beta.omega):
        raise NotARootError(f"{beta} is not a root of {datum.cartan_type}")
    val = _norm_coeff(
        sum(Fraction(c) * x for c, x in zip(beta.coroot_on_omega, lam))
    )
    if all(isinstance(x, int) for x in lam) and not isinstance(val, int):
        raise AssertionError(
            f"coroot pairing {val} is not an integer on a lattice weight"
        )
    return val


def elem_sym_t(datum: RootDatum, l: int, m: int) -> Polynomial:
    """Elementary symmetric polynomial e_l(t_1, ..., t_m) in weight variables."""
    if not 1 <= m <= datum.num_t_classes:
        raise OutOfRangeError(f"m={m} out of range for {datum.cartan_type}")
    if not 0 <= l <= m:
        raise OutOfRangeError(f"l={l} out of range for m={m}")
    n = datum.rank
    # e[j] accumulates e_j(t_1, ..., t_i) while i runs over the first m classes.
    e = [Polynomial.one(n)] + [Polynomial.zero(n) for _ in range(l)]
    for i in range(1, m + 1):
        t = datum.t_poly(i)
        for j in range(min(i, l), 0, -1):
            e[j] = e[j] + e[j - 1] * t
    return e[l]
