from fractions import Fraction

import pytest

from flagcalc.errors import NotARootError, OutOfRangeError, UnsupportedRankError
from flagcalc.polyring import Polynomial
from flagcalc.rootdata import (
    build_root_datum,
    cartan_type,
    coroot_pairing,
    elem_sym_t,
)


def test_rank_constraints():
    with pytest.raises(UnsupportedRankError):
        cartan_type("B", 1)
    with pytest.raises(UnsupportedRankError):
        cartan_type("D", 3)
    with pytest.raises(UnsupportedRankError):
        cartan_type("G2", 3)
    with pytest.raises(UnsupportedRankError):
        cartan_type("F4", 5)
    with pytest.raises(UnsupportedRankError):
        cartan_type("E8", 8)
    assert cartan_type("B", 2).name == "B2"
    assert cartan_type("G2").name == "G2"


@pytest.mark.parametrize(
    "family,rank,expected",
    [("B", 2, 4), ("B", 3, 9), ("B", 5, 25), ("D", 4, 12), ("D", 5, 20),
     ("G2", 2, 6), ("F4", 4, 24)],
)
def test_positive_root_counts(family, rank, expected):
    d = build_root_datum(cartan_type(family, rank))
    assert d.num_positive_roots == expected
    assert len(d.positive_roots) == expected
    assert len(d.all_roots) == 2 * expected


def test_cartan_matrix_columns_are_simple_roots():
    for family, rank in (("B", 4), ("D", 5), ("G2", 2), ("F4", 4)):
        d = build_root_datum(cartan_type(family, rank))
        M = d.cartan_matrix
        for j in range(d.rank):
            col = tuple(M[i][j] for i in range(d.rank))
            assert d.simple_roots[j].omega == col
        for i in range(d.rank):
            assert M[i][i] == 2
            assert all(M[i][j] <= 0 for j in range(d.rank) if j != i)


def test_t_basis_b3():
    d = build_root_datum(cartan_type("B", 3))
    assert d.t_vectors == ((1, 0, 0), (-1, 1, 0), (0, -1, 2))


def test_t_basis_g2():
    d = build_root_datum(cartan_type("G2"))
    assert d.t_weight(1) == (-1, 0)
    assert d.t_weight(2) == (-1, 1)
    assert d.t_weight(3) == (2, -1)


def test_t_basis_f4():
    d = build_root_datum(cartan_type("F4"))
    assert d.t_vectors == (
        (0, 0, 0, -1),
        (1, 0, 0, -1),
        (-1, 1, 0, -1),
        (0, -1, 2, -1),
    )
    assert d.extra_t == (0, 0, 1, -2)
    # t = c_1 / 2
    c1 = elem_sym_t(d, 1, 4)
    assert c1 == d.extra_t_poly() * 2


def test_t_basis_d5():
    d = build_root_datum(cartan_type("D", 5))
    assert d.t_weight(4) == (0, 0, -1, 1, 1)
    assert d.t_weight(5) == (0, 0, 0, -1, 1)


def test_simple_roots_in_t_coordinates_bd():
    # alpha_i = t_i - t_{i+1} for i < n; alpha_n = t_n (B) or t_{n-1} + t_n (D)
    for family, rank in (("B", 4), ("D", 4)):
        d = build_root_datum(cartan_type(family, rank))
        ts = [d.t_weight(i) for i in range(1, rank + 1)]
        for i in range(rank - 1):
            want = tuple(a - b for a, b in zip(ts[i], ts[i + 1]))
            assert d.simple_roots[i].omega == want
        if family == "B":
            assert d.simple_roots[rank - 1].omega == ts[rank - 1]
        else:
            want = tuple(a + b for a, b in zip(ts[rank - 2], ts[rank - 1]))
            assert d.simple_roots[rank - 1].omega == want


def test_fundamental_weights_in_t_coordinates_b():
    # omega_i = t_1 + ... + t_i for i < n; omega_n = (t_1 + ... + t_n)/2
    n = 4
    d = build_root_datum(cartan_type("B", n))
    ts = [d.t_weight(i) for i in range(1, n + 1)]
    for i in range(1, n):
        want = tuple(sum(t[r] for t in ts[:i]) for r in range(n))
        assert d.fundamental_weights[i - 1] == want
    want = tuple(Fraction(sum(t[r] for t in ts), 2) for r in range(n))
    assert tuple(Fraction(x) for x in d.fundamental_weights[n - 1]) == want


def test_f4_positive_roots_match_t_multiset_up_to_sign():
    # The classical list {t_i +- t_j, t_i, (t_1 +- t_2 +- t_3 +- t_4)/2} agrees
    # with the reflection closure root by root, up to the sign of each root.
    d = build_root_datum(cartan_type("F4"))
    ts = [d.t_weight(i) for i in range(1, 5)]

    def comb(coeffs):
        return tuple(
            sum(Fraction(c) * t[r] for c, t in zip(coeffs, ts)) for r in range(4)
        )

    classical = []
    for i in range(4):
        for j in range(i + 1, 4):
            for sj in (1, -1):
                coeffs = [0] * 4
                coeffs[i], coeffs[j] = 1, sj
                classical.append(comb(coeffs))
    for i in range(4):
        coeffs = [0] * 4
        coeffs[i] = 1
        classical.append(comb(coeffs))
    for s2 in (1, -1):
        for s3 in (1, -1):
            for s4 in (1, -1):
                classical.append(
                    comb([Fraction(1, 2), Fraction(s2, 2), Fraction(s3, 2), Fraction(s4, 2)])
                )
    assert len(classical) == 24

    def normalize(v):
        for x in v:
            if x:
                return v if x > 0 else tuple(-y for y in v)
        return v

    ours = sorted(normalize(tuple(Fraction(x) for x in r.omega)) for r in d.positive_roots)
    theirs = sorted(normalize(v) for v in classical)
    assert ours == theirs


def test_root_lengths_normalized():
    d = build_root_datum(cartan_type("G2"))
    lengths = sorted({r.length_sq for r in d.positive_roots})
    assert lengths == [Fraction(2, 3), 2]
    d = build_root_datum(cartan_type("F4"))
    assert sorted({r.length_sq for r in d.positive_roots}) == [1, 2]
    d = build_root_datum(cartan_type("B", 3))
    assert sorted({r.length_sq for r in d.positive_roots}) == [1, 2]
    d = build_root_datum(cartan_type("D", 4))
    assert sorted({r.length_sq for r in d.positive_roots}) == [2]


class TestCorootPairing:
    def test_delta_ij_on_simples(self):
        d = build_root_datum(cartan_type("F4"))
        for i in range(1, 5):
            for j in range(1, 5):
                val = coroot_pairing(d, d.simple_root(i), d.fundamental_weights[j - 1])
                assert val == (1 if i == j else 0)

    def test_zero_weight(self):
        d = build_root_datum(cartan_type("B", 3))
        for beta in d.positive_roots:
            assert coroot_pairing(d, beta, (0, 0, 0)) == 0

    def test_f4_highest_root(self):
        # Brute force: the highest root maximizes the simple-coordinate sum.
        # Its coroot pairings with the fundamental weights are the comarks
        # (2, 3, 2, 1), whose sum plus one gives the dual Coxeter number 9.
        d = build_root_datum(cartan_type("F4"))
        theta = max(d.positive_roots, key=lambda r: sum(r.simple_coords))
        assert theta.simple_coords == (2, 3, 4, 2)
        comarks = tuple(
            coroot_pairing(d, theta, om) for om in d.fundamental_weights
        )
        assert comarks == (2, 3, 2, 1)
        assert sum(comarks) + 1 == 9

    def test_positive_pairings_with_weights(self):
        for family, rank in (("B", 4), ("D", 4), ("G2", 2), ("F4", 4)):
            d = build_root_datum(cartan_type(family, rank))
            for beta in d.positive_roots:
                for omega in d.fundamental_weights:
                    val = coroot_pairing(d, beta, omega)
                    assert isinstance(val, int) and val >= 0

    def test_not_a_root(self):
        d = build_root_datum(cartan_type("B", 2))
        fake = d.positive_roots[0]
        d2 = build_root_datum(cartan_type("G2"))
        with pytest.raises(NotARootError):
            coroot_pairing(d2, fake, (0, 0))


class TestElemSym:
    def test_c0_is_one(self):
        d = build_root_datum(cartan_type("B", 3))
        for m in (1, 2, 3):
            assert elem_sym_t(d, 0, m) == Polynomial.one(3)

    def test_g2_c3(self):
        d = build_root_datum(cartan_type("G2"))
        want = Polynomial(
            2, {(3, 0): 2, (2, 1): -3, (1, 2): 1}
        )
        assert elem_sym_t(d, 3, 3) == want

    def test_f4_c1_equals_2t(self):
        d = build_root_datum(cartan_type("F4"))
        assert elem_sym_t(d, 1, 4) == Polynomial.linear_form((0, 0, 2, -4))

    def test_out_of_range(self):
        d = build_root_datum(cartan_type("B", 3))
        with pytest.raises(OutOfRangeError):
            elem_sym_t(d, 4, 3)
        with pytest.raises(OutOfRangeError):
            elem_sym_t(d, 1, 4)
        with pytest.raises(OutOfRangeError):
            elem_sym_t(d, -1, 2)
