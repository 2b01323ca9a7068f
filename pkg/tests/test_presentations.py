import json

import pytest

from flagcalc.errors import OutOfRangeError
from flagcalc.presentations import (
    borel_presentation,
    degree2_generator_images,
    expected_degree2_table,
    gamma_expansion,
    gamma_word,
    verify_presentations,
)
from flagcalc.rootdata import cartan_type
from flagcalc.schubert import SchubertExpansion

from conftest import word


def expansion(calc, table):
    return SchubertExpansion(
        len(next(iter(table))), {word(calc, w): c for w, c in table.items()}
    )


class TestGammaExpansion:
    def test_b4_gamma2(self, calc_b4):
        assert gamma_expansion(calc_b4, 2) == expansion(calc_b4, {"34": 1})

    def test_d4_gamma1(self, calc_d4):
        assert gamma_expansion(calc_d4, 1) == expansion(calc_d4, {"4": 1})

    def test_d4_gamma3(self, calc_d4):
        assert gamma_expansion(calc_d4, 3) == expansion(calc_d4, {"124": 1})

    def test_g2_gamma3(self, calc_g2):
        assert gamma_expansion(calc_g2, 3) == expansion(calc_g2, {"121": -1})

    def test_f4_gamma3(self, calc_f4):
        want = expansion(calc_f4, {"123": 1, "234": -1, "243": -2, "343": 3})
        assert gamma_expansion(calc_f4, 3) == want

    def test_f4_gamma4(self, calc_f4):
        want = expansion(
            calc_f4,
            {"1234": 1, "1243": -10, "1323": 4, "3234": -1, "3243": 10, "4323": -8},
        )
        assert gamma_expansion(calc_f4, 4) == want

    def test_missing_gamma_rejected(self, calc_g2, calc_d4):
        with pytest.raises(OutOfRangeError):
            gamma_expansion(calc_g2, 2)
        with pytest.raises(OutOfRangeError):
            gamma_expansion(calc_d4, 4)

    def test_gamma_words(self):
        assert gamma_word(cartan_type("B", 4), 2) == (3, 4)
        assert gamma_word(cartan_type("B", 4), 4) == (1, 2, 3, 4)
        assert gamma_word(cartan_type("D", 5), 1) == (5,)
        assert gamma_word(cartan_type("D", 5), 3) == (2, 3, 5)


class TestDegree2Images:
    @pytest.mark.parametrize(
        "fixture", ["calc_b3", "calc_b4", "calc_d4", "calc_d5", "calc_g2", "calc_f4"]
    )
    def test_match_displayed_equations(self, fixture, request):
        calc = request.getfixturevalue(fixture)
        got = degree2_generator_images(calc)
        for sym, table in expected_degree2_table(calc.cartan_type).items():
            assert got[sym] == expansion(calc, table), sym

    def test_b_top_class(self, calc_b4):
        got = degree2_generator_images(calc_b4)
        assert got["t4"] == expansion(calc_b4, {"3": -1, "4": 2})

    def test_d_top_classes(self, calc_d5):
        got = degree2_generator_images(calc_d5)
        assert got["t4"] == expansion(calc_d5, {"3": -1, "4": 1, "5": 1})
        assert got["t5"] == expansion(calc_d5, {"4": -1, "5": 1})

    def test_f4_t3(self, calc_f4):
        got = degree2_generator_images(calc_f4)
        assert got["t3"] == expansion(calc_f4, {"1": -1, "2": 1, "4": -1})


class TestBorelPresentationShape:
    def test_b3_counts_and_degrees(self):
        p = borel_presentation(cartan_type("B", 3))
        assert [c for _, c in p.generators] == [1, 1, 1, 1, 2, 3]
        assert [d for _, d in p.relations] == [1, 2, 3, 2, 4, 6]

    def test_d4_counts(self):
        p = borel_presentation(cartan_type("D", 4))
        # generators t1..t4, g1..g3; relations c_i - 2g_i (3), c_4, quadratics (3)
        assert len(p.generators) == 7
        assert len(p.relations) == 7

    def test_g2_shape(self):
        p = borel_presentation(cartan_type("G2"))
        assert [d for _, d in p.relations] == [1, 2, 3, 6]

    def test_f4_shape(self):
        p = borel_presentation(cartan_type("F4"))
        assert [d for _, d in p.relations] == [1, 2, 3, 4, 6, 8, 12]


class TestVerifyPaper:
    def test_g2_all_pass(self):
        rep = verify_presentations("G2")
        assert rep.all_passed, [c.name for c in rep.failures()]
        names = [c.name for c in rep.checks]
        assert "gamma_3 expansion" in names
        assert "rho6: gamma3^2 = 0" in names

    def test_f4_all_pass(self):
        rep = verify_presentations("F4")
        assert rep.all_passed, [c.name for c in rep.failures()]
        delta_rows = [c for c in rep.checks if c.name.startswith("Delta_")]
        assert len(delta_rows) == 16 + 25

    def test_b3_all_pass(self):
        rep = verify_presentations("B", 3)
        assert rep.all_passed, [c.name for c in rep.failures()]
        assert any("c_3 = 2*Z_123" in c.name for c in rep.checks)

    def test_b_sweep_all_pass(self):
        rep = verify_presentations("B")
        assert rep.all_passed, [c.name for c in rep.failures()]
        assert any(c.name.startswith("B2:") for c in rep.checks)
        assert any(c.name.startswith("B5:") for c in rep.checks)

    def test_d_sweep_all_pass(self):
        rep = verify_presentations("D")
        assert rep.all_passed, [c.name for c in rep.failures()]

    def test_report_json_and_table(self):
        rep = verify_presentations("G2")
        payload = rep.to_json_dict()
        assert payload["all_passed"] is True
        assert len(payload["checks"]) == len(rep.checks)
        json.dumps(payload)  # serializable
        table = rep.to_table()
        assert "PASS" in table.splitlines()[0]
        assert len(table.splitlines()) == len(rep.checks) + 1

    def test_corrupted_table_fails(self, monkeypatch):
        import flagcalc.presentations as pres

        monkeypatch.setitem(pres.F4_DELTA_C3, "243", -5)
        rep = verify_presentations("F4")
        assert not rep.all_passed
        assert any("Delta_243" in c.name for c in rep.failures())
