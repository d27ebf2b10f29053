import json
import os
from fractions import Fraction

import pytest

import hyperwall as hw

H = [1, 1] + [0] * 21
DELTA = [0] * 22 + [1]
BASIS = [H, DELTA]
G = [3, -1]


def test_lattice():
    assert hw.AMBIENT_RANK == 23
    assert hw.basis_labels()[-1] == "delta"
    assert hw.signature_of(hw.ambient_gram())[:2] == (3, 20)
    assert hw.bb_pair(DELTA, DELTA) == -2
    assert hw.divisibility(DELTA) == 2
    assert hw.basis_vector("delta") == DELTA
    assert hw.admissible_square_div(-4, 2) is False


def test_walls_and_verdicts():
    walls = hw.enumerate_walls(BASIS, G, m=[1, 0])
    assert [w["picard"] for w in walls] == [[0, 1]]
    planes = hw.enumerate_walls(BASIS, G, targets=[(-10, 2)], level_cap=100)
    assert [w["picard"] for w in planes] == [[2, -3], [2, 3]]
    assert hw.brute_force_walls(BASIS, G, 10, m=[2, 1]) == hw.enumerate_walls(BASIS, G, m=[2, 1])

    verdict = hw.is_ample(BASIS, G, [2, 1])
    assert verdict["status"] == "not_nef"
    assert [w["picard"] for w in verdict["witnesses"]] == [[0, 1]]
    tau, crossed = hw.nef_threshold(BASIS, G, [2, 1])
    assert tau == Fraction(1, 2)
    assert [w["picard"] for w in crossed] == [[0, 1]]


def test_errors():
    with pytest.raises(hw.PreconditionError):
        hw.enumerate_walls(BASIS, G)
    with pytest.raises(hw.PreconditionError):
        hw.is_ample(BASIS, [1, 0], [2, 1])
    with pytest.raises(hw.ValidationError):
        hw.bb_pair([1, 2], DELTA)
    assert issubclass(hw.ValidationError, ValueError)


def test_classification_and_cohomology():
    assert hw.classify_wall(DELTA)["dual_square"] == Fraction(-1, 2)
    assert hw.classify_square_div(-4, 2)["kind"] == "inadmissible"
    assert hw.quad_product(H, H, H, H) == 12
    assert hw.c2_pair(DELTA, DELTA) == -60
    assert hw.fujiki_check([5] * 23)
    qq = hw.middle_pair(BASIS, [[0, 0], [0, 0]], 1, [[0, 0], [0, 0]], 1)
    assert qq == 575

    sys = hw.lagrangian_solver()
    assert sys["eliminant"] == "23x^2+20x-2100=0"
    first = sys["solutions"][0]
    assert (first["lambda_square"], first["a"], first["b"]) == (-10, Fraction(1, 20), Fraction(1, 8))
    lam = [2, 2] + [0] * 20 + [3]
    assert hw.line_class_of_plane(lam)[2] == Fraction(-5, 2)


def test_report_round_trip():
    fixtures = os.environ.get("HYPERWALL_TEST_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "fixtures"))
    with open(os.path.join(fixtures, "rank2.json")) as f:
        doc = json.load(f)
    rep = hw.report("nef-threshold", doc)
    assert rep["result"]["tau"] == "1/2"
    assert hw.rerun(rep) == rep


def test_version():
    assert hw.__version__ == "0.1.0"
