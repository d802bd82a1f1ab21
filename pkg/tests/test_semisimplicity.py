import random
from fractions import Fraction

import pytest

from diagram_gram.polynomials import Poly
from diagram_gram.semisimplicity import admissible_profiles, global_poly, verdict


def test_partition_k1_global_poly():
    result, records = global_poly("partition", 1)
    assert result.poly == Poly.x()
    assert {(rec.s1, rec.s2) for rec in records} == {(0, 0)}


def test_global_poly_is_monic():
    for algebra in ("partition", "z2", "signed"):
        for k in (1, 2, 3):
            result, _ = global_poly(algebra, k)
            assert result.poly.is_monic()
            assert result.poly.is_integral()


def test_symbolic_parameter_is_semisimple():
    for algebra in ("partition", "z2", "signed"):
        v = verdict(algebra, 2, None)
        assert v.semisimple and not v.witnesses


def test_float_rejected():
    with pytest.raises(TypeError):
        verdict("partition", 2, 2.0)


def test_partition_k2_at_one():
    v = verdict("partition", 2, 1)
    assert not v.semisimple
    assert any("x-1" in w[2] or "x^2-x" in w[2] for w in v.witnesses)


def test_headline_case_z2_k4_q2():
    v = verdict("z2", 4, 2)
    assert not v.semisimple
    assert any(w[2] == "x^2-x-2" for w in v.witnesses)


def test_signed_k3_q2_not_semisimple():
    v = verdict("signed", 3, 2)
    assert not v.semisimple
    assert any(w[2] == "x^2-x-2" for w in v.witnesses)


def test_factor_scan_agrees_with_full_evaluation():
    rng = random.Random(2024)
    for algebra in ("partition", "z2", "signed"):
        for k in (1, 2, 3):
            result, _ = global_poly(algebra, k)
            for _ in range(50):
                q = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
                v = verdict(algebra, k, q)
                assert v.semisimple == (result.poly.eval_at(q) != 0), (algebra, k, q)


def test_large_integer_parameters_are_semisimple():
    for algebra in ("partition", "z2", "signed"):
        for k in (1, 2, 3):
            for q in range(2 * k, 2 * k + 5):
                assert verdict(algebra, k, q).semisimple


def test_admissible_profiles_windows():
    assert admissible_profiles("partition", 2) == ((0, 0), (1, 0), (2, 0))
    assert (2, 1) not in admissible_profiles("signed", 3)
    assert (2, 1) in admissible_profiles("z2", 3)


def test_verdict_json_shape():
    v = verdict("z2", 2, Fraction(1, 2))
    payload = v.to_json()
    assert payload["q"] == "1/2"
    assert isinstance(payload["witnesses"], list)
    assert payload["caveat"]
