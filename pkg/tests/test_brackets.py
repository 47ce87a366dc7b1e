"""Tabulated bracket identities: every line must verify numerically; garbled
lines carry notes and the fitter can recover the correct expression."""

import pytest

from cliffalg.algebra import Signature
from cliffalg.brackets import (
    BracketLaw,
    bracket_laws,
    check_all_laws,
    check_law,
    evaluate_terms,
    fit_law,
    format_terms,
)
from cliffalg.structure import ANTICOMMUTATOR, COMMUTATOR


def test_table_sizes():
    assert len(bracket_laws(1)) == 2
    assert len(bracket_laws(2)) == 8
    assert len(bracket_laws(3)) == 18
    assert len(bracket_laws(4)) == 32
    assert len(bracket_laws(5)) == 50
    with pytest.raises(ValueError):
        bracket_laws(6)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_all_lines_verify(n):
    results = check_all_laws(n, trials=40, seed=7)
    bad = [r for r in results if not r.ok]
    assert not bad, [(r.law.case_id, r.max_residual) for r in bad]


def test_single_signature_restriction():
    law = next(l for l in bracket_laws(3)
               if l.bracket == COMMUTATOR and (l.k, l.l) == (1, 1))
    result = check_law(law, trials=20, seed=0, eps=1e-9, signatures=[Signature(0, 3)])
    assert result.ok


def test_fitter_recovers_known_law():
    fitted = fit_law(2, COMMUTATOR, 1, 1, trials=15, seed=3)
    assert fitted == "2 U^V"


def test_fitter_on_deliberately_wrong_line():
    wrong = BracketLaw(3, ANTICOMMUTATOR, 1, 2, (("wedge", -2),))
    result = check_law(wrong, trials=10, seed=0, eps=1e-9)
    assert not result.ok
    assert fit_law(3, ANTICOMMUTATOR, 1, 2, trials=15, seed=0) == "2 U^V"


def test_garbled_lines_carry_notes():
    noted = [l for l in bracket_laws(2) if l.note]
    assert len(noted) == 8  # the whole n=2 block is reconstructed
    n5_noted = [l for l in bracket_laws(5) if l.note]
    assert any("Hodge identification" in l.note for l in n5_noted)
    assert any("antisymmetry" in l.note for l in n5_noted)


def test_com_line_is_ill_typed_outside_grade2():
    # evaluating Com on grade-3 inputs must raise, not silently compute
    import numpy as np

    from cliffalg.algebra import random_multivector

    sig = Signature(5, 0)
    rng = np.random.default_rng(0)
    u = random_multivector(sig, rng, grade=3)
    v = random_multivector(sig, rng, grade=3)
    with pytest.raises(ValueError):
        evaluate_terms((("com", 1),), u, v)


def test_format_terms():
    assert format_terms(()) == "0"
    assert format_terms((("wedge", 2), ("sws", -2))) == "2 U^V - 2 star(U^starV) rho"
    assert format_terms((("com", 1),)) == "Com(U,V)"
