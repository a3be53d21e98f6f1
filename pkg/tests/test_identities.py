import random
from fractions import Fraction

import pytest

from simplex_grid_opt import (
    HypergeomParams,
    IdentityName,
    a_beta,
    a_beta_sum_identity,
    compositions,
    falling,
    moment_decomposition_check,
    scaled_moment,
    stirling2,
    verify_identity,
)
from simplex_grid_opt.identities import (
    run_default_sweeps,
    sweep_a_beta,
    sweep_integer_point_identities,
    sweep_kmr,
    sweep_moment_decomposition,
    sweep_phi,
    sweep_sigma,
    sweep_stirling_multi,
    sweep_stirling_sum,
)


def test_a_beta_spec_example_value():
    # n=2, d=2, r=2, m=3, counts=(1,2), beta=(2,0):
    # 2*(falling(1,2) - 1) + falling(2,1)*falling(1,1)*falling(1,1)*S(2,1) = -2 + 4 = 2
    value = a_beta((2, 0), 2, 3, (1, 2))
    assert value == 2
    assert value >= 0


def test_a_beta_worked_paper_urn():
    # hand-computed for the m=16, counts=(7,9), r=2 urn
    assert a_beta((2, 0), 2, 16, (7, 9)) == 196
    assert a_beta((0, 2), 2, 16, (7, 9)) == 252
    assert a_beta((1, 1), 2, 16, (7, 9)) == 0


def test_a_beta_single_variable_collapse():
    # with all weight on one coordinate, the term matches the Stirling sum form
    for d in (2, 3, 4):
        for m in range(d, 9):
            for r in range(1, m + 1):
                beta = (d, 0)
                counts = (m, 0)
                expected = falling(r, d) * (falling(m, d) - m**d) + falling(m, d) * sum(
                    falling(r, k) * stirling2(d, k) for k in range(1, d)
                )
                assert a_beta(beta, r, m, counts) == expected
                # by the Stirling sum identity this equals the full closed form
                assert expected == r**d * falling(m, d) - falling(r, d) * m**d


def test_a_beta_zero_count_kills_terms():
    # any beta_i >= 1 with counts_i = 0 zeroes both products
    assert a_beta((1, 1), 2, 4, (0, 4)) == 0
    assert a_beta((2, 1), 3, 5, (0, 5)) == 0


def test_a_beta_constraint_validation():
    with pytest.raises(ValueError):
        a_beta((1, 1), 3, 2, (1, 1))  # r > m
    with pytest.raises(ValueError):
        a_beta((2, 2), 2, 3, (1, 2))  # m < d
    with pytest.raises(ValueError):
        a_beta((1, 1), 1, 3, (1, 1))  # counts sum mismatch


def test_a_beta_sum_identity_cases():
    check = a_beta_sum_identity(2, 3, 2, (1, 2))
    assert check.holds and check.lhs == check.rhs == 6

    # r = m makes the closed form vanish
    check = a_beta_sum_identity(4, 4, 3, (2, 1, 1))
    assert check.holds and check.rhs == 0

    # degree one always vanishes
    check = a_beta_sum_identity(2, 5, 1, (2, 3))
    assert check.holds and check.rhs == 0


def test_vandermonde_chu_example():
    check = verify_identity(IdentityName.VANDERMONDE_CHU, x=(2, 3), d=2)
    assert check.holds and check.lhs == check.rhs == 20


def test_multinomial_theorem_example():
    check = verify_identity("MULTINOMIAL", x=(2, -1, 3), d=3)
    assert check.holds and check.lhs == 64


def test_stirling_sum_example():
    check = verify_identity(IdentityName.STIRLING_SUM, d=3, r=4)
    assert check.holds and check.lhs == check.rhs == 40


def test_stirling_multi_small_case():
    check = verify_identity(IdentityName.STIRLING_MULTI, alpha=(1, 0), d=2)
    assert check.holds and check.lhs == stirling2(2, 1)
    with pytest.raises(ValueError):
        verify_identity(IdentityName.STIRLING_MULTI, alpha=(2, 1), d=2)


def test_kmr_example_and_degenerate_window():
    check = verify_identity(IdentityName.KMR, k=2, m=3, r=4)
    assert check.holds
    assert check.lhs == Fraction(2, 5)
    assert check.rhs == Fraction(3, 4)
    degenerate = verify_identity(IdentityName.KMR, k=1, m=1, r=1)
    assert degenerate.holds and degenerate.lhs == 0
    with pytest.raises(ValueError):
        verify_identity(IdentityName.KMR, k=2, m=3, r=3)  # outside the window


def test_sigma_hand_value():
    check = verify_identity(IdentityName.SIGMA, d=2, m=3, k=2, r=4)
    assert check.holds
    assert check.lhs == Fraction(1, 10)
    assert check.rhs == Fraction(3, 16)


def test_phi_hand_value():
    check = verify_identity(IdentityName.PHI, k=2, m=3, r=4)
    assert check.holds and check.lhs == 44
    with pytest.raises(ValueError):
        verify_identity(IdentityName.PHI, k=1, m=3, r=3)


def test_moment_decomposition_matches_scaled_moment():
    p = HypergeomParams(m=16, counts=(7, 9), r=2)
    for beta in ((2, 0), (1, 1), (0, 2)):
        check = moment_decomposition_check(p, beta)
        assert check.holds
        assert check.lhs == scaled_moment(p, beta)


def test_sweeps_all_hold_at_reduced_caps():
    groups = [
        sweep_stirling_sum(max_d=5, max_r=12),
        sweep_stirling_multi(max_n=2, max_d=4),
        sweep_integer_point_identities(samples=10, seed=3),
        sweep_kmr(limit=12),
        sweep_sigma(max_d=4, max_m=8, max_k=3),
        sweep_phi(max_k=3, max_m=6),
        sweep_a_beta(max_n=2, max_d=3, max_m=6),
        sweep_moment_decomposition(max_n=2, max_d=2, max_m=5),
    ]
    for checks in groups:
        assert checks, "sweep produced no checks"
        assert all(c.holds for c in checks)


def test_run_default_sweeps_structure():
    checks = run_default_sweeps(max_n=2, max_d=2, max_m=4, max_k=2, max_r=6, samples=5)
    names = {c.name for c in checks}
    assert {
        "STIRLING_SUM",
        "STIRLING_MULTI",
        "VANDERMONDE_CHU",
        "MULTINOMIAL",
        "KMR",
        "SIGMA",
        "PHI",
        "A_BETA_NONNEG",
        "A_BETA_SUM",
        "MOMENT_DECOMPOSITION",
    } <= names
    assert all(c.holds for c in checks)


def test_a_beta_nonneg_exhaustive_small():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 3)
        d = rng.randint(1, 3)
        m = rng.randint(d, 7)
        counts = rng.choice(list(compositions(n, m)))
        r = rng.randint(1, m)
        for beta in compositions(n, d):
            assert a_beta(beta, r, m, counts) >= 0
