#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include <thetaform/error.hpp>
#include <thetaform/numeric.hpp>

using namespace thetaform;

namespace
{

constexpr double pi = std::numbers::pi;

complex_t theta(int j, complex_t tau)
{
    return eval_theta(j, tau).value;
}

double rel(complex_t a, complex_t b)
{
    return std::abs(a - b) / std::abs(b);
}

// theta2 by brute-force summation over all integers n of q^((n+1/2)^2).
complex_t theta2_brute(complex_t tau)
{
    complex_t s = 0;
    for (int n = -60; n <= 60; ++n) {
        const double e = (n + 0.5) * (n + 0.5);
        s += std::exp(complex_t(0, pi * e) * tau);
    }
    return s;
}

} // namespace

TEST_CASE("theta values")
{
    const complex_t t1(0.3, 0.8);
    CHECK(rel(std::pow(theta(2, t1), 4.0) + std::pow(theta(4, t1), 4.0), std::pow(theta(3, t1), 4.0)) < 1e-10);
    const complex_t t2(0.2, 1.1);
    CHECK(rel(theta(2, t2 + 1.0), std::exp(complex_t(0, pi / 4)) * theta(2, t2)) < 1e-10);
    const complex_t t3(0.1, 0.9);
    CHECK(rel(theta(2, -1.0 / t3), std::sqrt(complex_t(0, -1) * t3) * theta(4, t3)) < 1e-9);
    CHECK(rel(theta(2, t3), theta2_brute(t3)) < 1e-12);

    std::mt19937_64 rng(20261014);
    for (int i = 0; i < 100; ++i) {
        const complex_t t = random_tau(rng, 0.3, 2.0);
        CHECK(rel(std::pow(theta(2, t), 4.0) + std::pow(theta(4, t), 4.0), std::pow(theta(3, t), 4.0)) < 1e-9);
    }

    CHECK_THROWS_AS(eval_theta(2, complex_t(0, 0.01)), convergence_too_slow);
    CHECK_NOTHROW(eval_theta(2, complex_t(0, 0.01), 1e-17, 0.005));
    CHECK_THROWS_AS(eval_theta(1, complex_t(0, 1)), invalid_argument);
    CHECK_THROWS_AS(eval_theta(3, complex_t(0, -1)), invalid_argument);
    CHECK(eval_theta(3, complex_t(0, 1)).terms > 0);
}

TEST_CASE("domain types")
{
    CHECK_THROWS_AS(ComplexPoint(0, 0), invalid_argument);
    CHECK_THROWS_AS(SL2Matrix(1, 1, 1, 1), invalid_argument);
    CHECK(gen_t * gen_s == SL2Matrix(-1, 1, -2, 1));
    CHECK(to_string(gen_s) == "(1,0;-2,1)");
}

TEST_CASE("psi multiplier")
{
    CHECK(psi_multiplier(gen_t) == 2);
    CHECK(psi_multiplier(gen_s) == 0);
    CHECK(phase(2) == complex_t(0, 1));
    CHECK_THROWS_AS(psi_multiplier(SL2Matrix(0, -1, 1, 0)), odd_c);
    // b even, d odd, c = 0 mod 4, bd + d - 1 = 0 mod 4.
    CHECK(psi_multiplier(SL2Matrix(1, 0, 4, 1)) == 0);
    CHECK(psi_multiplier(SL2Matrix(3, -2, 8, -5)) == 0);

    const complex_t t(0.2, 1.0);
    CHECK(transform_check(gen_t, t, 2).pass);
    CHECK(transform_check(gen_s, complex_t(0.25, 0.9), 8).pass);
    CHECK_THROWS_AS(transform_check(gen_t, t, 3), invalid_argument);
    CHECK_THROWS_AS(transform_check(gen_t, complex_t(0, 0.01), 2), convergence_too_slow);
}

TEST_CASE("psi on random words agrees with the extracted phase")
{
    std::mt19937_64 rng(7);
    int words = 0;
    while (words < 50) {
        const SL2Matrix w = random_gamma0_2_word(rng, 6);
        complex_t tau;
        if (!random_tau_for(rng, w, tau)) {
            continue;
        }
        ++words;
        CAPTURE(to_string(w));
        double err = 1;
        CHECK(extract_phase(w, tau, &err) == psi_multiplier(w));
        CHECK(err < 1e-8);
        for (int i = 0; i < 10; ++i) {
            REQUIRE(random_tau_for(rng, w, tau));
            const NumericCheck c = transform_check(w, tau, 2, 1e-8);
            CHECK(c.pass);
        }
        // Homomorphism on products of words.
        const SL2Matrix v = random_gamma0_2_word(rng, 3);
        CHECK(psi_multiplier(w * v) == (psi_multiplier(w) + psi_multiplier(v)) % 8);
        CHECK(psi_multiplier(-w) == (psi_multiplier(w) + 4) % 8);
    }
}

TEST_CASE("Dedekind eta")
{
    const NumericCheck t = dedekind_eta_check(gen_t, complex_t(0.3, 1.2));
    CHECK(t.pass);
    CHECK(t.detail.find("d-odd") != std::string::npos);
    CHECK(rel(eval_eta(complex_t(1.3, 1.2)).value, std::exp(complex_t(0, pi / 12)) * eval_eta(complex_t(0.3, 1.2)).value)
          < 1e-12);
    const NumericCheck s = dedekind_eta_check(SL2Matrix(0, -1, 1, 0), complex_t(0.4, 1.1));
    CHECK(s.pass);
    CHECK(s.detail.find("c-odd") != std::string::npos);
    CHECK_THROWS_AS(dedekind_eta_check(SL2Matrix(0, -1, 1, 0), complex_t(0.4, 1.1), 1e-9, EtaBranch::d_odd),
                    branch_unavailable);
    CHECK_THROWS_AS(dedekind_eta_check(SL2Matrix(-1, 0, -2, -1), complex_t(0.4, 1.1)), branch_unavailable);

    // Both branches where both apply.
    std::mt19937_64 rng(11);
    for (const SL2Matrix m : {SL2Matrix(1, 0, 1, 1), SL2Matrix(2, 1, 1, 1), SL2Matrix(1, 2, 1, 3)}) {
        for (int i = 0; i < 5; ++i) {
            complex_t tau;
            REQUIRE(random_tau_for(rng, m, tau, 0.1));
            CHECK(dedekind_eta_check(m, tau, 1e-9, EtaBranch::d_odd).pass);
            CHECK(dedekind_eta_check(m, tau, 1e-9, EtaBranch::c_odd).pass);
        }
    }
    // d odd, c even.
    for (const SL2Matrix m : {gen_s, SL2Matrix(3, 2, 4, 3), SL2Matrix(5, 2, 2, 1)}) {
        complex_t tau;
        REQUIRE(random_tau_for(rng, m, tau));
        CHECK(dedekind_eta_check(m, tau).pass);
    }
    for (int j = 2; j <= 4; ++j) {
        CHECK(theta_eta_check(j, complex_t(0.2, 0.9)).pass);
    }
}

TEST_CASE("lattice sums against q-expansions")
{
    CHECK(lattice_sum_check(LatticeFamily::m4k, 1, complex_t(0, 2), 400).pass);
    CHECK(lattice_sum_check(LatticeFamily::m4k2_star, 1, complex_t(0, 1.5), 300, 1e-7).pass);
    CHECK(lattice_sum_check(LatticeFamily::m2k1_chi, 2, complex_t(0, 1), 300).pass);

    for (const complex_t tau : {complex_t(0, 1), complex_t(0, 1.5), complex_t(0.3, 0.9)}) {
        for (const auto &[f, k] : {std::pair{LatticeFamily::m4k, 1L}, std::pair{LatticeFamily::m4k, 2L},
                                   std::pair{LatticeFamily::m4k2_star, 1L}, std::pair{LatticeFamily::m2k1_chi, 2L}}) {
            CAPTURE(to_string(f));
            CAPTURE(k);
            CAPTURE(tau);
            const NumericCheck c = lattice_sum_check(f, k, tau, 400);
            CHECK(c.pass);
            CHECK(c.tail < 1e-6);
            CHECK(c.error <= c.tol + c.tail);
        }
    }
}

TEST_CASE("lattice tails")
{
    const complex_t tau(0.3, 0.9);
    for (const auto &[f, k] : {std::pair{LatticeFamily::m4k, 1L}, std::pair{LatticeFamily::m2k1_chi, 1L},
                               std::pair{LatticeFamily::m2k1_chi, 2L}}) {
        const LatticeComparison a = lattice_compare(f, k, tau, 100);
        const LatticeComparison b = lattice_compare(f, k, tau, 200);
        CHECK(std::abs(a.lattice - b.lattice) <= a.tail);
        CHECK(std::abs(a.lattice - a.q_side) <= a.tail + 1e-12);
        CHECK(b.tail < a.tail);
    }
    CHECK_THROWS_AS(lattice_sum_check(LatticeFamily::m4k, 1, tau, 20), cutoff_too_small);
    CHECK_THROWS_AS(lattice_compare(LatticeFamily::m4k, 1, tau, 1), cutoff_too_small);
    CHECK_THROWS_AS(lattice_compare(LatticeFamily::m4k, 0, tau, 10), invalid_argument);
    CHECK(parse_lattice_family("M2K1CHI") == LatticeFamily::m2k1_chi);
    CHECK_THROWS_AS(parse_lattice_family("M8"), invalid_argument);
}
