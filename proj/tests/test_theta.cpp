#include <doctest.h>

#include <thetaform/error.hpp>
#include <thetaform/eta.hpp>
#include <thetaform/theta.hpp>

using namespace thetaform;

namespace
{

// Lattice points behind the u^e coefficient of theta3^2 = (sum u^(4 n^2))^2 or,
// with odd_only, of theta2^2 = (sum u^((2n+1)^2))^2.
long two_square_count(long e, bool odd_only)
{
    long count = 0;
    for (long x = -20; x <= 20; ++x) {
        for (long y = -20; y <= 20; ++y) {
            if (odd_only) {
                // theta2 = sum_{n in Z} u^((2n+1)^2)
                if ((2 * x + 1) * (2 * x + 1) + (2 * y + 1) * (2 * y + 1) == e) {
                    ++count;
                }
            } else if (4 * (x * x + y * y) == e) {
                ++count;
            }
        }
    }
    return count;
}

long divisor_sum(long n, long k)
{
    long s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            long p = 1;
            for (long i = 0; i < k; ++i) {
                p *= d;
            }
            s += p;
        }
    }
    return s;
}

} // namespace

TEST_CASE("theta constants against direct summation")
{
    const QSeries t2 = theta_series(2, 40), t3 = theta_series(3, 40), t4 = theta_series(4, 40);
    CHECK(t2.min_exp() == 1);
    CHECK(t3.min_exp() == 0);
    CHECK(t3.coeff(0) == 1);
    for (long e = 0; e < 40; ++e) {
        long on_sq = 0, on_pron = 0, sign = 0;
        for (long k = 0; k * k * 4 <= e; ++k) {
            if (4 * k * k == e) {
                on_sq = k == 0 ? 1 : 2;
                sign = k % 2 == 0 ? 1 : -1;
            }
        }
        for (long k = 0; 1 + 4 * k * (k + 1) <= e; ++k) {
            if (1 + 4 * k * (k + 1) == e) {
                on_pron = 2;
            }
        }
        CHECK(t2.coeff(e) == on_pron);
        CHECK(t3.coeff(e) == on_sq);
        CHECK(t4.coeff(e) == on_sq * sign);
    }
}

TEST_CASE("theta products match lattice-point counts")
{
    const QSeries t3sq = theta_power(3, 2, 400), t2sq = theta_power(2, 2, 400);
    for (long e = 0; e < 400; ++e) {
        CHECK(t3sq.coeff(e) == two_square_count(e, false));
        CHECK(t2sq.coeff(e) == two_square_count(e, true));
    }
}

TEST_CASE("theta2^2 / 4 q^(1/2) counts sums of two triangular numbers")
{
    const QSeries t2sq = theta_power(2, 2, 810);
    for (long m = 0; m <= 100; ++m) {
        long count = 0;
        for (long a = 0; a * (a + 1) / 2 <= m; ++a) {
            for (long b = 0; b * (b + 1) / 2 <= m; ++b) {
                if (a * (a + 1) / 2 + b * (b + 1) / 2 == m) {
                    ++count;
                }
            }
        }
        // u^(2 + 8m) = q^(1/2) q^(2m); triangular t_a + t_b = m.
        const Rational c = t2sq.coeff(2 + 8 * m) / 4;
        CHECK(c >= 0);
        CHECK(c == count);
    }
}

TEST_CASE("scaled arguments")
{
    CHECK_THROWS_AS(theta_series(2, Rational(1, 2), 40), non_integral_exponent);
    const QSeries t3_half = theta_series(3, Rational(1, 2), 40);
    CHECK(t3_half.coeff(2) == 2);
    CHECK(theta_series(3, Rational(2), 80) == at_double_argument(theta_series(3, 40)).truncated(80));
    CHECK(theta_power(4, 2, 100, 2) == at_double_argument(theta_power(4, 2, 50)));
    CHECK_THROWS_AS(at_half_argument(theta_series(2, 40)), non_integral_exponent);
}

TEST_CASE("theta_power agrees with repeated products")
{
    for (int j = 2; j <= 4; ++j) {
        QSeries p = QSeries::one(120);
        for (int k = 1; k <= 6; ++k) {
            p = p * theta_series(j, 120);
            CHECK(theta_power(j, k, 120) == p);
        }
    }
}

TEST_CASE("Jacobi product and doubling identities at two orders")
{
    for (const QSeries::exponent_t n : {50, 200}) {
        CHECK(equal_to_order(theta_power(2, 4, n), theta_power(3, 4, n) - theta_power(4, 4, n), n).equal);
        CHECK(equal_to_order(theta_series(3, n) * theta_series(4, n), theta_power(4, 2, n, 2), n).equal);
        CHECK(equal_to_order(theta_series(2, n) * theta_series(3, n),
                             at_half_argument(theta_power(2, 2, 2 * n)) * Rational(1, 2), n)
                  .equal);
        CHECK(equal_to_order(theta_series(2, n) * theta_series(3, n) * theta_series(4, n),
                             expand(EtaQuotient{1, {{2, 3}}}, n) * Rational(2), n)
                  .equal);
    }
}

TEST_CASE("e-values and invariants")
{
    const EValues e = e_values(200);
    CHECK((e.e1 + e.e2 + e.e3).is_zero());
    // theta2^4 has no constant term and theta3^4 starts at 1.
    CHECK(e.e2.coeff(0) == Rational(-1, 3));
    CHECK(e.e1.coeff(0) == Rational(2, 3));
    CHECK(equal_to_order(e.e1 - e.e3, theta_power(4, 4, 200), 200).equal);

    const GInvariants g = g_invariants(200);
    CHECK(g.g2.coeff(0) == Rational(4, 3));
    CHECK(g.g3.coeff(0) == Rational(8, 27));
    for (long m = 1; 8 * m < 200; ++m) {
        CHECK(g.g2.coeff(8 * m) == Rational(4, 3) * 240 * divisor_sum(m, 3));
        CHECK(g.g3.coeff(8 * m) == Rational(8, 27) * -504 * divisor_sum(m, 5));
        CHECK(g.g2.coeff(8 * m - 4) == 0);
    }
}

TEST_CASE("E2 against divisor sums")
{
    const QSeries e2 = e2_series(200);
    CHECK(e2.coeff(0) == 1);
    CHECK(e2.coeff(8) == -24);
    CHECK(e2.coeff(16) == -72);
    for (long m = 1; 8 * m < 200; ++m) {
        CHECK(e2.coeff(8 * m) == -24 * divisor_sum(m, 1));
    }
}

TEST_CASE("preliminary corpus holds at two orders")
{
    for (const QSeries::exponent_t n : {50, 200}) {
        for (const auto &c : verify_prelim_corpus(n)) {
            CAPTURE(c.identity_id);
            CHECK(c.equal);
            CHECK(c.order_checked == n);
        }
    }
}
