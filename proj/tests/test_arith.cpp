#include <numeric>
#include <vector>

#include <doctest.h>

#include <thetaform/arith.hpp>
#include <thetaform/error.hpp>

using namespace thetaform;

namespace
{

// Taylor coefficients of sec x = 1 / cos x by exact series division.
std::vector<Rational> sec_series(int terms)
{
    std::vector<Rational> cos_c(static_cast<std::size_t>(terms)), sec(static_cast<std::size_t>(terms));
    Rational fact = 1;
    for (int n = 0; n < terms; ++n) {
        if (n > 0) {
            fact *= n;
        }
        if (n % 2 == 0) {
            cos_c[static_cast<std::size_t>(n)] = Rational((n / 2) % 2 == 0 ? 1 : -1) / fact;
        }
    }
    for (int n = 0; n < terms; ++n) {
        Rational s = n == 0 ? Rational(1) : Rational(0);
        for (int j = 1; j <= n; ++j) {
            s -= cos_c[static_cast<std::size_t>(j)] * sec[static_cast<std::size_t>(n - j)];
        }
        sec[static_cast<std::size_t>(n)] = s;
    }
    return sec;
}

int brute_legendre(long a, long p)
{
    const long r = ((a % p) + p) % p;
    if (r == 0) {
        return 0;
    }
    for (long x = 1; x < p; ++x) {
        if ((x * x) % p == r) {
            return 1;
        }
    }
    return -1;
}

bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Integer brute_sigma_chi(long k, long n)
{
    Integer s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += ipow(d, static_cast<unsigned long>(k)) * chi(d);
        }
    }
    return s;
}

} // namespace

TEST_CASE("bernoulli values")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(4) == make_rational(-1, 30));
    CHECK(bernoulli(12) == make_rational(-691, 2730));
    CHECK_THROWS_AS(bernoulli(3), odd_index);
    CHECK_THROWS_AS(bernoulli(-2), out_of_range);
}

TEST_CASE("bernoulli satisfies the defining recurrence")
{
    // Odd-index values beyond B_1 vanish; the recurrence is checked with them.
    std::vector<Rational> b(42);
    for (long n = 0; n <= 41; ++n) {
        if (n == 1) {
            b[1] = make_rational(-1, 2);
        } else if (n % 2 == 0) {
            b[static_cast<std::size_t>(n)] = bernoulli(n);
        }
    }
    for (long n = 1; n <= 40; ++n) {
        Rational s = 0;
        for (long j = 0; j <= n; ++j) {
            s += Rational(binomial(n + 1, j)) * b[static_cast<std::size_t>(j)];
        }
        CHECK(s == 0);
    }
    for (long k = 1; 2 * k <= 40; ++k) {
        CHECK(sgn(bernoulli(2 * k)) == (k % 2 == 1 ? 1 : -1));
    }
}

TEST_CASE("euler numbers")
{
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
    CHECK(euler_number(10) == -50521);
    CHECK_THROWS_AS(euler_number(5), odd_index);

    const auto sec = sec_series(41);
    Rational fact = 1;
    for (long n = 0; n <= 40; ++n) {
        if (n > 0) {
            fact *= n;
        }
        if (n % 2 == 0) {
            const Integer e = euler_number(n);
            // sec has |E_n| / n!; the stored sign alternates.
            CHECK(Rational(abs(e)) / fact == sec[static_cast<std::size_t>(n)]);
            CHECK(sgn(e) == ((n / 2) % 2 == 0 ? 1 : -1));
        }
    }
}

TEST_CASE("characters")
{
    CHECK(chi(1) == 1);
    CHECK(chi(3) == -1);
    CHECK(chi(6) == 0);
    CHECK(chi(-1) == -1);
    CHECK(chi(-3) == 1);
    CHECK(chi2(7) == 1);
    CHECK(chi2(-4) == 0);
}

TEST_CASE("sigma_chi")
{
    CHECK(sigma_chi(2, 1) == 1);
    CHECK(sigma_chi(2, 3) == -8);
    CHECK(sigma_chi(4, 5) == 626);
    for (long n = 1; n <= 200; ++n) {
        CHECK(sigma_chi(3, n) == brute_sigma_chi(3, n));
    }
    for (long m = 1; m <= 60; ++m) {
        for (long n = 1; n <= 60; ++n) {
            if (std::gcd(m, n) == 1) {
                CHECK(sigma_chi(4, m * n) == sigma_chi(4, m) * sigma_chi(4, n));
            }
        }
    }
    CHECK_THROWS_AS(sigma_chi(2, 0), out_of_range);
}

TEST_CASE("kronecker")
{
    for (long n = 1; n < 50; ++n) {
        CHECK(kronecker(1, n) == 1);
        CHECK(kronecker(1, -n) == 1);
    }
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(3, 5) == -1);
    CHECK(kronecker(0, 1) == 1);
    CHECK(kronecker(2, 4) == 0);
    for (long p = 3; p <= 200; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        for (long a = -30; a <= 60; ++a) {
            CHECK(kronecker(a, p) == brute_legendre(a, p));
        }
    }
}
