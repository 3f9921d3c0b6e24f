#ifndef THETAFORM_EISENSTEIN_HPP
#define THETAFORM_EISENSTEIN_HPP

#include <string>
#include <utility>
#include <vector>

#include <thetaform/certificate.hpp>
#include <thetaform/series.hpp>

namespace thetaform
{

// Lambert families used throughout, all to u-order n (q = u^4):
//   lambert_a(p) = q^(1/2) sum_{n>=0} (2n+1)^p q^n / (1 + q^(2n+1))
//   lambert_b(p) = q^(1/2) sum_{n>=0} (-1)^n (2n+1)^p q^n / (1 - q^(2n+1))
//   lambert_odd(p) = sum_{n>=0} (2n+1)^p q^(2n+1) / (1 - q^(4n+2))
//   lambert_even(p) = sum_{n>=1} n^p q^(2n) / (1 - q^(4n))
//   lambert_half(p) = sum_{n>=1} n^p q^n / (1 - q^(2n))
QSeries lambert_a(long p, QSeries::exponent_t n);
QSeries lambert_b(long p, QSeries::exponent_t n);
QSeries lambert_odd(long p, QSeries::exponent_t n);
QSeries lambert_even(long p, QSeries::exponent_t n);
QSeries lambert_half(long p, QSeries::exponent_t n);

// sum_{j>=0} sigma_(k,chi)(4j + r) q^(4j + r) for r in {1, 3}.
QSeries sigma_series(long k, long r, QSeries::exponent_t n);

// The normalizing constant and family for theta2^two_k.
//   two_k = 8k:      2^(4k+3) k / ((1 - 2^(4k)) B_(4k))   on lambert_even(4k - 1)
//   two_k = 8k + 4:  -8 (2k+1) / ((1 - 2^(4k+2)) B_(4k+2)) on lambert_odd(4k + 1)
//   two_k = 8k + 2:  4 / E_(4k)     on lambert_a(4k) + lambert_b(4k)   (k >= 1)
//   two_k = 8k - 2:  -4 / E_(4k-2)  on lambert_a(4k-2) - lambert_b(4k-2)
//   two_k = 2:       4 on lambert_b(0)
EisensteinSpec eisenstein_spec(long two_k);

enum class EisForm {
    lambert, // the Lambert-series form (the only one for 2k = 0, 4 mod 8)
    sigma,   // divisor-sum form for 2k = 2, 6 mod 8
};

// (c, E) with theta2^two_k - c E a cusp form. For 2k = 0, 4 mod 8 both forms
// coincide. The sigma form does not exist for two_k = 2 (unsupported_power).
std::pair<Rational, QSeries> eis_series(long two_k, QSeries::exponent_t n, EisForm form = EisForm::lambert);

// Integer polynomial, ascending degree.
struct PalinPoly {
    std::vector<Integer> coeffs;

    long degree() const
    {
        return static_cast<long>(coeffs.size()) - 1;
    }
    // Palindromic on its support: trailing low-order zeros are skipped, so
    // x^3 + 4x^2 + x counts.
    bool is_palindromic() const;
    std::string to_string() const;
};

// p_1 = 1, p_(n+1) = n x p_n + x (1 - x) p_n'.
PalinPoly palin_p(long n);
// P_1 = 1, P_(n+1) = ((2n - 1) x + 1) P_n + 2 x (1 - x) P_n'.
PalinPoly palin_P(long n);

// a_(m,n) = sum_{j=0}^{m} (-1)^j C(n, j) (m - j)^(n-1), for 1 <= m <= n - 1;
// throws out_of_range otherwise.
Integer coeff_closed_form(long m, long n);

// sum_{j=0}^{jmax} (-1)^j C(n, j) (m - j)^(n-1) with no range restriction.
Integer alternating_binomial_sum(long m, long n, long jmax);

enum class PartialFractionFamily { p, P };

// Checks
//   p: sum_{n>=1} n^(k-1) q^n / (1 - q^(2n))
//        = sum_{j>=0} [p_k(x) / (1 - x)^k - [k = 1]]   at x = q^(2j+1)
//   P: sum_{n>=1} (2n+1)^(k-1) q^n / (1 - q^(2n))
//        = sum_{j>=0} [P_k(x) / (1 - x)^k - 1]          at x = q^(2j+1)
// to u-order n. The subtracted constants are the n = 0 terms of the
// expanded geometric sums.
IdentityCertificate lambert_partial_fraction_check(long k, QSeries::exponent_t n,
                                                   PartialFractionFamily family = PartialFractionFamily::p);

} // namespace thetaform

#endif
