#ifndef THETAFORM_THETA_HPP
#define THETAFORM_THETA_HPP

#include <vector>

#include <thetaform/certificate.hpp>
#include <thetaform/series.hpp>

namespace thetaform
{

// theta_j(0 | scale * tau) for j in {2, 3, 4}, to u-order n:
//   theta2 = 2 q^(1/4) sum_{k>=0} q^(k(k+1)),
//   theta3 = 1 + 2 sum q^(k^2),  theta4 = 1 + 2 sum (-1)^k q^(k^2).
// Throws non_integral_exponent when the rescaled exponents are not integral
// (e.g. theta2 at tau/2, which needs q^(1/8)).
QSeries theta_series(int j, const Rational &scale, QSeries::exponent_t n);
QSeries theta_series(int j, QSeries::exponent_t n);

// theta_j(m tau)^k for an integer scale m >= 1; memoized.
QSeries theta_power(int j, long k, QSeries::exponent_t n, long m = 1);

// f(tau / 2) from f(tau): u-exponents halve (throws if one is odd).
QSeries at_half_argument(const QSeries &s);
// f(2 tau) from f(tau).
QSeries at_double_argument(const QSeries &s);

struct EValues {
    QSeries e1, e2, e3;
};

// e1 = (theta3^4 + theta4^4) / 3, e2 = -(theta2^4 + theta3^4) / 3,
// e3 = (theta2^4 - theta4^4) / 3.
EValues e_values(QSeries::exponent_t n);

struct GInvariants {
    QSeries g2, g3;
};

// g2 = 4/3 (1 + 240 sum n^3 q^(2n) / (1 - q^(2n))),
// g3 = 8/27 (1 - 504 sum n^5 q^(2n) / (1 - q^(2n))).
// Both are cross-checked against the e-values (g2 = -4 sum e_i e_j,
// g3 = 4 e1 e2 e3); throws internal_mismatch if either check fails.
GInvariants g_invariants(QSeries::exponent_t n);

// E2 = 1 - 24 sum n q^(2n) / (1 - q^(2n)).
QSeries e2_series(QSeries::exponent_t n);

// Preliminary theta, e-value, g-invariant and special-value identities,
// each checked to u-order n.
std::vector<IdentityCertificate> verify_prelim_corpus(QSeries::exponent_t n);

} // namespace thetaform

#endif
