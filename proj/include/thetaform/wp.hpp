#ifndef THETAFORM_WP_HPP
#define THETAFORM_WP_HPP

#include <map>
#include <string>
#include <utility>

#include <thetaform/series.hpp>

namespace thetaform
{

// Polynomial in x = wp(pi tau / 2 | tau) and y = wp''(pi tau / 2 | tau),
// keyed by (deg_x, deg_y). Zero coefficients are never stored.
class BivarPoly
{
public:
    using key_t = std::pair<int, int>;

    BivarPoly() = default;
    static BivarPoly x();
    static BivarPoly y();
    static BivarPoly constant(const Rational &c);

    const std::map<key_t, Rational> &terms() const
    {
        return terms_;
    }
    Rational coeff(int dx, int dy) const;
    void add_term(int dx, int dy, const Rational &c);

    BivarPoly &operator+=(const BivarPoly &o);
    BivarPoly &operator*=(const Rational &c);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly &b)
    {
        return a += b;
    }
    friend BivarPoly operator*(BivarPoly a, const Rational &c)
    {
        return a *= c;
    }
    friend BivarPoly operator*(const BivarPoly &a, const BivarPoly &b);
    friend bool operator==(const BivarPoly &a, const BivarPoly &b)
    {
        return a.terms_ == b.terms_;
    }

    // Total weight with x of weight 2 and y of weight 4, if homogeneous.
    bool is_weight_homogeneous(int weight) const;
    std::string to_string() const;

private:
    std::map<key_t, Rational> terms_;
};

// (-1)^(k+1) 2^(2k+3) sum n^(2k+1) q^n / (1 - q^(2n)); the 2k-th derivative
// of wp at pi tau / 2. k >= 1.
QSeries wp_even_at_half_lattice(long k, QSeries::exponent_t n);

// (-1)^(k+1) 2^(2k+4) sum (2n+1)^(2k+1) q^(2n+1) / (1 - q^(4n+2)); the
// difference of the 2k-th derivatives at pi tau / 2 and (pi + pi tau) / 2.
// k >= 0 (k = 0 gives -theta2^4).
QSeries wp_even_difference(long k, QSeries::exponent_t n);

// P_(2k) with wp^(2k)(pi tau / 2) = P_(2k)(x, y), from
//   P_0 = x, P_2 = y, P_(2n+2) = 6 sum_{j=0}^{n} C(2n, 2j) P_(2n-2j) P_(2j).
// Memoized; two_k >= 2 and even.
BivarPoly wp_recurrence_poly(long two_k);

// Substitutes x = -(theta2^4 + theta3^4) / 3 and y = 2 theta2^4 theta3^4.
QSeries wp_poly_eval(const BivarPoly &p, QSeries::exponent_t n);

// Odd derivative combinations at the quarter points, in divisor-sum form:
//   sign = -1:  (-1)^(k+1) 2^(2k+3) sum sigma_(2k,chi)(4n+1) q^(4n+1)
//   sign = +1:  (-1)^(k+1) 2^(2k+3) sum sigma_(2k,chi)(4n+3) q^(4n+3)
// The equivalent Lambert form
//   (-1)^(k+1) 2^(2k+2) sum (2n+1)^(2k) ((-1)^n A_n - sign B_n),
//   A_n = q^(2n+1) / (1 - q^(4n+2)),  B_n = q^(2n+1) / (1 + q^(4n+2)),
// is computed as well and must agree (internal_mismatch otherwise).
QSeries wp_odd_combo(long k, int sign, QSeries::exponent_t n);
QSeries wp_odd_combo_lambert(long k, int sign, QSeries::exponent_t n);

enum class WpPoint {
    half_lattice_tau,  // pi tau / 2
    half_lattice_both, // (pi + pi tau) / 2
    quarter_a,         // (pi + 2 pi tau) / 4
    quarter_b,         // (pi + pi tau) / 2 at modulus (2 tau + 1) / 2
};

// wp^(d)(point), d in {0, 1, 2}, from the theta side and from the Lambert
// side. For quarter_b and d = 1 the value returned is wp' / i.
QSeries wp_value_theta(WpPoint point, int d, QSeries::exponent_t n);
QSeries wp_value_lambert(WpPoint point, int d, QSeries::exponent_t n);

} // namespace thetaform

#endif
