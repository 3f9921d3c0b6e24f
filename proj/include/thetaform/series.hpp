#ifndef THETAFORM_SERIES_HPP
#define THETAFORM_SERIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <thetaform/rational.hpp>

namespace thetaform
{

// Truncated formal series in u = q^(1/4), q = exp(pi i tau).
//
// The series stores the coefficients of u^e for min_exp() <= e < order()
// densely; every exponent below order() is known exactly (exponents below
// min_exp() are zero). The stored leading coefficient is always nonzero;
// a series that is zero to its order has min_exp() == order() and no
// stored coefficients.
class QSeries
{
public:
    using exponent_t = std::int64_t;

    // The zero series, known to order 0.
    QSeries() = default;

    static QSeries zero(exponent_t order);
    static QSeries one(exponent_t order);
    static QSeries monomial(exponent_t exp, Rational coeff, exponent_t order);
    // coeffs[i] multiplies u^(min_exp + i); entries at or past order are dropped,
    // missing entries below order are zero.
    static QSeries from_coefficients(exponent_t min_exp, std::vector<Rational> coeffs, exponent_t order);
    // Coefficient of u^e is f(e) for every e in [first, order).
    static QSeries tabulate(exponent_t first, exponent_t order, const std::function<Rational(exponent_t)> &f);

    exponent_t min_exp() const
    {
        return min_exp_;
    }
    exponent_t order() const
    {
        return order_;
    }
    bool is_zero() const
    {
        return coeffs_.empty();
    }
    // Coefficient of u^e; throws insufficient_order for e >= order().
    Rational coeff(exponent_t e) const;
    const Rational &leading_coefficient() const;
    std::span<const Rational> coefficients() const
    {
        return coeffs_;
    }
    bool all_integral() const;

    // Same series known only below new_order (new_order <= order()).
    QSeries truncated(exponent_t new_order) const;

    QSeries &operator+=(const QSeries &other);
    QSeries &operator-=(const QSeries &other);
    QSeries &operator*=(const Rational &c);

    friend QSeries operator+(QSeries a, const QSeries &b)
    {
        return a += b;
    }
    friend QSeries operator-(QSeries a, const QSeries &b)
    {
        return a -= b;
    }
    friend QSeries operator-(QSeries a)
    {
        return a *= Rational(-1);
    }
    friend QSeries operator*(QSeries a, const Rational &c)
    {
        return a *= c;
    }
    friend QSeries operator*(const Rational &c, QSeries a)
    {
        return a *= c;
    }
    friend QSeries operator*(const QSeries &a, const QSeries &b);

    // Exact structural equality (same order, same coefficients).
    friend bool operator==(const QSeries &a, const QSeries &b);

    std::string to_string(exponent_t max_terms = 12) const;

private:
    void normalize();

    exponent_t min_exp_ = 0;
    exponent_t order_ = 0;
    std::vector<Rational> coeffs_;
};

QSeries add(const QSeries &a, const QSeries &b);
QSeries mul(const QSeries &a, const QSeries &b);
QSeries invert(const QSeries &a);
QSeries pow(const QSeries &a, long n);

// Multiply by u^k.
QSeries shift(const QSeries &a, QSeries::exponent_t k);
// q -> q^m (tau -> m tau): u-exponents are multiplied by m.
QSeries substitute_q_power(const QSeries &a, long m);
// q -> q^(1/m) (tau -> tau/m): u-exponents are divided by m; throws
// non_integral_exponent when a nonzero coefficient sits at an exponent not
// divisible by m.
QSeries contract_q_power(const QSeries &a, long m);

// (q^m; q^m)_inf to u-order n, by the literal finite product over k with 4mk < n.
QSeries pochhammer_inf(long m, QSeries::exponent_t n);

// Sum over n >= n0 of w(n) u^(a n + b) / (1 - s(n) u^(c n + d)), each term
// expanded geometrically; s(n) is one of -1, 0, 1. Requires a > 0 and
// c n + d > 0 over the summation range.
QSeries lambert_sum(const std::function<Integer(long)> &w, QSeries::exponent_t a, QSeries::exponent_t b,
                    QSeries::exponent_t c, QSeries::exponent_t d, const std::function<int(long)> &s, long n0,
                    QSeries::exponent_t order);
QSeries lambert_sum(const std::function<Integer(long)> &w, QSeries::exponent_t a, QSeries::exponent_t b,
                    QSeries::exponent_t c, QSeries::exponent_t d, int s, long n0, QSeries::exponent_t order);

struct Mismatch {
    QSeries::exponent_t u_exp;
    Rational lhs;
    Rational rhs;
};

struct CheckResult {
    bool equal = true;
    QSeries::exponent_t order_checked = 0;
    std::optional<Mismatch> mismatch;
};

// Compare exponents < n; throws insufficient_order if n exceeds either order.
CheckResult equal_to_order(const QSeries &a, const QSeries &b, QSeries::exponent_t n);

} // namespace thetaform

#endif
