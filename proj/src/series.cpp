#include <algorithm>
#include <sstream>
#include <utility>

#include <thetaform/error.hpp>
#include <thetaform/series.hpp>

namespace thetaform
{

namespace
{

using exponent_t = QSeries::exponent_t;

exponent_t floor_div(exponent_t a, exponent_t b)
{
    exponent_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

exponent_t ceil_div(exponent_t a, exponent_t b)
{
    return -floor_div(-a, b);
}

// Common denominator of a coefficient list, and the list scaled by it.
Integer integral_form(std::span<const Rational> c, std::vector<Integer> &out)
{
    Integer den = 1;
    for (const auto &x : c) {
        if (x.get_den() != 1) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        }
    }
    out.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (den == 1) {
            out[i] = c[i].get_num();
        } else {
            out[i] = c[i].get_num() * (den / c[i].get_den());
        }
    }
    return den;
}

} // namespace

QSeries QSeries::zero(exponent_t order)
{
    QSeries s;
    s.min_exp_ = order;
    s.order_ = order;
    return s;
}

QSeries QSeries::one(exponent_t order)
{
    return monomial(0, Rational(1), order);
}

QSeries QSeries::monomial(exponent_t exp, Rational coeff, exponent_t order)
{
    QSeries s = zero(order);
    if (exp < order && coeff != 0) {
        s.min_exp_ = exp;
        s.coeffs_.push_back(std::move(coeff));
    }
    return s;
}

QSeries QSeries::from_coefficients(exponent_t min_exp, std::vector<Rational> coeffs, exponent_t order)
{
    QSeries s;
    s.min_exp_ = min_exp;
    s.order_ = order;
    if (min_exp >= order) {
        coeffs.clear();
    } else if (static_cast<exponent_t>(coeffs.size()) > order - min_exp) {
        coeffs.resize(static_cast<std::size_t>(order - min_exp));
    }
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

QSeries QSeries::tabulate(exponent_t first, exponent_t order, const std::function<Rational(exponent_t)> &f)
{
    std::vector<Rational> c;
    if (first < order) {
        c.reserve(static_cast<std::size_t>(order - first));
        for (exponent_t e = first; e < order; ++e) {
            c.push_back(f(e));
        }
    }
    return from_coefficients(first, std::move(c), order);
}

void QSeries::normalize()
{
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) {
        ++lead;
    }
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = order_;
        return;
    }
    std::size_t end = coeffs_.size();
    while (coeffs_[end - 1] == 0) {
        --end;
    }
    if (lead > 0 || end < coeffs_.size()) {
        coeffs_ = std::vector<Rational>(std::make_move_iterator(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead)),
                                        std::make_move_iterator(coeffs_.begin() + static_cast<std::ptrdiff_t>(end)));
        min_exp_ += static_cast<exponent_t>(lead);
    }
}

Rational QSeries::coeff(exponent_t e) const
{
    if (e >= order_) {
        throw insufficient_order("coefficient of u^" + std::to_string(e) + " requested from a series known to order "
                                 + std::to_string(order_));
    }
    if (e < min_exp_ || e >= min_exp_ + static_cast<exponent_t>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

const Rational &QSeries::leading_coefficient() const
{
    if (coeffs_.empty()) {
        throw zero_leading_coefficient("series is zero to order " + std::to_string(order_));
    }
    return coeffs_.front();
}

bool QSeries::all_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c.get_den() == 1; });
}

QSeries QSeries::truncated(exponent_t new_order) const
{
    if (new_order > order_) {
        throw insufficient_order("cannot extend order " + std::to_string(order_) + " to " + std::to_string(new_order));
    }
    return from_coefficients(min_exp_, coeffs_, new_order);
}

QSeries &QSeries::operator+=(const QSeries &other)
{
    if (&other == this) {
        return *this *= Rational(2);
    }
    const exponent_t order = std::min(order_, other.order_);
    if (other.coeffs_.empty()) {
        if (order < order_) {
            *this = truncated(order);
        }
        return *this;
    }
    if (coeffs_.empty()) {
        *this = other.truncated(order);
        return *this;
    }
    const exponent_t lo = std::min(min_exp_, other.min_exp_);
    const exponent_t hi = std::min(order, std::max(min_exp_ + static_cast<exponent_t>(coeffs_.size()),
                                                   other.min_exp_ + static_cast<exponent_t>(other.coeffs_.size())));
    if (lo >= hi) {
        *this = zero(order);
        return *this;
    }
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const exponent_t e = min_exp_ + static_cast<exponent_t>(i);
        if (e < hi) {
            c[static_cast<std::size_t>(e - lo)] = std::move(coeffs_[i]);
        }
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        const exponent_t e = other.min_exp_ + static_cast<exponent_t>(i);
        if (e < hi) {
            c[static_cast<std::size_t>(e - lo)] += other.coeffs_[i];
        }
    }
    *this = from_coefficients(lo, std::move(c), order);
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &other)
{
    return *this += -other;
}

QSeries &QSeries::operator*=(const Rational &c)
{
    if (c == 0) {
        coeffs_.clear();
        min_exp_ = order_;
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    const exponent_t order = std::min(a.order_ + b.min_exp_, b.order_ + a.min_exp_);
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return QSeries::zero(order);
    }
    const exponent_t lo = a.min_exp_ + b.min_exp_;
    if (lo >= order) {
        return QSeries::zero(order);
    }
    const auto len = static_cast<std::size_t>(
        std::min(order - lo, static_cast<exponent_t>(a.coeffs_.size() + b.coeffs_.size() - 1)));

    // Clear denominators once, convolve over the integers, divide at the end.
    std::vector<Integer> ia, ib;
    const Integer da = integral_form(a.coeffs_, ia);
    const Integer db = integral_form(b.coeffs_, ib);

    std::vector<std::size_t> nz_b;
    for (std::size_t j = 0; j < ib.size(); ++j) {
        if (ib[j] != 0) {
            nz_b.push_back(j);
        }
    }
    std::vector<Integer> acc(len);
    for (std::size_t i = 0; i < ia.size() && i < len; ++i) {
        if (ia[i] == 0) {
            continue;
        }
        const mpz_srcptr x = ia[i].get_mpz_t();
        for (const std::size_t j : nz_b) {
            if (i + j >= len) {
                break;
            }
            mpz_addmul(acc[i + j].get_mpz_t(), x, ib[j].get_mpz_t());
        }
    }
    const Integer den = da * db;
    std::vector<Rational> c(len);
    if (den == 1) {
        for (std::size_t k = 0; k < len; ++k) {
            c[k] = Rational(acc[k]);
        }
    } else {
        for (std::size_t k = 0; k < len; ++k) {
            c[k] = Rational(acc[k], den);
            c[k].canonicalize();
        }
    }
    return QSeries::from_coefficients(lo, std::move(c), order);
}

bool operator==(const QSeries &a, const QSeries &b)
{
    return a.order_ == b.order_ && a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

std::string QSeries::to_string(exponent_t max_terms) const
{
    std::ostringstream os;
    exponent_t shown = 0;
    for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        const Rational &c = coeffs_[i];
        const exponent_t e = min_exp_ + static_cast<exponent_t>(i);
        if (shown > 0) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        const Rational mag = abs(c);
        if (mag != 1 || e == 0) {
            os << mag.get_str();
        }
        if (e != 0) {
            if (mag != 1) {
                os << "*";
            }
            os << "u^" << e;
        }
        ++shown;
    }
    if (shown == 0) {
        os << "0";
    }
    os << " + O(u^" << order_ << ")";
    return os.str();
}

QSeries add(const QSeries &a, const QSeries &b)
{
    return a + b;
}

QSeries mul(const QSeries &a, const QSeries &b)
{
    return a * b;
}

QSeries invert(const QSeries &a)
{
    if (a.is_zero()) {
        throw zero_leading_coefficient("cannot invert a series that is zero to order " + std::to_string(a.order()));
    }
    const exponent_t m = a.min_exp();
    const exponent_t rel = a.order() - m;
    const auto c = a.coefficients();
    const auto len = static_cast<std::size_t>(rel);

    std::vector<Integer> ia;
    const Integer den = integral_form(c, ia);
    std::vector<Rational> g(len);
    if (ia[0] == 1 || ia[0] == -1) {
        // Monic up to sign: the recursion stays in the integers.
        const int s = ia[0] == 1 ? 1 : -1;
        std::vector<Integer> gi(len);
        gi[0] = s;
        Integer t;
        for (std::size_t n = 1; n < len; ++n) {
            t = 0;
            for (std::size_t j = 1; j <= n && j < ia.size(); ++j) {
                if (ia[j] != 0) {
                    mpz_addmul(t.get_mpz_t(), ia[j].get_mpz_t(), gi[n - j].get_mpz_t());
                }
            }
            gi[n] = s == 1 ? Integer(-t) : t;
        }
        for (std::size_t n = 0; n < len; ++n) {
            g[n] = Rational(gi[n] * den);
        }
    } else {
        const Rational inv0 = 1 / c[0];
        g[0] = inv0;
        for (std::size_t n = 1; n < len; ++n) {
            Rational t = 0;
            for (std::size_t j = 1; j <= n && j < c.size(); ++j) {
                if (c[j] != 0) {
                    t += c[j] * g[n - j];
                }
            }
            g[n] = -t * inv0;
        }
    }
    return QSeries::from_coefficients(-m, std::move(g), rel - m);
}

QSeries pow(const QSeries &a, long n)
{
    if (n < 0) {
        return pow(invert(a), -n);
    }
    QSeries result = QSeries::one(a.order() - a.min_exp());
    if (n == 0) {
        return result;
    }
    QSeries base = a;
    bool first = true;
    while (true) {
        if (n & 1) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1;
        if (n == 0) {
            break;
        }
        base = base * base;
    }
    return result;
}

QSeries shift(const QSeries &a, exponent_t k)
{
    auto c = a.coefficients();
    return QSeries::from_coefficients(a.min_exp() + k, std::vector<Rational>(c.begin(), c.end()), a.order() + k);
}

QSeries substitute_q_power(const QSeries &a, long m)
{
    if (m < 1) {
        throw invalid_argument("substitute_q_power needs a positive multiplier, got " + std::to_string(m));
    }
    if (m == 1) {
        return a;
    }
    const auto c = a.coefficients();
    if (c.empty()) {
        return QSeries::zero(a.order() * m);
    }
    std::vector<Rational> out((c.size() - 1) * static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i * static_cast<std::size_t>(m)] = c[i];
    }
    return QSeries::from_coefficients(a.min_exp() * m, std::move(out), a.order() * m);
}

QSeries contract_q_power(const QSeries &a, long m)
{
    if (m < 1) {
        throw invalid_argument("contract_q_power needs a positive divisor, got " + std::to_string(m));
    }
    if (m == 1) {
        return a;
    }
    const exponent_t order = ceil_div(a.order(), m);
    const auto c = a.coefficients();
    if (c.empty()) {
        return QSeries::zero(order);
    }
    const exponent_t lo = ceil_div(a.min_exp(), m);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) {
            continue;
        }
        const exponent_t e = a.min_exp() + static_cast<exponent_t>(i);
        if (e % m != 0) {
            throw non_integral_exponent("u^" + std::to_string(e) + " has no image under q -> q^(1/" + std::to_string(m)
                                        + ")");
        }
        const auto k = static_cast<std::size_t>(e / m - lo);
        if (out.size() <= k) {
            out.resize(k + 1);
        }
        out[k] = c[i];
    }
    return QSeries::from_coefficients(lo, std::move(out), order);
}

QSeries pochhammer_inf(long m, exponent_t n)
{
    if (m < 1) {
        throw invalid_argument("pochhammer_inf needs m >= 1, got " + std::to_string(m));
    }
    if (n < 0) {
        throw invalid_argument("pochhammer_inf needs a non-negative order");
    }
    // Multiply the factors (1 - u^(4mk)) in place on an integer array.
    const auto len = static_cast<std::size_t>(n);
    std::vector<Integer> c(len);
    if (len > 0) {
        c[0] = 1;
    }
    const auto step = static_cast<std::size_t>(4 * m);
    for (std::size_t e = step; e < len; e += step) {
        for (std::size_t i = len; i-- > e;) {
            if (c[i - e] != 0) {
                c[i] -= c[i - e];
            }
        }
    }
    std::vector<Rational> r(len);
    for (std::size_t i = 0; i < len; ++i) {
        r[i] = Rational(c[i]);
    }
    return QSeries::from_coefficients(0, std::move(r), n);
}

QSeries lambert_sum(const std::function<Integer(long)> &w, exponent_t a, exponent_t b, exponent_t c, exponent_t d,
                    const std::function<int(long)> &s, long n0, exponent_t order)
{
    if (a <= 0) {
        throw invalid_argument("lambert_sum needs a positive numerator step");
    }
    exponent_t lo = order;
    std::vector<Integer> acc;
    if (order > 0) {
        acc.resize(static_cast<std::size_t>(order));
    }
    for (long n = n0; a * n + b < order; ++n) {
        const exponent_t den = c * n + d;
        if (den <= 0) {
            throw invalid_argument("lambert_sum denominator exponent must be positive at n = " + std::to_string(n));
        }
        const exponent_t start = a * n + b;
        if (start < 0) {
            throw invalid_argument("lambert_sum expects non-negative exponents");
        }
        const Integer wn = w(n);
        if (wn == 0) {
            continue;
        }
        const int sn = s(n);
        lo = std::min(lo, start);
        bool negate = false;
        for (exponent_t e = start; e < order; e += den) {
            auto &slot = acc[static_cast<std::size_t>(e)];
            if (negate) {
                slot -= wn;
            } else {
                slot += wn;
            }
            if (sn < 0) {
                negate = !negate;
            } else if (sn == 0) {
                break;
            }
        }
    }
    std::vector<Rational> r;
    for (exponent_t e = lo; e < order; ++e) {
        r.emplace_back(acc[static_cast<std::size_t>(e)]);
    }
    return QSeries::from_coefficients(lo, std::move(r), order);
}

QSeries lambert_sum(const std::function<Integer(long)> &w, exponent_t a, exponent_t b, exponent_t c, exponent_t d,
                    int s, long n0, exponent_t order)
{
    return lambert_sum(w, a, b, c, d, [s](long) { return s; }, n0, order);
}

CheckResult equal_to_order(const QSeries &a, const QSeries &b, exponent_t n)
{
    if (n > a.order() || n > b.order()) {
        throw insufficient_order("comparison to u^" + std::to_string(n) + " needs both orders at least that; have "
                                 + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
    CheckResult r;
    r.order_checked = n;
    const exponent_t lo = std::min(a.min_exp(), b.min_exp());
    for (exponent_t e = lo; e < n; ++e) {
        Rational x = a.coeff(e);
        Rational y = b.coeff(e);
        if (x != y) {
            r.equal = false;
            r.mismatch = Mismatch{e, std::move(x), std::move(y)};
            break;
        }
    }
    return r;
}

} // namespace thetaform
