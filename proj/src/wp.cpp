#include <mutex>
#include <sstream>
#include <vector>

#include <thetaform/arith.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/error.hpp>
#include <thetaform/theta.hpp>
#include <thetaform/wp.hpp>

namespace thetaform
{

using exponent_t = QSeries::exponent_t;

BivarPoly BivarPoly::x()
{
    BivarPoly p;
    p.add_term(1, 0, 1);
    return p;
}

BivarPoly BivarPoly::y()
{
    BivarPoly p;
    p.add_term(0, 1, 1);
    return p;
}

BivarPoly BivarPoly::constant(const Rational &c)
{
    BivarPoly p;
    p.add_term(0, 0, c);
    return p;
}

Rational BivarPoly::coeff(int dx, int dy) const
{
    const auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(int dx, int dy, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace({dx, dy}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

BivarPoly &BivarPoly::operator+=(const BivarPoly &o)
{
    for (const auto &[k, c] : o.terms_) {
        add_term(k.first, k.second, c);
    }
    return *this;
}

BivarPoly &BivarPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_) {
        v *= c;
    }
    return *this;
}

BivarPoly operator*(const BivarPoly &a, const BivarPoly &b)
{
    BivarPoly r;
    for (const auto &[ka, ca] : a.terms_) {
        for (const auto &[kb, cb] : b.terms_) {
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

bool BivarPoly::is_weight_homogeneous(int weight) const
{
    for (const auto &[k, c] : terms_) {
        if (2 * k.first + 4 * k.second != weight) {
            return false;
        }
    }
    return true;
}

std::string BivarPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest x-degree first is the conventional reading order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[k, c] = *it;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        const Rational mag = abs(c);
        const bool bare = k.first == 0 && k.second == 0;
        if (mag != 1 || bare) {
            os << mag.get_str();
        }
        const auto var = [&](const char *name, int d) {
            if (d > 0) {
                os << name;
                if (d > 1) {
                    os << "^" << d;
                }
            }
        };
        var("x", k.first);
        var("y", k.second);
        first = false;
    }
    return os.str();
}

QSeries wp_even_at_half_lattice(long k, exponent_t n)
{
    if (k < 1) {
        throw out_of_range("wp_even_at_half_lattice needs k >= 1, got " + std::to_string(k));
    }
    Rational c(ipow(2, static_cast<unsigned long>(2 * k + 3)));
    if (k % 2 == 0) {
        c = -c;
    }
    return lambert_half(2 * k + 1, n) * c;
}

QSeries wp_even_difference(long k, exponent_t n)
{
    if (k < 0) {
        throw out_of_range("wp_even_difference needs k >= 0, got " + std::to_string(k));
    }
    Rational c(ipow(2, static_cast<unsigned long>(2 * k + 4)));
    if (k % 2 == 0) {
        c = -c;
    }
    return lambert_odd(2 * k + 1, n) * c;
}

BivarPoly wp_recurrence_poly(long two_k)
{
    if (two_k < 2 || two_k % 2 != 0) {
        throw out_of_range("wp_recurrence_poly needs an even index >= 2, got " + std::to_string(two_k));
    }
    static std::mutex mutex;
    static std::vector<BivarPoly> chain{BivarPoly::x(), BivarPoly::y()}; // P_0, P_2, ...
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<long>(chain.size()) <= two_k / 2) {
        // Odd derivatives vanish at the half period, so only even j survive.
        const long m = static_cast<long>(chain.size()) - 1; // builds P_(2m+2)
        BivarPoly next;
        for (long j = 0; j <= m; ++j) {
            next += chain[static_cast<std::size_t>(m - j)] * chain[static_cast<std::size_t>(j)]
                    * Rational(binomial(2 * m, 2 * j));
        }
        chain.push_back(next * Rational(6));
    }
    return chain[static_cast<std::size_t>(two_k / 2)];
}

QSeries wp_poly_eval(const BivarPoly &p, exponent_t n)
{
    const QSeries a = theta_power(2, 4, n);
    const QSeries b = theta_power(3, 4, n);
    const QSeries x = (a + b) * Rational(-1, 3);
    const QSeries y = a * b * Rational(2);

    int max_x = 0, max_y = 0;
    for (const auto &[k, c] : p.terms()) {
        max_x = std::max(max_x, k.first);
        max_y = std::max(max_y, k.second);
    }
    std::vector<QSeries> xp{QSeries::one(n)}, yp{QSeries::one(n)};
    for (int i = 1; i <= max_x; ++i) {
        xp.push_back(xp.back() * x);
    }
    for (int i = 1; i <= max_y; ++i) {
        yp.push_back(yp.back() * y);
    }
    QSeries r = QSeries::zero(n);
    for (const auto &[k, c] : p.terms()) {
        r += xp[static_cast<std::size_t>(k.first)] * yp[static_cast<std::size_t>(k.second)] * c;
    }
    return r.truncated(n);
}

QSeries wp_odd_combo_lambert(long k, int sign, exponent_t n)
{
    if (k < 1) {
        throw out_of_range("wp_odd_combo needs k >= 1, got " + std::to_string(k));
    }
    if (sign != 1 && sign != -1) {
        throw invalid_argument("wp_odd_combo sign must be +1 or -1");
    }
    const auto w = [k](long j) { return ipow(2 * j + 1, static_cast<unsigned long>(2 * k)); };
    const auto w_alt = [k](long j) {
        const Integer v = ipow(2 * j + 1, static_cast<unsigned long>(2 * k));
        return j % 2 == 0 ? v : Integer(-v);
    };
    const QSeries a = lambert_sum(w_alt, 8, 4, 16, 8, 1, 0, n);
    const QSeries b = lambert_sum(w, 8, 4, 16, 8, -1, 0, n);
    Rational c(ipow(2, static_cast<unsigned long>(2 * k + 2)));
    if (k % 2 == 0) {
        c = -c;
    }
    return (a - b * Rational(sign)) * c;
}

QSeries wp_odd_combo(long k, int sign, exponent_t n)
{
    const QSeries lambert = wp_odd_combo_lambert(k, sign, n);
    Rational c(ipow(2, static_cast<unsigned long>(2 * k + 3)));
    if (k % 2 == 0) {
        c = -c;
    }
    QSeries sigma = sigma_series(2 * k, sign < 0 ? 1 : 3, n) * c;
    const auto check = equal_to_order(sigma, lambert, n);
    if (!check.equal) {
        throw internal_mismatch("divisor-sum and Lambert forms of the odd combination disagree at u^"
                                + std::to_string(check.mismatch->u_exp));
    }
    return sigma;
}

namespace
{

// cos(n pi / 2)
int cos_quarter(long n)
{
    if (n % 2 != 0) {
        return 0;
    }
    return (n / 2) % 2 == 0 ? 1 : -1;
}

void check_derivative(int d)
{
    if (d < 0 || d > 2) {
        throw out_of_range("special values are tabulated for derivatives 0, 1, 2; got " + std::to_string(d));
    }
}

} // namespace

QSeries wp_value_theta(WpPoint point, int d, exponent_t n)
{
    check_derivative(d);
    const Rational third(1, 3);
    switch (point) {
        case WpPoint::half_lattice_tau: {
            const QSeries a = theta_power(2, 4, n), b = theta_power(3, 4, n);
            if (d == 0) {
                return (a + b) * -third;
            }
            return d == 1 ? QSeries::zero(n) : a * b * Rational(2);
        }
        case WpPoint::half_lattice_both: {
            const QSeries a = theta_power(2, 4, n), c = theta_power(4, 4, n);
            if (d == 0) {
                return (a - c) * third;
            }
            return d == 1 ? QSeries::zero(n) : a * c * Rational(-2);
        }
        case WpPoint::quarter_a: {
            const QSeries a = theta_power(2, 4, n, 2), c = theta_power(4, 4, n, 2);
            if (d == 0) {
                return (theta_power(3, 4, n, 2) - a * Rational(5)) * -third;
            }
            if (d == 1) {
                return theta_power(2, 2, n, 2) * c * Rational(4);
            }
            return a * c * Rational(-16);
        }
        case WpPoint::quarter_b: {
            const QSeries a = theta_power(2, 4, n, 2), b = theta_power(3, 4, n, 2);
            if (d == 0) {
                return (theta_power(4, 4, n, 2) + a * Rational(5)) * -third;
            }
            if (d == 1) {
                return theta_power(2, 2, n, 2) * b * Rational(4);
            }
            return a * b * Rational(16);
        }
    }
    throw internal_mismatch("unreachable special point");
}

QSeries wp_value_lambert(WpPoint point, int d, exponent_t n)
{
    check_derivative(d);
    const QSeries e2_third = e2_series(n) * Rational(-1, 3);
    const auto lam = [n](auto w, long a, long b, long c, long dd, int s, long n0) {
        return lambert_sum(w, a, b, c, dd, s, n0, n);
    };
    switch (point) {
        case WpPoint::half_lattice_tau:
            if (d == 0) {
                return lambert_half(1, n) * Rational(-8) + e2_third;
            }
            return d == 1 ? QSeries::zero(n) : lambert_half(3, n) * Rational(32);
        case WpPoint::half_lattice_both:
            if (d == 0) {
                const auto w = [](long j) { return j % 2 == 0 ? Integer(j) : Integer(-j); };
                return lam(w, 4, 0, 8, 0, 1, 1) * Rational(-8) + e2_third;
            }
            return d == 1 ? QSeries::zero(n) : wp_even_at_half_lattice(1, n) - wp_even_difference(1, n);
        case WpPoint::quarter_a:
            if (d == 0) {
                const auto w = [](long j) { return Integer(j * cos_quarter(j)); };
                return lam(w, 4, 0, 8, 0, 1, 1) * Rational(-8) + e2_third;
            }
            if (d == 1) {
                const auto w = [](long j) { return Integer(chi(j) * j * j); };
                return lam(w, 4, 0, 8, 0, 1, 1) * Rational(16);
            }
            {
                const auto w = [](long j) { return Integer(ipow(j, 3) * cos_quarter(j)); };
                return lam(w, 4, 0, 8, 0, 1, 1) * Rational(32);
            }
        case WpPoint::quarter_b:
            if (d == 0) {
                // E2 at tau + 1/2: 1 - 24 sum n (-1)^n q^(2n) / (1 - (-1)^n q^(2n)).
                const auto w = [](long j) { return j % 2 == 0 ? Integer(j) : Integer(-j); };
                const auto s = [](long j) { return j % 2 == 0 ? 1 : -1; };
                const QSeries e2_shift = QSeries::one(n) - lambert_sum(w, 8, 0, 8, 0, s, 1, n) * Rational(24);
                const auto w2 = [](long j) { return Integer(2 * j); };
                return lam(w2, 8, 0, 16, 0, 1, 1) * Rational(-8) + e2_shift * Rational(-1, 3);
            }
            if (d == 1) {
                const auto w = [](long j) { return j % 2 != 0 ? Integer(j * j) : Integer(0); };
                return lam(w, 4, 0, 8, 0, -1, 1) * Rational(16);
            }
            {
                const auto w = [](long j) { return Integer(ipow(2 * j, 3)); };
                return lam(w, 8, 0, 16, 0, 1, 1) * Rational(32);
            }
    }
    throw internal_mismatch("unreachable special point");
}

} // namespace thetaform
