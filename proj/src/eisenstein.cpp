#include <algorithm>
#include <sstream>

#include <thetaform/arith.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/error.hpp>

namespace thetaform
{

using exponent_t = QSeries::exponent_t;

namespace
{

Integer odd_power(long n, long p)
{
    return ipow(2 * n + 1, static_cast<unsigned long>(p));
}

} // namespace

QSeries lambert_a(long p, exponent_t n)
{
    return lambert_sum([p](long j) { return odd_power(j, p); }, 4, 2, 8, 4, -1, 0, n);
}

QSeries lambert_b(long p, exponent_t n)
{
    return lambert_sum([p](long j) { return j % 2 == 0 ? odd_power(j, p) : Integer(-odd_power(j, p)); }, 4, 2, 8, 4, 1,
                       0, n);
}

QSeries lambert_odd(long p, exponent_t n)
{
    return lambert_sum([p](long j) { return odd_power(j, p); }, 8, 4, 16, 8, 1, 0, n);
}

QSeries lambert_even(long p, exponent_t n)
{
    return lambert_sum([p](long j) { return ipow(j, static_cast<unsigned long>(p)); }, 8, 0, 16, 0, 1, 1, n);
}

QSeries lambert_half(long p, exponent_t n)
{
    return lambert_sum([p](long j) { return ipow(j, static_cast<unsigned long>(p)); }, 4, 0, 8, 0, 1, 1, n);
}

QSeries sigma_series(long k, long r, exponent_t n)
{
    if (r != 1 && r != 3) {
        throw invalid_argument("sigma_series residue must be 1 or 3, got " + std::to_string(r));
    }
    return QSeries::tabulate(0, n, [k, r](exponent_t e) {
        if (e % 4 != 0) {
            return Rational(0);
        }
        const exponent_t m = e / 4;
        return m % 4 == r ? Rational(sigma_chi(k, m)) : Rational(0);
    });
}

std::string to_string(EisFamily f)
{
    switch (f) {
        case EisFamily::w8k:
            return "W8K";
        case EisFamily::w8k4:
            return "W8K4";
        case EisFamily::w8k2:
            return "W8K2";
        case EisFamily::w8k_minus2:
            return "W8K_MINUS2";
    }
    return "?";
}

EisensteinSpec eisenstein_spec(long two_k)
{
    if (two_k < 2 || two_k % 2 != 0) {
        throw unsupported_power("theta2 power must be even and at least 2, got " + std::to_string(two_k));
    }
    EisensteinSpec s;
    switch (two_k % 8) {
        case 0: {
            const long k = two_k / 8;
            s.family = EisFamily::w8k;
            s.k = k;
            s.constant = Rational(Integer(ipow(2, static_cast<unsigned long>(4 * k + 3)) * k))
                         / (Rational(1 - ipow(2, static_cast<unsigned long>(4 * k))) * bernoulli(4 * k));
            break;
        }
        case 4: {
            const long k = (two_k - 4) / 8;
            s.family = EisFamily::w8k4;
            s.k = k;
            s.constant = Rational(-8 * (2 * k + 1))
                         / (Rational(1 - ipow(2, static_cast<unsigned long>(4 * k + 2))) * bernoulli(4 * k + 2));
            break;
        }
        case 2: {
            const long k = (two_k - 2) / 8;
            s.family = EisFamily::w8k2;
            s.k = k;
            if (k == 0) {
                s.special = true;
                s.constant = 4;
            } else {
                s.constant = Rational(4) / Rational(euler_number(4 * k));
                s.sigma_constant = Rational(8) / Rational(euler_number(4 * k));
            }
            break;
        }
        default: {
            const long k = (two_k + 2) / 8;
            s.family = EisFamily::w8k_minus2;
            s.k = k;
            s.constant = Rational(-4) / Rational(euler_number(4 * k - 2));
            s.sigma_constant = Rational(8) / Rational(euler_number(4 * k - 2));
            break;
        }
    }
    s.constant.canonicalize();
    if (s.sigma_constant) {
        s.sigma_constant->canonicalize();
    }
    return s;
}

std::pair<Rational, QSeries> eis_series(long two_k, exponent_t n, EisForm form)
{
    const EisensteinSpec s = eisenstein_spec(two_k);
    switch (s.family) {
        case EisFamily::w8k:
            return {s.constant, lambert_even(4 * s.k - 1, n)};
        case EisFamily::w8k4:
            return {s.constant, lambert_odd(4 * s.k + 1, n)};
        case EisFamily::w8k2:
            if (s.special) {
                if (form == EisForm::sigma) {
                    throw unsupported_power("theta2^2 has no divisor-sum form in the 8k + 2 family (k = 0)");
                }
                return {s.constant, lambert_b(0, n)};
            }
            if (form == EisForm::sigma) {
                return {*s.sigma_constant, contract_q_power(sigma_series(4 * s.k, 1, 2 * n), 2)};
            }
            return {s.constant, lambert_a(4 * s.k, n) + lambert_b(4 * s.k, n)};
        case EisFamily::w8k_minus2:
            if (form == EisForm::sigma) {
                return {*s.sigma_constant, contract_q_power(sigma_series(4 * s.k - 2, 3, 2 * n), 2)};
            }
            return {s.constant, lambert_a(4 * s.k - 2, n) - lambert_b(4 * s.k - 2, n)};
    }
    throw internal_mismatch("unreachable Eisenstein family");
}

bool PalinPoly::is_palindromic() const
{
    std::size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo] == 0) {
        ++lo;
    }
    if (lo == coeffs.size()) {
        return true;
    }
    std::size_t hi = coeffs.size() - 1;
    while (lo < hi) {
        if (coeffs[lo] != coeffs[hi]) {
            return false;
        }
        ++lo;
        --hi;
    }
    return true;
}

std::string PalinPoly::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Integer &c = coeffs[i];
        if (c == 0) {
            continue;
        }
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        const Integer mag = abs(c);
        if (mag != 1 || i == 0) {
            os << mag.get_str();
        }
        if (i > 0) {
            os << "x";
            if (i > 1) {
                os << "^" << i;
            }
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

namespace
{

void check_poly_index(long n)
{
    if (n < 1) {
        throw out_of_range("polynomial index must be at least 1, got " + std::to_string(n));
    }
}

void trim(std::vector<Integer> &c)
{
    while (c.size() > 1 && c.back() == 0) {
        c.pop_back();
    }
}

} // namespace

PalinPoly palin_p(long n)
{
    check_poly_index(n);
    std::vector<Integer> p{1};
    for (long m = 1; m < n; ++m) {
        // m x p + x p' - x^2 p'
        std::vector<Integer> next(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const long d = static_cast<long>(i);
            next[i + 1] += m * p[i];
            if (d > 0) {
                next[i] += d * p[i];
                next[i + 1] -= d * p[i];
            }
        }
        trim(next);
        p = std::move(next);
    }
    return PalinPoly{p};
}

PalinPoly palin_P(long n)
{
    check_poly_index(n);
    std::vector<Integer> p{1};
    for (long m = 1; m < n; ++m) {
        // ((2m - 1) x + 1) P + 2 x P' - 2 x^2 P'
        std::vector<Integer> next(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const long d = static_cast<long>(i);
            next[i] += p[i];
            next[i + 1] += (2 * m - 1) * p[i];
            if (d > 0) {
                next[i] += 2 * d * p[i];
                next[i + 1] -= 2 * d * p[i];
            }
        }
        trim(next);
        p = std::move(next);
    }
    return PalinPoly{p};
}

Integer alternating_binomial_sum(long m, long n, long jmax)
{
    if (n < 1) {
        throw out_of_range("alternating binomial sum needs n >= 1, got " + std::to_string(n));
    }
    Integer s = 0;
    for (long j = 0; j <= jmax; ++j) {
        const Integer t = binomial(n, j) * ipow(Integer(m - j), static_cast<unsigned long>(n - 1));
        s += (j % 2 == 0) ? t : Integer(-t);
    }
    return s;
}

Integer coeff_closed_form(long m, long n)
{
    if (n < 2 || m < 1 || m > n - 1) {
        throw out_of_range("closed form needs 1 <= m <= n - 1, got m = " + std::to_string(m)
                           + ", n = " + std::to_string(n));
    }
    return alternating_binomial_sum(m, n, m);
}

IdentityCertificate lambert_partial_fraction_check(long k, exponent_t n, PartialFractionFamily family)
{
    if (k < 1) {
        throw out_of_range("partial fraction check needs k >= 1, got " + std::to_string(k));
    }
    const bool big = family == PartialFractionFamily::P;
    const QSeries lhs = big ? lambert_sum([k](long j) { return odd_power(j, k - 1); }, 4, 0, 8, 0, 1, 1, n)
                            : lambert_half(k - 1, n);

    const PalinPoly poly = big ? palin_P(k) : palin_p(k);
    const bool drop_constant = big || k == 1;

    // Expand poly(x) / (1 - x)^k in x once, then place it at x = u^(4(2j+1)).
    std::vector<Integer> acc(static_cast<std::size_t>(std::max<exponent_t>(n, 0)));
    for (long j = 0; 4 * (2 * j + 1) < n; ++j) {
        const exponent_t step = 4 * (2 * j + 1);
        const exponent_t terms = (n - 1) / step + 1;
        for (exponent_t t = 0; t < terms; ++t) {
            // coefficient of x^t: sum_i poly_i C(t - i + k - 1, k - 1)
            Integer c = 0;
            for (std::size_t i = 0; i < poly.coeffs.size() && static_cast<exponent_t>(i) <= t; ++i) {
                c += poly.coeffs[i] * binomial(static_cast<long>(t - static_cast<exponent_t>(i)) + k - 1, k - 1);
            }
            if (t == 0 && drop_constant) {
                c -= 1;
            }
            acc[static_cast<std::size_t>(t * step)] += c;
        }
    }
    std::vector<Rational> rc(acc.begin(), acc.end());
    const QSeries rhs = QSeries::from_coefficients(0, std::move(rc), n);
    return certify(std::string(big ? "partial-fraction-P" : "partial-fraction-p") + std::to_string(k), lhs, rhs,
                   n);
}

} // namespace thetaform
