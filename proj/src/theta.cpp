#include <map>
#include <mutex>
#include <tuple>

#include <thetaform/error.hpp>
#include <thetaform/theta.hpp>

namespace thetaform
{

using exponent_t = QSeries::exponent_t;

QSeries theta_series(int j, const Rational &scale, exponent_t n)
{
    if (j < 2 || j > 4) {
        throw invalid_argument("theta index must be 2, 3 or 4, got " + std::to_string(j));
    }
    if (scale <= 0) {
        throw invalid_argument("theta argument scale must be positive");
    }
    if (n <= 0) {
        return QSeries::zero(n);
    }
    // Rescaled u-exponent of a base exponent; must stay integral.
    const auto rescale = [&](exponent_t e) {
        const Integer num = scale.get_num() * e;
        if (num % scale.get_den() != 0) {
            throw non_integral_exponent("theta" + std::to_string(j) + " at scale " + scale.get_str()
                                        + " needs the fractional u-exponent " + Rational(num, scale.get_den()).get_str());
        }
        const Integer r = num / scale.get_den();
        return r.fits_slong_p() && r < n ? static_cast<exponent_t>(r.get_si()) : n;
    };
    std::vector<Rational> c(static_cast<std::size_t>(n));
    if (j == 2) {
        for (long k = 0;; ++k) {
            const exponent_t e = rescale(1 + 4 * k * (k + 1));
            if (e >= n) {
                break;
            }
            c[static_cast<std::size_t>(e)] += 2;
        }
    } else {
        c[0] = 1;
        for (long k = 1;; ++k) {
            const exponent_t e = rescale(4 * k * k);
            if (e >= n) {
                break;
            }
            c[static_cast<std::size_t>(e)] += (j == 4 && k % 2 != 0) ? -2 : 2;
        }
    }
    return QSeries::from_coefficients(0, std::move(c), n);
}

QSeries theta_series(int j, exponent_t n)
{
    return theta_series(j, Rational(1), n);
}

QSeries theta_power(int j, long k, exponent_t n, long m)
{
    using key_t = std::tuple<int, long, exponent_t, long>;
    static std::mutex mutex;
    static std::map<key_t, QSeries> cache;
    const key_t key{j, k, n, m};
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    QSeries r = pow(theta_series(j, Rational(m), n), k);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(r)).first->second;
}

QSeries at_half_argument(const QSeries &s)
{
    return contract_q_power(s, 2);
}

QSeries at_double_argument(const QSeries &s)
{
    return substitute_q_power(s, 2);
}

EValues e_values(exponent_t n)
{
    const QSeries a = theta_power(2, 4, n);
    const QSeries b = theta_power(3, 4, n);
    const QSeries c = theta_power(4, 4, n);
    const Rational third(1, 3);
    return EValues{(b + c) * third, (a + b) * -third, (a - c) * third};
}

GInvariants g_invariants(exponent_t n)
{
    const QSeries one = QSeries::one(n);
    const auto cube = [](long j) { return ipow(j, 3); };
    const auto fifth = [](long j) { return ipow(j, 5); };
    QSeries g2 = (one + lambert_sum(cube, 8, 0, 8, 0, 1, 1, n) * Rational(240)) * Rational(4, 3);
    QSeries g3 = (one - lambert_sum(fifth, 8, 0, 8, 0, 1, 1, n) * Rational(504)) * Rational(8, 27);

    const EValues e = e_values(n);
    const QSeries from_e2 = (e.e1 * e.e2 + e.e1 * e.e3 + e.e2 * e.e3) * Rational(-4);
    const QSeries from_e3 = e.e1 * e.e2 * e.e3 * Rational(4);
    const auto c2 = equal_to_order(g2, from_e2, n);
    const auto c3 = equal_to_order(g3, from_e3, n);
    if (!c2.equal || !c3.equal) {
        const auto &m = c2.equal ? *c3.mismatch : *c2.mismatch;
        throw internal_mismatch(std::string(c2.equal ? "g3" : "g2") + " disagrees with the e-values at u^"
                                + std::to_string(m.u_exp));
    }
    return GInvariants{std::move(g2), std::move(g3)};
}

QSeries e2_series(exponent_t n)
{
    return QSeries::one(n) - lambert_sum([](long j) { return Integer(j); }, 8, 0, 8, 0, 1, 1, n) * Rational(24);
}

} // namespace thetaform
