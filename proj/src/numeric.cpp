#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <thetaform/arith.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/error.hpp>
#include <thetaform/numeric.hpp>

namespace thetaform
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr long max_series_terms = 1'000'000;

void check_floor(complex_t tau, double im_floor)
{
    if (!(tau.imag() > 0)) {
        throw invalid_argument("tau must lie in the upper half-plane");
    }
    if (tau.imag() < im_floor) {
        std::ostringstream os;
        os << "im(tau) = " << tau.imag() << " is below the convergence floor " << im_floor;
        throw convergence_too_slow(os.str());
    }
}

complex_t nome(complex_t tau)
{
    return std::exp(complex_t(0, pi) * tau);
}

double rel_error(complex_t lhs, complex_t rhs)
{
    const double scale = std::abs(rhs);
    return scale > 0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
}

long mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

ComplexPoint::ComplexPoint(double re_, double im_) : re(re_), im(im_)
{
    if (!(im > 0)) {
        throw invalid_argument("point must lie in the upper half-plane, got im = " + std::to_string(im));
    }
}

SL2Matrix::SL2Matrix(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_)
{
    if (a * d - b * c != 1) {
        throw invalid_argument("matrix " + to_string(*this) + " has determinant " + std::to_string(a * d - b * c));
    }
}

SL2Matrix operator*(const SL2Matrix &x, const SL2Matrix &y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string to_string(const SL2Matrix &m)
{
    return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + ";" + std::to_string(m.c) + ","
           + std::to_string(m.d) + ")";
}

NumericValue eval_theta(int j, complex_t tau, double rel_tol, double im_floor)
{
    if (j < 2 || j > 4) {
        throw invalid_argument("theta index must be 2, 3 or 4, got " + std::to_string(j));
    }
    check_floor(tau, im_floor);
    const complex_t q = nome(tau);
    NumericValue out;
    if (j == 2) {
        // 2 q^(1/4) sum q^(n(n+1)); consecutive exponents differ by 2(n+1).
        complex_t term = 1, sum = 0, step = q * q;
        for (long n = 0;; ++n) {
            sum += term;
            ++out.terms;
            term *= step;
            step *= q * q;
            if (std::abs(term) < rel_tol * std::abs(sum)) {
                break;
            }
            if (out.terms > max_series_terms) {
                throw convergence_too_slow("theta2 did not converge");
            }
        }
        out.value = 2.0 * std::exp(complex_t(0, pi / 4) * tau) * sum;
        return out;
    }
    // 1 + 2 sum (+-1)^n q^(n^2); consecutive exponents differ by 2n + 1.
    const complex_t sq = j == 3 ? q : -q;
    complex_t term = sq, sum = 0, step = sq * q * q;
    for (;;) {
        sum += term;
        ++out.terms;
        term *= step;
        step *= q * q;
        if (std::abs(term) < rel_tol * std::abs(1.0 + 2.0 * sum)) {
            break;
        }
        if (out.terms > max_series_terms) {
            throw convergence_too_slow("theta series did not converge");
        }
    }
    out.value = 1.0 + 2.0 * sum;
    return out;
}

NumericValue eval_eta(complex_t tau, double rel_tol, double im_floor)
{
    check_floor(tau, im_floor);
    const complex_t q2 = std::exp(complex_t(0, 2 * pi) * tau);
    complex_t prod = 1, p = q2;
    NumericValue out;
    while (std::abs(p) >= rel_tol) {
        prod *= 1.0 - p;
        p *= q2;
        if (++out.terms > max_series_terms) {
            throw convergence_too_slow("eta product did not converge");
        }
    }
    out.value = std::exp(complex_t(0, pi / 12) * tau) * prod;
    return out;
}

complex_t eval_series(const QSeries &s, complex_t tau)
{
    const complex_t u = std::exp(complex_t(0, pi / 4) * tau);
    const auto c = s.coefficients();
    // Horner from the top coefficient.
    complex_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * u + c[i].get_d();
    }
    return acc * std::pow(u, static_cast<double>(s.min_exp()));
}

int psi_multiplier(const SL2Matrix &sigma)
{
    if (mod(sigma.c, 2) != 0) {
        throw odd_c("matrix " + to_string(sigma) + " is not in Gamma_0(2): c is odd");
    }
    // d is odd here; theta2^2(sigma tau) / (c tau + d) changes sign with sigma.
    SL2Matrix m = sigma;
    int extra = 0;
    if (m.d < 0) {
        m = -m;
        extra = 4;
    }
    const long e = mod(m.c, 4) == 2 ? m.a * m.b + m.a - 1 : m.b * m.d + m.d - 1;
    return static_cast<int>(mod(2 * mod(e, 4) + extra, 8));
}

complex_t phase(int index)
{
    static const std::array<complex_t, 8> table = [] {
        std::array<complex_t, 8> t{};
        const double h = std::sqrt(0.5);
        t = {complex_t(1, 0), complex_t(h, h),   complex_t(0, 1),  complex_t(-h, h),
             complex_t(-1, 0), complex_t(-h, -h), complex_t(0, -1), complex_t(h, -h)};
        return t;
    }();
    return table[static_cast<std::size_t>(mod(index, 8))];
}

NumericCheck transform_check(const SL2Matrix &sigma, complex_t tau, long power, double tol, double im_floor)
{
    if (power < 2 || power % 2 != 0) {
        throw invalid_argument("transformation power must be even and positive, got " + std::to_string(power));
    }
    const int p = psi_multiplier(sigma);
    const complex_t st = sigma.apply(tau);
    const NumericValue lhs_t = eval_theta(2, st, 1e-17, im_floor);
    const NumericValue rhs_t = eval_theta(2, tau, 1e-17, im_floor);
    const long k = power / 2;
    const complex_t lhs = std::pow(lhs_t.value, static_cast<double>(power));
    const complex_t rhs = phase(static_cast<int>(mod(p * k, 8))) * std::pow(sigma.automorphy(tau), double(k))
                          * std::pow(rhs_t.value, static_cast<double>(power));
    NumericCheck r;
    r.error = rel_error(lhs, rhs);
    r.tol = tol;
    r.terms = lhs_t.terms + rhs_t.terms;
    r.pass = r.error < tol;
    r.detail = "sigma " + to_string(sigma) + ", psi index " + std::to_string(p);
    return r;
}

int extract_phase(const SL2Matrix &sigma, complex_t tau, double *error)
{
    const complex_t r = std::pow(eval_theta(2, sigma.apply(tau)).value, 2.0)
                        / (sigma.automorphy(tau) * std::pow(eval_theta(2, tau).value, 2.0));
    const int idx = static_cast<int>(mod(std::lround(std::arg(r) / (pi / 4)), 8));
    if (error) {
        *error = std::abs(r - phase(idx));
    }
    return idx;
}

NumericCheck dedekind_eta_check(const SL2Matrix &sigma, complex_t tau, double tol, EtaBranch branch)
{
    const bool d_ok = sigma.d > 0 && mod(sigma.d, 2) == 1;
    const bool c_ok = sigma.c > 0 && mod(sigma.c, 2) == 1;
    if (branch == EtaBranch::automatic) {
        if (d_ok) {
            branch = EtaBranch::d_odd;
        } else if (c_ok) {
            branch = EtaBranch::c_odd;
        } else {
            throw branch_unavailable("eta transformation needs d odd positive or c odd positive, got "
                                     + to_string(sigma));
        }
    }
    if ((branch == EtaBranch::d_odd && !d_ok) || (branch == EtaBranch::c_odd && !c_ok)) {
        throw branch_unavailable("requested eta branch does not apply to " + to_string(sigma));
    }
    const long a = sigma.a, b = sigma.b, c = sigma.c, d = sigma.d;
    const complex_t j = sigma.automorphy(tau);
    complex_t factor;
    if (branch == EtaBranch::d_odd) {
        const long e = d * (b - c) + a * c * (1 - d * d) + 3 * d - 3;
        factor = double(kronecker(c, d)) * std::exp(complex_t(0, pi * double(mod(e, 24)) / 12)) * std::sqrt(j);
    } else {
        const long e = c * (a + d) + b * d * (1 - c * c) - 3 * c + 3;
        factor = double(kronecker(d, c)) * std::exp(complex_t(0, pi * double(mod(e, 24)) / 12))
                 * std::sqrt(complex_t(0, -1) * j);
    }
    const NumericValue lhs = eval_eta(sigma.apply(tau));
    const NumericValue rhs = eval_eta(tau);
    NumericCheck r;
    r.error = rel_error(lhs.value, factor * rhs.value);
    r.tol = tol;
    r.terms = lhs.terms + rhs.terms;
    r.pass = r.error < tol;
    r.detail = std::string(branch == EtaBranch::d_odd ? "d-odd" : "c-odd") + " branch, sigma " + to_string(sigma);
    return r;
}

NumericCheck theta_eta_check(int j, complex_t tau, double tol)
{
    const complex_t e1 = eval_eta(tau).value;
    complex_t rhs;
    switch (j) {
        case 2:
            rhs = 2.0 * std::pow(eval_eta(2.0 * tau).value, 2.0) / e1;
            break;
        case 3:
            rhs = std::pow(e1, 5.0) / (std::pow(eval_eta(tau / 2.0).value, 2.0) * std::pow(eval_eta(2.0 * tau).value, 2.0));
            break;
        case 4:
            rhs = std::pow(eval_eta(tau / 2.0).value, 2.0) / e1;
            break;
        default:
            throw invalid_argument("theta index must be 2, 3 or 4, got " + std::to_string(j));
    }
    const NumericValue lhs = eval_theta(j, tau);
    NumericCheck r;
    r.error = rel_error(lhs.value, rhs);
    r.tol = tol;
    r.terms = lhs.terms;
    r.pass = r.error < tol;
    r.detail = "theta" + std::to_string(j) + " as an eta quotient";
    return r;
}

std::string to_string(LatticeFamily f)
{
    switch (f) {
        case LatticeFamily::m4k:
            return "M4K";
        case LatticeFamily::m4k2_star:
            return "M4K2STAR";
        case LatticeFamily::m2k1_chi:
            return "M2K1CHI";
    }
    return "unknown";
}

LatticeFamily parse_lattice_family(const std::string &s)
{
    for (const auto f : {LatticeFamily::m4k, LatticeFamily::m4k2_star, LatticeFamily::m2k1_chi}) {
        if (s == to_string(f)) {
            return f;
        }
    }
    throw invalid_argument("unknown lattice family '" + s + "'; expected M4K, M4K2STAR or M2K1CHI");
}

namespace
{

// One sum  sum_{m, n} s(m, n) / (alpha m + beta n + gamma)^w  with |s| <= 1,
// n running over all integers or only odd ones.
struct LatticeLine {
    double alpha;
    complex_t beta;
    complex_t gamma;
    bool odd_n;
};

// int_{-inf}^{inf} (t^2 + 1)^(-w/2) dt
double line_integral_constant(long w)
{
    return std::sqrt(pi) * std::tgamma((double(w) - 1) / 2) / std::tgamma(double(w) / 2);
}

// Bound on sum over t > N of C (a t - b)^(1-w) + (a t - b)^(-w), by the integral
// from N (both functions decrease once a t > b).
double decreasing_tail(double C, double a, double b, double N, long w)
{
    const double x = a * N - b;
    if (!(x > 0) || !(a > 0)) {
        throw cutoff_too_small("lattice tail bound needs a larger cutoff");
    }
    return (C * std::pow(x, double(2 - w)) / double(w - 2) + std::pow(x, double(1 - w)) / double(w - 1)) / a;
}

// Bound on the terms with |m| > R or |n| > R. For a fixed n the m-sum of a
// unimodal sequence is at most its integral plus its maximum:
//   sum_m |alpha m + z|^(-w) <= c_w |Im z|^(1-w) / alpha + |Im z|^(-w).
// Rows |n| > R use that with |Im z| >= Im(beta) |n| - |Im gamma|; columns
// |m| > R use the same estimate along n after rotating beta onto the real axis.
double lattice_tail(const LatticeLine &L, long w, long R)
{
    const double cw = line_integral_constant(w);
    // Rows with |n| > R, both signs of n.
    const double a = L.beta.imag();
    const double b = std::abs(L.gamma.imag());
    double rows;
    if (L.odd_n) {
        // Odd n >= R + 1: each term is at most half the integral over [n - 2, n].
        rows = decreasing_tail(cw / L.alpha, a, b, double(R - 1), w);
    } else {
        rows = 2 * decreasing_tail(cw / L.alpha, a, b, double(R), w);
    }
    // Columns with |m| > R, summed over every n.
    const double nb = std::abs(L.beta);
    const double a2 = L.alpha * L.beta.imag() / nb;
    const double b2 = std::abs((L.gamma * std::conj(L.beta)).imag()) / nb;
    const double C2 = cw / (L.odd_n ? 2 * nb : nb);
    const double cols = 2 * decreasing_tail(C2, a2, b2, double(R), w);
    return rows + cols;
}

double factorial(long n)
{
    double f = 1;
    for (long i = 2; i <= n; ++i) {
        f *= double(i);
    }
    return f;
}

complex_t inv_power(complex_t z, long w)
{
    const complex_t iz = 1.0 / z;
    complex_t r = 1;
    for (long i = 0; i < w; ++i) {
        r *= iz;
    }
    return r;
}

// u-order at which the omitted q-side terms are negligible at tau: the
// coefficient of u^e is at most e^(w+1) in absolute value for every family
// used, so |u|^N N^(w+1) < 1e-20 bounds each omitted term.
QSeries::exponent_t series_order(complex_t tau, long w)
{
    const double s = pi * tau.imag() / 4;
    QSeries::exponent_t n = 16;
    while (s * double(n) < 46 + double(w + 1) * std::log(double(n))) {
        n += 16;
    }
    return n;
}

// Square shells max(|m|, |j|) = r accumulated separately, then added in r order.
template <class F>
complex_t shell_sum(long R, long j_lo, long j_hi, F &&term, long &points)
{
    std::vector<complex_t> shells(static_cast<std::size_t>(R + 1) + 1);
    for (long j = j_lo; j <= j_hi; ++j) {
        for (long m = -R; m <= R; ++m) {
            const long r = std::max(std::abs(m), std::abs(j));
            shells[static_cast<std::size_t>(std::min(r, R + 1))] += term(m, j);
            ++points;
        }
    }
    complex_t s = 0;
    for (const auto &x : shells) {
        s += x;
    }
    return s;
}

} // namespace

LatticeComparison lattice_compare(LatticeFamily family, long k, complex_t tau, long cutoff)
{
    if (!(tau.imag() > 0)) {
        throw invalid_argument("tau must lie in the upper half-plane");
    }
    if (k < 1) {
        throw invalid_argument("lattice family index k must be >= 1, got " + std::to_string(k));
    }
    if (cutoff < 2) {
        throw cutoff_too_small("cutoff must be at least 2, got " + std::to_string(cutoff));
    }
    const long R = cutoff;
    LatticeComparison out;
    switch (family) {
        case LatticeFamily::m4k:
        case LatticeFamily::m4k2_star: {
            const bool star = family == LatticeFamily::m4k2_star;
            const long w = star ? 4 * k + 2 : 4 * k;
            // n = 2j + 1 odd with |n| <= R.
            const long j_lo = -(R + 1) / 2, j_hi = (R - 1) / 2;
            const complex_t s = shell_sum(
                R, j_lo, j_hi,
                [&](long m, long j) {
                    const complex_t z = double(m) + double(2 * j + 1) * tau;
                    const complex_t t = inv_power(z, w);
                    return star && (m % 2 != 0) ? -t : t;
                },
                out.points);
            const double pre = star ? factorial(w - 1) * std::pow(2.0 / pi, double(w)) : factorial(w - 1) / std::pow(pi, double(w));
            out.lattice = pre * s;
            out.tail = pre * lattice_tail({1.0, tau, 0.0, true}, w, R);
            const QSeries::exponent_t n = series_order(tau, w);
            const QSeries q = star ? lambert_odd(w - 1, n) * Rational(-Integer(ipow(2, static_cast<unsigned long>(w + 2))))
                                   : lambert_even(w - 1, n) * Rational(ipow(2, static_cast<unsigned long>(w + 1)));
            out.q_side = eval_series(q, tau);
            return out;
        }
        case LatticeFamily::m2k1_chi: {
            const long w = 2 * k + 1;
            const complex_t second = complex_t(0, k % 2 == 1 ? 1.0 : -1.0); // (-1)^(k+1) i
            const complex_t s1 = shell_sum(
                R, -R, R, [&](long m, long n) { return inv_power(double(4 * m + 1) + double(2 * n + 1) * tau, w); },
                out.points);
            const complex_t s2 = shell_sum(
                R, -R, R,
                [&](long m, long n) { return inv_power(double(4 * m + 2 * n + 2) + double(2 * n + 1) * tau, w); },
                out.points);
            const double pre = factorial(2 * k) * std::pow(4.0 / pi, double(w));
            out.lattice = pre * (s1 + second * s2);
            out.tail = pre
                       * (lattice_tail({4.0, 2.0 * tau, 1.0 + tau, false}, w, R)
                          + lattice_tail({4.0, 2.0 + 2.0 * tau, 2.0 + tau, false}, w, R));
            const long r = k % 2 == 0 ? 1 : 3;
            const complex_t half_tau = tau / 2.0;
            const QSeries::exponent_t n = series_order(half_tau, w);
            Rational c(ipow(2, static_cast<unsigned long>(2 * k + 3)));
            if (k % 2 != 0) {
                c = -c;
            }
            // sigma_series places q^(4j+r) at u^(4(4j+r)); at tau/2 that is q^((4j+r)/2).
            out.q_side = eval_series(sigma_series(2 * k, r, n) * c, half_tau);
            return out;
        }
    }
    throw invalid_argument("unknown lattice family");
}

NumericCheck lattice_sum_check(LatticeFamily family, long k, complex_t tau, long cutoff, double tol)
{
    const LatticeComparison c = lattice_compare(family, k, tau, cutoff);
    if (c.tail > tol) {
        std::ostringstream os;
        os << "tail bound " << c.tail << " exceeds tolerance " << tol << " at cutoff " << cutoff;
        throw cutoff_too_small(os.str());
    }
    NumericCheck r;
    r.error = std::abs(c.lattice - c.q_side);
    r.tol = tol;
    r.tail = c.tail;
    r.cutoff = cutoff;
    r.terms = c.points;
    r.pass = r.error <= tol + c.tail;
    r.detail = to_string(family) + " k=" + std::to_string(k);
    return r;
}

SL2Matrix random_gamma0_2_word(std::mt19937_64 &rng, int max_len)
{
    static const std::array<SL2Matrix, 4> letters = {gen_t, gen_s, SL2Matrix{1, -1, 0, 1}, SL2Matrix{1, 0, 2, 1}};
    std::uniform_int_distribution<int> len(1, std::max(1, max_len));
    std::uniform_int_distribution<int> pick(0, 3);
    SL2Matrix m;
    for (int i = len(rng); i > 0; --i) {
        m = m * letters[static_cast<std::size_t>(pick(rng))];
    }
    return m;
}

complex_t random_tau(std::mt19937_64 &rng, double im_lo, double im_hi)
{
    std::uniform_real_distribution<double> re(-1.0, 1.0);
    std::uniform_real_distribution<double> im(im_lo, im_hi);
    const double x = re(rng);
    return {x, im(rng)};
}

bool random_tau_for(std::mt19937_64 &rng, const SL2Matrix &sigma, complex_t &tau, double im_floor, int attempts)
{
    for (int i = 0; i < attempts; ++i) {
        const complex_t t = random_tau(rng);
        if (sigma.apply(t).imag() >= im_floor) {
            tau = t;
            return true;
        }
    }
    return false;
}

} // namespace thetaform
