#ifndef THETAFORM_NUMERIC_HPP
#define THETAFORM_NUMERIC_HPP

#include <complex>
#include <random>
#include <string>

#include <thetaform/series.hpp>

namespace thetaform
{

using complex_t = std::complex<double>;

// A point of the upper half-plane; construction throws invalid_argument for
// im <= 0.
struct ComplexPoint {
    double re = 0;
    double im = 1;

    ComplexPoint() = default;
    ComplexPoint(double re, double im);
    explicit ComplexPoint(complex_t z) : ComplexPoint(z.real(), z.imag()) {}

    complex_t value() const
    {
        return {re, im};
    }
};

// Integer matrix with ad - bc = 1 (invalid_argument otherwise).
struct SL2Matrix {
    long a = 1, b = 0, c = 0, d = 1;

    SL2Matrix() = default;
    SL2Matrix(long a, long b, long c, long d);

    complex_t apply(complex_t tau) const
    {
        return (double(a) * tau + double(b)) / (double(c) * tau + double(d));
    }
    complex_t automorphy(complex_t tau) const
    {
        return double(c) * tau + double(d);
    }
    SL2Matrix operator-() const
    {
        return {-a, -b, -c, -d};
    }
    friend SL2Matrix operator*(const SL2Matrix &x, const SL2Matrix &y);
    friend bool operator==(const SL2Matrix &, const SL2Matrix &) = default;
};

std::string to_string(const SL2Matrix &m);

// Generators of Gamma_0(2).
inline const SL2Matrix gen_t{1, 1, 0, 1};
inline const SL2Matrix gen_s{1, 0, -2, 1};

inline constexpr double default_im_floor = 0.05;
inline constexpr double default_theta_tol = 1e-9;
inline constexpr double default_lattice_tol = 1e-6;

struct NumericValue {
    complex_t value;
    long terms = 0;
};

// theta_j(0 | tau) with q = exp(pi i tau), summed until a term drops below
// rel_tol times the running sum. Throws convergence_too_slow when
// im(tau) < im_floor.
NumericValue eval_theta(int j, complex_t tau, double rel_tol = 1e-17, double im_floor = default_im_floor);

// eta(tau) = exp(pi i tau / 12) prod (1 - exp(2 pi i n tau)).
NumericValue eval_eta(complex_t tau, double rel_tol = 1e-17, double im_floor = default_im_floor);

// sum c_e u^e at u = exp(pi i tau / 4).
complex_t eval_series(const QSeries &s, complex_t tau);

// Multiplier in theta2^2(sigma tau) = psi(sigma) (c tau + d) theta2^2(tau),
// as an index p with psi = exp(pi i p / 4), 0 <= p < 8. Throws odd_c.
int psi_multiplier(const SL2Matrix &sigma);
complex_t phase(int index);

struct NumericCheck {
    bool pass = false;
    double error = 0; // relative for theta/eta checks, absolute for lattice sums
    double tol = 0;
    long terms = 0;   // series terms summed (theta/eta) or lattice points (lattice)
    long cutoff = 0;
    double tail = 0;  // rigorous bound on the omitted lattice terms
    std::string detail;
};

// theta2^power(sigma tau) against psi^(power/2) (c tau + d)^(power/2) theta2^power(tau).
// power even and positive; sigma in Gamma_0(2) (odd_c otherwise); both tau and
// sigma tau above im_floor (convergence_too_slow otherwise).
NumericCheck transform_check(const SL2Matrix &sigma, complex_t tau, long power, double tol = default_theta_tol,
                             double im_floor = default_im_floor);

// Phase index of theta2^2(sigma tau) / ((c tau + d) theta2^2(tau)) rounded to
// the nearest eighth root of unity; `error` receives the distance to it.
int extract_phase(const SL2Matrix &sigma, complex_t tau, double *error = nullptr);

enum class EtaBranch {
    automatic, // d odd and positive if possible, else c odd and positive
    d_odd,
    c_odd,
};

// eta(sigma tau) against the Kronecker-symbol multiplier times sqrt(c tau + d) eta(tau)
// (d odd > 0) or sqrt(-i (c tau + d)) eta(tau) (c odd > 0). Throws
// branch_unavailable when the requested branch's precondition fails.
NumericCheck dedekind_eta_check(const SL2Matrix &sigma, complex_t tau, double tol = default_theta_tol,
                                EtaBranch branch = EtaBranch::automatic);

// theta2 = 2 eta^2(2 tau) / eta(tau), theta3 = eta^5(tau) / (eta^2(tau/2) eta^2(2 tau)),
// theta4 = eta^2(tau/2) / eta(tau).
NumericCheck theta_eta_check(int j, complex_t tau, double tol = default_theta_tol);

enum class LatticeFamily {
    m4k,       // sum chi_2(n) / (m + n tau)^(4k)
    m4k2_star, // sum (-1)^m chi_2(n) / (m + n tau)^(4k+2)
    m2k1_chi,  // sum 1/(4m+1+(2n+1)tau)^(2k+1) + (-1)^(k+1) i sum 1/(4m+2n+2+(2n+1)tau)^(2k+1)
};

std::string to_string(LatticeFamily f);
// "M4K", "M4K2STAR", "M2K1CHI"; throws invalid_argument otherwise.
LatticeFamily parse_lattice_family(const std::string &s);

struct LatticeComparison {
    complex_t lattice; // normalized truncated lattice sum
    complex_t q_side;  // q-expansion evaluated at tau
    double tail = 0;   // bound on |normalized omitted terms|
    long points = 0;
};

// Both sides of
//   M4K:      (w-1)!/pi^w M_w = 2^(w+1) sum n^(w-1) q^(2n)/(1-q^(4n)),            w = 4k
//   M4K2STAR: (w-1)! 2^w/pi^w M*_w = -2^(w+2) sum (2n+1)^(w-1) q^(2n+1)/(1-q^(4n+2)), w = 4k+2
//   M2K1CHI:  (2k)! (4/pi)^w M_w(chi) = (-1)^k 2^(2k+3) sum sigma_(2k,chi)(4n+r) q^((4n+r)/2),
//             w = 2k+1, r = 1 for k even and 3 for k odd
// with |m|, |n| <= cutoff. Throws cutoff_too_small when no tail bound exists
// at this cutoff.
LatticeComparison lattice_compare(LatticeFamily family, long k, complex_t tau, long cutoff);

// Passes when |lattice - q_side| <= tol + tail; throws cutoff_too_small when
// tail > tol.
NumericCheck lattice_sum_check(LatticeFamily family, long k, complex_t tau, long cutoff,
                               double tol = default_lattice_tol);

// Random word of length 1..max_len in T, S and their inverses.
SL2Matrix random_gamma0_2_word(std::mt19937_64 &rng, int max_len);

// Uniform tau with re in [-1, 1], im in [im_lo, im_hi].
complex_t random_tau(std::mt19937_64 &rng, double im_lo = 0.5, double im_hi = 1.5);

// Random tau as above with im(sigma tau) >= im_floor too; returns false if
// none is found within `attempts` draws.
bool random_tau_for(std::mt19937_64 &rng, const SL2Matrix &sigma, complex_t &tau, double im_floor = default_im_floor,
                    int attempts = 200);

} // namespace thetaform

#endif
