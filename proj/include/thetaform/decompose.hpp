#ifndef THETAFORM_DECOMPOSE_HPP
#define THETAFORM_DECOMPOSE_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <thetaform/certificate.hpp>
#include <thetaform/eta.hpp>
#include <thetaform/series.hpp>

namespace thetaform
{

// Eta quotients sorted by strictly increasing leading u-exponent.
class BasisSpec
{
public:
    BasisSpec() = default;
    // Sorts by leading exponent; throws invalid_argument on a tie.
    explicit BasisSpec(std::vector<EtaQuotient> elements);

    const std::vector<EtaQuotient> &elements() const
    {
        return elements_;
    }
    bool empty() const
    {
        return elements_.empty();
    }

private:
    std::vector<EtaQuotient> elements_;
};

inline constexpr QSeries::exponent_t default_safety_margin = 40;

// The built-in cusp basis for theta2^two_k, two_k in 2..24 (empty for
// 2, 4, 6, 8). Throws unsupported_power outside that range.
BasisSpec default_basis(long two_k);
bool has_default_basis(long two_k);

// One eta quotient per non-empty, non-comment ('#') line.
BasisSpec parse_basis(std::istream &in);

// theta2^two_k - c E to u-order n.
QSeries cusp_part(long two_k, QSeries::exponent_t n);

// Coefficients c_i with s = sum c_i basis_i to u-order n, by a triangular
// solve on leading exponents. Needs n >= last leading exponent + margin
// (insufficient_order otherwise); throws residual_nonzero when the basis
// does not span s.
std::vector<Rational> express_in_basis(const QSeries &s, const BasisSpec &basis, QSeries::exponent_t n,
                                       QSeries::exponent_t margin = default_safety_margin);

// Full decomposition of theta2^two_k to u-order n with the default basis
// or the one supplied.
IdentityCertificate decompose(long two_k, QSeries::exponent_t n, const std::optional<BasisSpec> &basis = std::nullopt);

// c E + sum c_i basis_i as recorded in a certificate.
QSeries reconstruct(long two_k, const IdentityCertificate &cert, QSeries::exponent_t n);

// "theta2^12 = 16 sum (2n+1)^5 q^(2n+1)/(1-q^(4n+2)) - 16 q (q^2;q^2)^12" style text.
std::string render_decomposition(long two_k, const IdentityCertificate &cert);

} // namespace thetaform

#endif
