#ifndef THETAFORM_CERTIFICATE_HPP
#define THETAFORM_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <thetaform/eta.hpp>
#include <thetaform/series.hpp>

namespace thetaform
{

enum class EisFamily { w8k, w8k4, w8k2, w8k_minus2 };

std::string to_string(EisFamily f);

// Eisenstein part of theta2^(2k): constant * E with E from the matching
// Lambert family. `constant` multiplies the Lambert form (the A +/- B
// combinations for 2k = 2, 6 mod 8); `sigma_constant` multiplies the
// equivalent divisor-sum form q^(1/2) sum sigma_(w,chi)(4n + r) q^(...)
// where one exists. `special` marks 2k = 2, which uses the alternating
// Lambert series on its own.
struct EisensteinSpec {
    EisFamily family = EisFamily::w8k;
    long k = 0;
    Rational constant;
    std::optional<Rational> sigma_constant;
    bool special = false;
};

struct IdentityCertificate {
    std::string identity_id;
    QSeries::exponent_t order_checked = 0;
    bool equal = true;
    std::optional<Mismatch> mismatch;
    std::optional<EisensteinSpec> eis;
    std::vector<std::pair<EtaQuotient, Rational>> cusp;

    std::string status() const
    {
        return equal ? "equal" : "mismatch";
    }
};

// Certificate for lhs == rhs to u-order n.
IdentityCertificate certify(std::string id, const QSeries &lhs, const QSeries &rhs, QSeries::exponent_t n);

} // namespace thetaform

#endif
