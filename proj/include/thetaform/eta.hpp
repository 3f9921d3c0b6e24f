#ifndef THETAFORM_ETA_HPP
#define THETAFORM_ETA_HPP

#include <string>
#include <utility>
#include <vector>

#include <thetaform/series.hpp>

namespace thetaform
{

// u^prefactor_u_exp * prod (q^m; q^m)_inf^e over the (m, e) factors.
struct EtaQuotient {
    QSeries::exponent_t prefactor_u_exp = 0;
    std::vector<std::pair<long, long>> factors;

    friend bool operator==(const EtaQuotient &, const EtaQuotient &) = default;
};

// Expansion to u-order n. Monic with leading exponent prefactor_u_exp.
QSeries expand(const EtaQuotient &q, QSeries::exponent_t n);

// "u^2 (q^2;q^2)^14 (q^4;q^4)^-4" style rendering.
std::string to_string(const EtaQuotient &q);

// Parses "prefactor_u_exp; m1^e1 m2^e2 ..." (the basis-file line format).
EtaQuotient parse_eta_quotient(const std::string &line);

} // namespace thetaform

#endif
