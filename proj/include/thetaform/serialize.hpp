#ifndef THETAFORM_SERIALIZE_HPP
#define THETAFORM_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <thetaform/certificate.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/eta.hpp>
#include <thetaform/numeric.hpp>
#include <thetaform/series.hpp>
#include <thetaform/wp.hpp>

namespace thetaform
{

using json = nlohmann::json;

inline constexpr int json_schema_version = 1;

// Rationals travel as "num" or "num/den" strings.
json to_json(const Rational &r);
Rational rational_from_json(const json &j);

// {"min_exp", "order", "coeffs": [...]} with coeffs[i] on u^(min_exp + i).
json to_json(const QSeries &s);
QSeries series_from_json(const json &j);

// {"terms": [[deg_x, deg_y, "c"], ...]} in ascending (deg_x, deg_y).
json to_json(const BivarPoly &p);
BivarPoly bivar_from_json(const json &j);

// {"degree", "coeffs": [...], "palindromic"}
json to_json(const PalinPoly &p);

// {"prefactor_u_exp", "factors": [[m, e], ...]}
json to_json(const EtaQuotient &q);
EtaQuotient eta_quotient_from_json(const json &j);

// {"identity_id", "order_checked", "status", "eis"?, "cusp": [...], "mismatch"?}
json to_json(const IdentityCertificate &c);
IdentityCertificate certificate_from_json(const json &j);

// {"pass", "error", "tol", "terms", "cutoff", "tail", "detail"}
json to_json(const NumericCheck &c);

// {"schema": 1, "kind": kind, <key>: payload}
json document(const std::string &kind, const std::string &key, json payload);

// Sorted keys, two-space indent; byte-identical for equal inputs.
std::string dump(const json &j);

} // namespace thetaform

#endif
