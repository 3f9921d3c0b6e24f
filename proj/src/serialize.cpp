#include <thetaform/error.hpp>
#include <thetaform/serialize.hpp>

namespace thetaform
{

namespace
{

EisFamily parse_family(const std::string &s)
{
    for (const auto f : {EisFamily::w8k, EisFamily::w8k4, EisFamily::w8k2, EisFamily::w8k_minus2}) {
        if (to_string(f) == s) {
            return f;
        }
    }
    throw invalid_argument("unknown Eisenstein family '" + s + "'");
}

template <class T>
T field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw invalid_argument(std::string("JSON object lacks field '") + key + "'");
    }
    return j.at(key).get<T>();
}

} // namespace

json to_json(const Rational &r)
{
    return to_string(r);
}

Rational rational_from_json(const json &j)
{
    if (!j.is_string()) {
        throw invalid_argument("rational must be a string, got " + j.dump());
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument &) {
        throw invalid_argument("bad rational '" + j.get<std::string>() + "'");
    }
}

json to_json(const QSeries &s)
{
    json coeffs = json::array();
    for (const Rational &c : s.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    return {{"min_exp", s.min_exp()}, {"order", s.order()}, {"coeffs", coeffs}};
}

QSeries series_from_json(const json &j)
{
    std::vector<Rational> coeffs;
    for (const json &c : field<json>(j, "coeffs")) {
        coeffs.push_back(rational_from_json(c));
    }
    return QSeries::from_coefficients(field<QSeries::exponent_t>(j, "min_exp"), std::move(coeffs),
                                      field<QSeries::exponent_t>(j, "order"));
}

json to_json(const BivarPoly &p)
{
    json terms = json::array();
    for (const auto &[key, c] : p.terms()) {
        terms.push_back(json::array({key.first, key.second, to_json(c)}));
    }
    return {{"terms", terms}};
}

BivarPoly bivar_from_json(const json &j)
{
    BivarPoly p;
    for (const json &t : field<json>(j, "terms")) {
        if (!t.is_array() || t.size() != 3) {
            throw invalid_argument("polynomial term must be [deg_x, deg_y, coeff], got " + t.dump());
        }
        p.add_term(t[0].get<int>(), t[1].get<int>(), rational_from_json(t[2]));
    }
    return p;
}

json to_json(const PalinPoly &p)
{
    json coeffs = json::array();
    for (const Integer &c : p.coeffs) {
        coeffs.push_back(to_string(c));
    }
    return {{"degree", p.degree()}, {"coeffs", coeffs}, {"palindromic", p.is_palindromic()}};
}

json to_json(const EtaQuotient &q)
{
    json factors = json::array();
    for (const auto &[m, e] : q.factors) {
        factors.push_back(json::array({m, e}));
    }
    return {{"prefactor_u_exp", q.prefactor_u_exp}, {"factors", factors}};
}

EtaQuotient eta_quotient_from_json(const json &j)
{
    EtaQuotient q;
    q.prefactor_u_exp = field<QSeries::exponent_t>(j, "prefactor_u_exp");
    for (const json &f : field<json>(j, "factors")) {
        q.factors.emplace_back(f.at(0).get<long>(), f.at(1).get<long>());
    }
    return q;
}

json to_json(const IdentityCertificate &c)
{
    json out = {{"identity_id", c.identity_id}, {"order_checked", c.order_checked}, {"status", c.status()}};
    if (c.eis) {
        json eis = {{"family", to_string(c.eis->family)}, {"k", c.eis->k}, {"constant", to_json(c.eis->constant)}};
        if (c.eis->sigma_constant) {
            eis["sigma_constant"] = to_json(*c.eis->sigma_constant);
        }
        if (c.eis->special) {
            eis["special"] = true;
        }
        out["eis"] = eis;
    }
    json cusp = json::array();
    for (const auto &[q, coeff] : c.cusp) {
        json e = to_json(q);
        e["coeff"] = to_json(coeff);
        cusp.push_back(e);
    }
    out["cusp"] = cusp;
    if (c.mismatch) {
        out["mismatch"] = {{"u_exp", c.mismatch->u_exp},
                           {"lhs", to_json(c.mismatch->lhs)},
                           {"rhs", to_json(c.mismatch->rhs)}};
    }
    return out;
}

IdentityCertificate certificate_from_json(const json &j)
{
    IdentityCertificate c;
    c.identity_id = field<std::string>(j, "identity_id");
    c.order_checked = field<QSeries::exponent_t>(j, "order_checked");
    const std::string status = field<std::string>(j, "status");
    if (status != "equal" && status != "mismatch") {
        throw invalid_argument("unknown certificate status '" + status + "'");
    }
    c.equal = status == "equal";
    if (j.contains("eis")) {
        const json &e = j.at("eis");
        EisensteinSpec s;
        s.family = parse_family(field<std::string>(e, "family"));
        s.k = field<long>(e, "k");
        s.constant = rational_from_json(e.at("constant"));
        if (e.contains("sigma_constant")) {
            s.sigma_constant = rational_from_json(e.at("sigma_constant"));
        }
        s.special = e.value("special", false);
        c.eis = s;
    }
    for (const json &e : field<json>(j, "cusp")) {
        c.cusp.emplace_back(eta_quotient_from_json(e), rational_from_json(e.at("coeff")));
    }
    if (j.contains("mismatch")) {
        const json &m = j.at("mismatch");
        c.mismatch = Mismatch{field<QSeries::exponent_t>(m, "u_exp"), rational_from_json(m.at("lhs")),
                              rational_from_json(m.at("rhs"))};
    }
    return c;
}

json to_json(const NumericCheck &c)
{
    return {{"pass", c.pass}, {"error", c.error},   {"tol", c.tol},      {"terms", c.terms},
            {"cutoff", c.cutoff}, {"tail", c.tail}, {"detail", c.detail}};
}

json document(const std::string &kind, const std::string &key, json payload)
{
    return {{"schema", json_schema_version}, {"kind", kind}, {key, std::move(payload)}};
}

std::string dump(const json &j)
{
    return j.dump(2);
}

} // namespace thetaform
