#include <algorithm>
#include <sstream>

#include <thetaform/decompose.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/error.hpp>
#include <thetaform/theta.hpp>

namespace thetaform
{

using exponent_t = QSeries::exponent_t;

BasisSpec::BasisSpec(std::vector<EtaQuotient> elements) : elements_(std::move(elements))
{
    std::stable_sort(elements_.begin(), elements_.end(),
                     [](const EtaQuotient &a, const EtaQuotient &b) { return a.prefactor_u_exp < b.prefactor_u_exp; });
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i].prefactor_u_exp == elements_[i - 1].prefactor_u_exp) {
            throw invalid_argument("basis leading exponents must be distinct; u^"
                                   + std::to_string(elements_[i].prefactor_u_exp) + " appears twice");
        }
    }
}

bool has_default_basis(long two_k)
{
    return two_k >= 2 && two_k <= 24 && two_k % 2 == 0;
}

BasisSpec default_basis(long two_k)
{
    if (!has_default_basis(two_k)) {
        throw unsupported_power("no built-in cusp basis for theta2^" + std::to_string(two_k)
                                + "; supported powers are 2, 4, ..., 24");
    }
    using F = std::vector<std::pair<long, long>>;
    switch (two_k) {
        case 10:
            return BasisSpec({{2, F{{2, 14}, {4, -4}}}});
        case 12:
            return BasisSpec({{4, F{{2, 12}}}});
        case 14:
            return BasisSpec({{6, F{{2, 10}, {4, 4}}}});
        case 16:
            return BasisSpec({{8, F{{2, 8}, {4, 8}}}});
        case 18:
            return BasisSpec({{2, F{{2, 30}, {4, -12}}}, {10, F{{2, 6}, {4, 12}}}});
        case 20:
            return BasisSpec({{4, F{{2, 28}, {4, -8}}}, {12, F{{2, 4}, {4, 16}}}});
        case 22:
            return BasisSpec({{6, F{{2, 26}, {4, -4}}}, {14, F{{2, 2}, {4, 20}}}});
        case 24:
            return BasisSpec({{8, F{{2, 24}}}, {16, F{{4, 24}}}});
        default:
            return BasisSpec{};
    }
}

BasisSpec parse_basis(std::istream &in)
{
    std::vector<EtaQuotient> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        out.push_back(parse_eta_quotient(line));
    }
    return BasisSpec(std::move(out));
}

QSeries cusp_part(long two_k, exponent_t n)
{
    const auto [c, e] = eis_series(two_k, n);
    return (theta_power(2, two_k, n) - e * c).truncated(n);
}

std::vector<Rational> express_in_basis(const QSeries &s, const BasisSpec &basis, exponent_t n, exponent_t margin)
{
    const auto &el = basis.elements();
    if (!el.empty() && n < el.back().prefactor_u_exp + margin) {
        throw insufficient_order("basis solve to u^" + std::to_string(n) + " needs at least u^"
                                 + std::to_string(el.back().prefactor_u_exp + margin));
    }
    QSeries residual = s.truncated(n);
    std::vector<Rational> coeffs;
    coeffs.reserve(el.size());
    for (const auto &q : el) {
        // Monic basis element: its coefficient is the residual's at its leading term.
        const Rational c = residual.coeff(q.prefactor_u_exp);
        coeffs.push_back(c);
        if (c != 0) {
            residual -= expand(q, n) * c;
        }
    }
    if (!residual.is_zero()) {
        throw residual_nonzero("residual after basis solve starts with " + residual.leading_coefficient().get_str()
                               + " u^" + std::to_string(residual.min_exp()));
    }
    return coeffs;
}

IdentityCertificate decompose(long two_k, exponent_t n, const std::optional<BasisSpec> &basis)
{
    const BasisSpec b = basis ? *basis : default_basis(two_k);
    const QSeries cusp = cusp_part(two_k, n);
    const std::vector<Rational> coeffs = express_in_basis(cusp, b, n);

    IdentityCertificate cert;
    cert.identity_id = "decompose-theta" + std::to_string(two_k);
    cert.eis = eisenstein_spec(two_k);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        cert.cusp.emplace_back(b.elements()[i], coeffs[i]);
    }
    const CheckResult r = equal_to_order(theta_power(2, two_k, n), reconstruct(two_k, cert, n), n);
    cert.order_checked = r.order_checked;
    cert.equal = r.equal;
    cert.mismatch = r.mismatch;
    return cert;
}

QSeries reconstruct(long two_k, const IdentityCertificate &cert, exponent_t n)
{
    const auto [c, e] = eis_series(two_k, n);
    const Rational constant = cert.eis ? cert.eis->constant : c;
    QSeries r = e * constant;
    for (const auto &[q, coeff] : cert.cusp) {
        r += expand(q, n) * coeff;
    }
    return r.truncated(n);
}

namespace
{

std::string q_power(exponent_t u_exp)
{
    if (u_exp == 0) {
        return "";
    }
    const Rational e(u_exp, 4);
    Rational r = e;
    r.canonicalize();
    if (r == 1) {
        return "q";
    }
    return r.get_den() == 1 ? "q^" + r.get_str() : "q^(" + r.get_str() + ")";
}

std::string eis_text(long two_k, const EisensteinSpec &s)
{
    const long w = 4 * s.k;
    switch (s.family) {
        case EisFamily::w8k:
            return "Sum_{n>=1} n^" + std::to_string(w - 1) + " q^(2n)/(1-q^(4n))";
        case EisFamily::w8k4:
            return "Sum_{n>=0} (2n+1)^" + std::to_string(w + 1) + " q^(2n+1)/(1-q^(4n+2))";
        case EisFamily::w8k2:
            if (s.special) {
                return "q^(1/2) Sum_{n>=0} (-1)^n q^n/(1-q^(2n+1))";
            }
            return "q^(1/2) Sum_{n>=0} (2n+1)^" + std::to_string(w)
                   + " (q^n/(1+q^(2n+1)) + (-1)^n q^n/(1-q^(2n+1)))";
        case EisFamily::w8k_minus2:
            return "q^(1/2) Sum_{n>=0} (2n+1)^" + std::to_string(w - 2)
                   + " (q^n/(1+q^(2n+1)) - (-1)^n q^n/(1-q^(2n+1)))";
    }
    (void)two_k;
    return "";
}

void signed_term(std::ostringstream &os, const Rational &c, const std::string &body, bool first)
{
    if (first) {
        os << (c < 0 ? "-" : "");
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    const Rational mag = abs(c);
    if (mag != 1) {
        os << mag.get_str() << " ";
    }
    os << body;
}

} // namespace

std::string render_decomposition(long two_k, const IdentityCertificate &cert)
{
    std::ostringstream os;
    os << "theta2^" << two_k << " = ";
    const EisensteinSpec s = cert.eis ? *cert.eis : eisenstein_spec(two_k);
    signed_term(os, s.constant, eis_text(two_k, s), true);
    for (const auto &[q, c] : cert.cusp) {
        std::string body = q_power(q.prefactor_u_exp);
        for (const auto &[m, e] : q.factors) {
            if (!body.empty()) {
                body += " ";
            }
            body += "(q^" + std::to_string(m) + ";q^" + std::to_string(m) + ")^" + std::to_string(e);
        }
        if (body.empty()) {
            body = "1";
        }
        signed_term(os, c, body, false);
    }
    return os.str();
}

} // namespace thetaform
