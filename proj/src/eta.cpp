#include <sstream>

#include <thetaform/error.hpp>
#include <thetaform/eta.hpp>

namespace thetaform
{

QSeries expand(const EtaQuotient &q, QSeries::exponent_t n)
{
    const QSeries::exponent_t inner = n - q.prefactor_u_exp;
    if (inner <= 0) {
        return QSeries::zero(n);
    }
    QSeries r = QSeries::one(inner);
    for (const auto &[m, e] : q.factors) {
        if (m < 1) {
            throw invalid_argument("eta quotient modulus must be positive, got " + std::to_string(m));
        }
        if (e != 0) {
            r = r * pow(pochhammer_inf(m, inner), e);
        }
    }
    return shift(r, q.prefactor_u_exp);
}

std::string to_string(const EtaQuotient &q)
{
    std::ostringstream os;
    os << "u^" << q.prefactor_u_exp;
    for (const auto &[m, e] : q.factors) {
        os << " (q^" << m << ";q^" << m << ")^" << e;
    }
    return os.str();
}

EtaQuotient parse_eta_quotient(const std::string &line)
{
    const auto semi = line.find(';');
    if (semi == std::string::npos) {
        throw invalid_argument("eta quotient line needs 'prefactor; m^e ...': " + line);
    }
    EtaQuotient q;
    try {
        std::size_t used = 0;
        const std::string head = line.substr(0, semi);
        q.prefactor_u_exp = std::stoll(head, &used);
        if (head.find_first_not_of(" \t", used) != std::string::npos) {
            throw invalid_argument("trailing text after prefactor");
        }
    } catch (const std::logic_error &) {
        throw invalid_argument("bad prefactor in eta quotient line: " + line);
    }
    std::istringstream rest(line.substr(semi + 1));
    std::string tok;
    while (rest >> tok) {
        const auto caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                q.factors.emplace_back(std::stol(tok), 1);
            } else {
                q.factors.emplace_back(std::stol(tok.substr(0, caret)), std::stol(tok.substr(caret + 1)));
            }
        } catch (const std::logic_error &) {
            throw invalid_argument("bad factor '" + tok + "' in eta quotient line: " + line);
        }
        if (q.factors.back().first < 1) {
            throw invalid_argument("eta quotient modulus must be positive in: " + line);
        }
    }
    return q;
}

} // namespace thetaform
