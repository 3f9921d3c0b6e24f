#include <thetaform/certificate.hpp>

namespace thetaform
{

IdentityCertificate certify(std::string id, const QSeries &lhs, const QSeries &rhs, QSeries::exponent_t n)
{
    const CheckResult r = equal_to_order(lhs, rhs, n);
    IdentityCertificate c;
    c.identity_id = std::move(id);
    c.order_checked = r.order_checked;
    c.equal = r.equal;
    c.mismatch = r.mismatch;
    return c;
}

} // namespace thetaform
