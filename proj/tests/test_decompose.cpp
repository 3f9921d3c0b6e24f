#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include <doctest.h>

#include <thetaform/decompose.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/error.hpp>
#include <thetaform/theta.hpp>

using namespace thetaform;

namespace
{

Rational p2(unsigned long e)
{
    return Rational(ipow(2, e));
}

// Cusp coefficients in basis order, from the theta-power identities divided
// through by their leading integer.
const std::map<long, std::vector<Rational>> &expected_cusp()
{
    static const std::map<long, std::vector<Rational>> m = {
        {10, {Rational(-8, 5)}},
        {12, {Rational(-16)}},
        {14, {Rational(-91 * 64, 61)}},
        {16, {Rational(-8192, 17)}},
        {18, {Rational(-8, 1385), Rational(-763) * p2(12) / 1385}},
        {20, {Rational(-16, 31), Rational(-77) * p2(12) / 31}},
        {22, {Rational(-7381 * 64, 50521), Rational(-138677) * p2(14) / 50521}},
        {24, {-p2(16) / 691, Rational(-259) * p2(19) / 691}},
    };
    return m;
}

} // namespace

TEST_CASE("decomposition reproduces the known coefficients")
{
    for (long two_k = 2; two_k <= 24; two_k += 2) {
        CAPTURE(two_k);
        const IdentityCertificate c = decompose(two_k, 400);
        CHECK(c.equal);
        CHECK(c.order_checked == 400);
        CHECK(c.identity_id == "decompose-theta" + std::to_string(two_k));
        REQUIRE(c.eis.has_value());
        CHECK(c.eis->constant == eisenstein_spec(two_k).constant);
        const auto it = expected_cusp().find(two_k);
        if (it == expected_cusp().end()) {
            CHECK(c.cusp.empty());
            continue;
        }
        REQUIRE(c.cusp.size() == it->second.size());
        for (std::size_t i = 0; i < c.cusp.size(); ++i) {
            CHECK(c.cusp[i].second == it->second[i]);
        }
        CHECK(equal_to_order(reconstruct(two_k, c, 400), theta_power(2, two_k, 400), 400).equal);
    }
}

TEST_CASE("cusp parts of the small powers vanish")
{
    for (const long two_k : {4, 8}) {
        CHECK(cusp_part(two_k, 200).is_zero());
    }
    CHECK(equal_to_order(cusp_part(12, 200), expand(EtaQuotient{4, {{2, 12}}}, 200) * Rational(-16), 200).equal);
}

TEST_CASE("solve is independent of the order the basis is given in")
{
    for (long two_k = 18; two_k <= 24; two_k += 2) {
        const BasisSpec b = default_basis(two_k);
        std::vector<EtaQuotient> rev(b.elements().rbegin(), b.elements().rend());
        const BasisSpec permuted(rev);
        CHECK(permuted.elements() == b.elements());
        const QSeries s = cusp_part(two_k, 300);
        CHECK(express_in_basis(s, permuted, 300) == express_in_basis(s, b, 300));
    }
}

TEST_CASE("perturbing a coefficient flips the certificate at the right exponent")
{
    for (long two_k = 10; two_k <= 24; two_k += 2) {
        IdentityCertificate c = decompose(two_k, 300);
        for (std::size_t i = 0; i < c.cusp.size(); ++i) {
            IdentityCertificate bad = c;
            bad.cusp[i].second += 1;
            const CheckResult r = equal_to_order(theta_power(2, two_k, 300), reconstruct(two_k, bad, 300), 300);
            CHECK_FALSE(r.equal);
            REQUIRE(r.mismatch.has_value());
            CHECK(r.mismatch->u_exp == c.cusp[i].first.prefactor_u_exp);
        }
    }
}

TEST_CASE("solver failures")
{
    CHECK(express_in_basis(QSeries::zero(200), default_basis(24), 200) == std::vector<Rational>{0, 0});

    const BasisSpec first_only({default_basis(18).elements().front()});
    CHECK_THROWS_AS(express_in_basis(cusp_part(18, 200), first_only, 200), residual_nonzero);
    CHECK_THROWS_AS(decompose(18, 200, first_only), residual_nonzero);
    CHECK_THROWS_AS(express_in_basis(cusp_part(24, 40), default_basis(24), 40), insufficient_order);
    CHECK_THROWS_AS(BasisSpec({EtaQuotient{2, {{2, 1}}}, EtaQuotient{2, {{4, 1}}}}), invalid_argument);
    CHECK_THROWS_AS(default_basis(26), unsupported_power);
    CHECK_THROWS_AS(default_basis(11), unsupported_power);
    CHECK(default_basis(8).empty());
}

TEST_CASE("basis files")
{
    std::istringstream in("# theta2^24\n16; 4^24\n\n8; 2^24   # first\n");
    const BasisSpec b = parse_basis(in);
    REQUIRE(b.elements().size() == 2);
    CHECK(b.elements() == default_basis(24).elements());
    CHECK(decompose(24, 200, b).equal);

    std::istringstream bad("8; 2^x\n");
    CHECK_THROWS_AS(parse_basis(bad), invalid_argument);
}

TEST_CASE("rendering")
{
    CHECK(render_decomposition(12, decompose(12, 200))
          == "theta2^12 = 16 Sum_{n>=0} (2n+1)^5 q^(2n+1)/(1-q^(4n+2)) - 16 q (q^2;q^2)^12");
    CHECK(render_decomposition(8, decompose(8, 200)) == "theta2^8 = 256 Sum_{n>=1} n^3 q^(2n)/(1-q^(4n))");
    const std::string r14 = render_decomposition(14, decompose(14, 200));
    CHECK(r14.find("4/61") != std::string::npos);
    CHECK(r14.find("- 5824/61 q^(3/2) (q^2;q^2)^10 (q^4;q^4)^4") != std::string::npos);
}
