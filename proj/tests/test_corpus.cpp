#include <set>
#include <string>

#include <doctest.h>

#include <thetaform/corpus.hpp>
#include <thetaform/error.hpp>
#include <thetaform/theta.hpp>

using namespace thetaform;

TEST_CASE("every catalog identity holds to u^240")
{
    for (const auto &e : identity_catalog()) {
        CAPTURE(e.id);
        const IdentityCertificate c = check_identity(e, 240);
        if (!c.equal) {
            MESSAGE("first mismatch at u^" << c.mismatch->u_exp << ": " << c.mismatch->lhs.get_str() << " vs "
                                           << c.mismatch->rhs.get_str());
        }
        CHECK(c.equal);
        CHECK(c.order_checked == 240);
    }
}

TEST_CASE("every variant fails, and early")
{
    for (const auto &e : identity_variants()) {
        CAPTURE(e.id);
        const IdentityCertificate c = check_identity(e, 120);
        CHECK_FALSE(c.equal);
        REQUIRE(c.mismatch.has_value());
        CHECK(c.mismatch->lhs != c.mismatch->rhs);
    }
}

TEST_CASE("each variant shadows a catalog entry with a note")
{
    for (const auto &v : identity_variants()) {
        const std::string base = v.id.substr(0, v.id.size() - std::string("-variant").size());
        CAPTURE(v.id);
        REQUIRE(v.id.ends_with("-variant"));
        const CorpusEntry &e = find_identity(base);
        CHECK_FALSE(e.note.empty());
    }
}

TEST_CASE("ids are unique and lookups work")
{
    std::set<std::string> ids;
    for (const auto *list : {&identity_catalog(), &identity_variants()}) {
        for (const auto &e : *list) {
            CHECK(ids.insert(e.id).second);
            CHECK(find_identity(e.id).id == e.id);
            CHECK_FALSE(e.statement.empty());
        }
    }
    CHECK_THROWS_AS(find_identity("no-such-identity"), invalid_argument);
}

TEST_CASE("corpus covers the expected families")
{
    std::set<std::string> ids;
    for (const auto &e : identity_catalog()) {
        ids.insert(e.id);
    }
    for (int k = 2; k <= 24; k += 2) {
        CHECK(ids.count("theta" + std::to_string(k)) == 1);
    }
    for (int k = 1; k <= 5; ++k) {
        CHECK(ids.count("bridge1-k" + std::to_string(k)) == 1);
        CHECK(ids.count("bridge3-k" + std::to_string(k)) == 1);
        CHECK(ids.count("sigma" + std::to_string(2 * k) + "-1") == 1);
        CHECK(ids.count("sigma" + std::to_string(2 * k) + "-3") == 1);
    }
}

TEST_CASE("parallel verification matches serial")
{
    const auto serial = verify_identity_corpus(80, 1);
    const auto parallel = verify_identity_corpus(80, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].identity_id == parallel[i].identity_id);
        CHECK(serial[i].equal == parallel[i].equal);
    }
}

TEST_CASE("groups partition the catalog")
{
    const std::size_t total = identity_catalog().size();
    const std::size_t parts = verify_group(CorpusGroup::theta_powers, 40).size()
                              + verify_group(CorpusGroup::identity_list, 40).size()
                              + verify_prelim_corpus(40).size();
    CHECK(parts == total);
}

TEST_CASE("a failing side is reported at its first differing exponent")
{
    const IdentityCertificate c = certify("t", QSeries::one(50), QSeries::one(50) + QSeries::monomial(7, 3, 50), 50);
    CHECK_FALSE(c.equal);
    CHECK(c.mismatch->u_exp == 7);
    CHECK(c.status() == "mismatch");
}
