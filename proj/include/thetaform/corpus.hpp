#ifndef THETAFORM_CORPUS_HPP
#define THETAFORM_CORPUS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <thetaform/certificate.hpp>
#include <thetaform/series.hpp>

namespace thetaform
{

enum class CorpusGroup {
    theta_powers, // theta2^2 ... theta2^24 as Eisenstein part plus eta quotients
    identity_list, // Lambert/theta pairs, divisor-sum forms, eta forms, bridges
    prelim,       // theta relations, e-values, g-invariants, special wp values
};

std::string to_string(CorpusGroup g);

struct IdentitySides {
    QSeries lhs;
    QSeries rhs;
};

// One identity: `build(n)` returns both sides known at least to u-order n.
struct CorpusEntry {
    std::string id;
    CorpusGroup group;
    std::string statement;
    // Non-empty when a nearby form of the identity is wrong; says what was fixed.
    std::string note;
    std::function<IdentitySides(QSeries::exponent_t)> build;
};

// Every identity, in a fixed order.
const std::vector<CorpusEntry> &identity_catalog();

// Wrong-but-plausible forms kept so tests can show they fail; ids end in
// "-variant".
const std::vector<CorpusEntry> &identity_variants();

// Throws invalid_argument for an unknown id.
const CorpusEntry &find_identity(const std::string &id);

IdentityCertificate check_identity(const CorpusEntry &e, QSeries::exponent_t n);

// Certificates for the selected entries in catalog order, computed with up
// to `jobs` worker threads.
std::vector<IdentityCertificate> verify_entries(const std::vector<const CorpusEntry *> &entries, QSeries::exponent_t n,
                                                unsigned jobs = 1);

// theta-power and identity-list groups.
std::vector<IdentityCertificate> verify_identity_corpus(QSeries::exponent_t n, unsigned jobs = 1);
std::vector<IdentityCertificate> verify_group(CorpusGroup g, QSeries::exponent_t n, unsigned jobs = 1);

} // namespace thetaform

#endif
