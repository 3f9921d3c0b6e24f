#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <thetaform/arith.hpp>
#include <thetaform/corpus.hpp>
#include <thetaform/eisenstein.hpp>
#include <thetaform/error.hpp>
#include <thetaform/eta.hpp>
#include <thetaform/theta.hpp>
#include <thetaform/wp.hpp>

namespace thetaform
{

using exponent_t = QSeries::exponent_t;

std::string to_string(CorpusGroup g)
{
    switch (g) {
        case CorpusGroup::theta_powers:
            return "theta-powers";
        case CorpusGroup::identity_list:
            return "identity-list";
        case CorpusGroup::prelim:
            return "prelim";
    }
    return "unknown";
}

namespace
{

using Factors = std::vector<std::pair<long, long>>;

QSeries eta(exponent_t prefactor, Factors f, exponent_t n)
{
    return expand(EtaQuotient{prefactor, std::move(f)}, n);
}

Rational r(long v)
{
    return Rational(v);
}

Rational pow2(unsigned long e)
{
    return Rational(ipow(2, e));
}

// (a, b, c) = (theta2^4, theta3^4, theta4^4) at tau.
struct Abc {
    QSeries a, b, c;
};

Abc abc(exponent_t n)
{
    return {theta_power(2, 4, n), theta_power(3, 4, n), theta_power(4, 4, n)};
}

// theta2^k(2 tau), theta3^4 theta4^4 (2 tau) and theta3^4 + theta4^4 (2 tau).
QSeries t2(long k, exponent_t n)
{
    return theta_power(2, k, n, 2);
}

QSeries bc2(exponent_t n)
{
    return theta_power(3, 4, n, 2) * theta_power(4, 4, n, 2);
}

QSeries s2(exponent_t n)
{
    return theta_power(3, 4, n, 2) + theta_power(4, 4, n, 2);
}

// 8 sum sigma_(k,chi)(4j + r) q^(4j + r).
QSeries big_s(long k, long rr, exponent_t n)
{
    return sigma_series(k, rr, n) * r(8);
}

QSeries odd_power_weight_lambert(long p, int s, bool alternating, exponent_t n)
{
    const auto w = [p, alternating](long j) {
        Integer v = ipow(2 * j + 1, static_cast<unsigned long>(p));
        return alternating && j % 2 != 0 ? Integer(-v) : v;
    };
    return lambert_sum(w, 8, 4, 16, 8, s, 0, n);
}

// sum (2n+1)^(2k) (q^(2n+1)/(1+q^(4n+2)) + sign (-1)^n q^(2n+1)/(1-q^(4n+2))).
QSeries bridge_lhs(long k, int sign, exponent_t n)
{
    return odd_power_weight_lambert(2 * k, -1, false, n) + odd_power_weight_lambert(2 * k, 1, true, n) * r(sign);
}

// Same with the first denominator replaced by 1 + q^(2n+1).
QSeries bridge_lhs_variant(long k, int sign, exponent_t n)
{
    const auto w = [k](long j) { return ipow(2 * j + 1, static_cast<unsigned long>(2 * k)); };
    return lambert_sum(w, 8, 4, 8, 4, -1, 0, n) + odd_power_weight_lambert(2 * k, 1, true, n) * r(sign);
}

QSeries one_minus_x_power_sum(const std::function<Integer(long)> &w, exponent_t n)
{
    return lambert_sum(w, 4, 0, 8, 0, 1, 1, n);
}

void add_theta_powers(std::vector<CorpusEntry> &v)
{
    const auto g = CorpusGroup::theta_powers;
    v.push_back({"theta2", g, "theta2^2 = 4 q^(1/2) Sum (-1)^n q^n/(1-q^(2n+1))", "",
                 [](exponent_t n) { return IdentitySides{theta_power(2, 2, n), lambert_b(0, n) * r(4)}; }});
    v.push_back({"theta4", g, "theta2^4 = 16 Sum (2n+1) q^(2n+1)/(1-q^(4n+2))", "",
                 [](exponent_t n) { return IdentitySides{theta_power(2, 4, n), lambert_odd(1, n) * r(16)}; }});
    v.push_back({"theta6", g, "theta2^6 = 4 (A_2 - B_2)", "", [](exponent_t n) {
                     return IdentitySides{theta_power(2, 6, n), (lambert_a(2, n) - lambert_b(2, n)) * r(4)};
                 }});
    v.push_back({"theta8", g, "theta2^8 = 256 Sum n^3 q^(2n)/(1-q^(4n))", "",
                 [](exponent_t n) { return IdentitySides{theta_power(2, 8, n), lambert_even(3, n) * r(256)}; }});
    v.push_back({"theta10", g, "5 theta2^10 = 4 (A_4 + B_4) - 8 u^2 (q^2;q^2)^14 (q^4;q^4)^-4", "",
                 [](exponent_t n) {
                     return IdentitySides{theta_power(2, 10, n) * r(5),
                                          (lambert_a(4, n) + lambert_b(4, n)) * r(4)
                                              - eta(2, {{2, 14}, {4, -4}}, n) * r(8)};
                 }});
    v.push_back({"theta12", g, "theta2^12 = 16 Sum (2n+1)^5 q^(2n+1)/(1-q^(4n+2)) - 16 u^4 (q^2;q^2)^12", "",
                 [](exponent_t n) {
                     return IdentitySides{theta_power(2, 12, n),
                                          lambert_odd(5, n) * r(16) - eta(4, {{2, 12}}, n) * r(16)};
                 }});
    v.push_back({"theta14", g, "61 theta2^14 = 4 (A_6 - B_6) - 91*2^6 u^6 (q^2;q^2)^10 (q^4;q^4)^4", "",
                 [](exponent_t n) {
                     return IdentitySides{theta_power(2, 14, n) * r(61),
                                          (lambert_a(6, n) - lambert_b(6, n)) * r(4)
                                              - eta(6, {{2, 10}, {4, 4}}, n) * r(91 * 64)};
                 }});
    v.push_back({"theta16", g, "17 theta2^16 = 2^13 Sum n^7 q^(2n)/(1-q^(4n)) - 2^13 u^8 (q^2;q^2)^8 (q^4;q^4)^8",
                 "the cusp term is u^8 (q^2;q^2)^8 (q^4;q^4)^8; the form u^4 (q;q)^8 (q^2;q^2)^8 fails (theta16-variant)",
                 [](exponent_t n) {
                     return IdentitySides{theta_power(2, 16, n) * r(17),
                                          lambert_even(7, n) * pow2(13) - eta(8, {{2, 8}, {4, 8}}, n) * pow2(13)};
                 }});
    v.push_back({"theta18", g,
                 "1385 theta2^18 = 4 (A_8 + B_8) - 8 u^2 (q^2;q^2)^30 (q^4;q^4)^-12 - 763*2^12 u^10 (q^2;q^2)^6 "
                 "(q^4;q^4)^12",
                 "cusp coefficients are -8 and -763*2^12; -1 and -763*2^9 fail (theta18-variant)",
                 [](exponent_t n) {
                     return IdentitySides{theta_power(2, 18, n) * r(1385),
                                          (lambert_a(8, n) + lambert_b(8, n)) * r(4)
                                              - eta(2, {{2, 30}, {4, -12}}, n) * r(8)
                                              - eta(10, {{2, 6}, {4, 12}}, n) * (r(763) * pow2(12))};
                 }});
    v.push_back({"theta20", g,
                 "31 theta2^20 = 16 Sum (2n+1)^9 q^(2n+1)/(1-q^(4n+2)) - 16 u^4 (q^2;q^2)^28 (q^4;q^4)^-8 - 77*2^12 "
                 "u^12 (q^2;q^2)^4 (q^4;q^4)^16",
                 "", [](exponent_t n) {
                     return IdentitySides{theta_power(2, 20, n) * r(31),
                                          lambert_odd(9, n) * r(16) - eta(4, {{2, 28}, {4, -8}}, n) * r(16)
                                              - eta(12, {{2, 4}, {4, 16}}, n) * (r(77) * pow2(12))};
                 }});
    v.push_back({"theta22", g,
                 "50521 theta2^22 = 4 (A_10 - B_10) - 138677*2^14 u^14 (q^2;q^2)^2 (q^4;q^4)^20 - 7381*2^6 u^6 "
                 "(q^2;q^2)^26 (q^4;q^4)^-4",
                 "", [](exponent_t n) {
                     return IdentitySides{theta_power(2, 22, n) * r(50521),
                                          (lambert_a(10, n) - lambert_b(10, n)) * r(4)
                                              - eta(14, {{2, 2}, {4, 20}}, n) * (r(138677) * pow2(14))
                                              - eta(6, {{2, 26}, {4, -4}}, n) * r(7381 * 64)};
                 }});
    v.push_back({"theta24", g,
                 "691 theta2^24 = 2^16 Sum n^11 q^(2n)/(1-q^(4n)) - 2^16 u^8 (q^2;q^2)^24 - 259*2^19 u^16 "
                 "(q^4;q^4)^24",
                 "the cusp terms are u^8 (q^2;q^2)^24 and u^16 (q^4;q^4)^24; the pair u^4 (q;q)^24, u^8 (q^2;q^2)^24 "
                 "fails (theta24-variant)",
                 [](exponent_t n) {
                     return IdentitySides{theta_power(2, 24, n) * r(691),
                                          lambert_even(11, n) * pow2(16) - eta(8, {{2, 24}}, n) * pow2(16)
                                              - eta(16, {{4, 24}}, n) * (r(259) * pow2(19))};
                 }});
}

void add_lambert_pairs(std::vector<CorpusEntry> &v)
{
    const auto g = CorpusGroup::identity_list;
    // L(p) = sum n^p q^n/(1-q^(2n)), O(p) = sum (2n+1)^p q^(2n+1)/(1-q^(4n+2)); a, b, c = theta2^4, theta3^4, theta4^4.
    v.push_back({"lambert-n3-a", g, "16 L(3) = a b", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{lambert_half(3, n) * r(16), a * b};
                 }});
    v.push_back({"lambert-n3-b", g, "a b = theta2^8(tau/2) / 16", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{a * b, at_half_argument(theta_power(2, 8, 2 * n)) * Rational(1, 16)};
                 }});
    v.push_back({"lambert-n3-c", g, "32 O(3) = a (b + c)", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{lambert_odd(3, n) * r(32), a * (b + c)};
                 }});
    v.push_back({"lambert-n5-a", g, "16 L(5) = a b (a + b)", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{lambert_half(5, n) * r(16), a * b * (a + b)};
                 }});
    v.push_back({"lambert-n5-b", g, "32 O(5) = a (2 a^2 + 2 b c)", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{lambert_odd(5, n) * r(32), a * (a * a * r(2) + b * c * r(2))};
                 }});
    v.push_back({"lambert-n5-c", g, "32 O(5) = 2 a^3 + 2 a b c", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{lambert_odd(5, n) * r(32), pow(a, 3) * r(2) + a * b * c * r(2)};
                 }});
    v.push_back({"lambert-n7-a", g, "32 L(7) = a b (2 c^2 + 17 a b)",
                 "the c^2 term carries a factor 2; a b c^2 + 17 (a b)^2 fails (lambert-n7-a-variant)", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{lambert_half(7, n) * r(32), a * b * (c * c * r(2) + a * b * r(17))};
                 }});
    v.push_back({"lambert-n7-b", g, "64 O(7) = a (b + c) (17 a^2 + 2 b c)", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{lambert_odd(7, n) * r(64), a * (b + c) * (a * a * r(17) + b * c * r(2))};
                 }});
    v.push_back({"lambert-n9-a", g, "16 L(9) = a b (a + b) (a^2 + 29 a b + b^2)", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{lambert_half(9, n) * r(16), a * b * (a + b) * (a * a + a * b * r(29) + b * b)};
                 }});
    v.push_back({"lambert-n9-b", g, "32 O(9) = 62 a^5 + 154 a^3 b c + 2 a (b c)^2", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const QSeries bc = b * c;
                     return IdentitySides{lambert_odd(9, n) * r(32),
                                          pow(a, 5) * r(62) + pow(a, 3) * bc * r(154) + a * bc * bc * r(2)};
                 }});
    v.push_back({"lambert-n11-a", g, "32 L(11) = 2 a b c^4 + 259 (a b)^2 c^2 + 1382 (a b)^3",
                 "the first coefficient is 2; 4 fails (lambert-n11-a-variant)", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const QSeries ab = a * b;
                     return IdentitySides{lambert_half(11, n) * r(32), ab * pow(c, 4) * r(2)
                                                                           + ab * ab * c * c * r(259)
                                                                           + pow(ab, 3) * r(1382)};
                 }});
    v.push_back({"lambert-n11-b", g, "64 O(11) = a (b + c) (1382 a^4 + 1384 a^2 b c + 2 (b c)^2)",
                 "the coefficients 1383, 1131 with a 2 b^3 c term fail (lambert-n11-b-variant)", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const QSeries bc = b * c;
                     return IdentitySides{lambert_odd(11, n) * r(64),
                                          a * (b + c)
                                              * (pow(a, 4) * r(1382) + a * a * bc * r(1384) + bc * bc * r(2))};
                 }});
}

void add_sigma_forms(std::vector<CorpusEntry> &v)
{
    const auto g = CorpusGroup::identity_list;
    // S(k, r) = 8 sum sigma_(k,chi)(4n+r) q^(4n+r); t_k = theta2^k(2 tau), bc = theta3^4 theta4^4(2 tau),
    // s = theta3^4(2 tau) + theta4^4(2 tau).
    v.push_back({"sigma2-1", g, "S(2,1) = t_2 s", "",
                 [](exponent_t n) { return IdentitySides{big_s(2, 1, n), t2(2, n) * s2(n)}; }});
    v.push_back({"sigma2-3", g, "S(2,3) = -t_6", "",
                 [](exponent_t n) { return IdentitySides{big_s(2, 3, n), -t2(6, n)}; }});
    v.push_back({"sigma4-1", g, "S(4,1) = 5 t_10 + 2 t_2 bc", "", [](exponent_t n) {
                     return IdentitySides{big_s(4, 1, n), t2(10, n) * r(5) + t2(2, n) * bc2(n) * r(2)};
                 }});
    v.push_back({"sigma4-3", g, "S(4,3) = -5 t_6 s", "",
                 [](exponent_t n) { return IdentitySides{big_s(4, 3, n), t2(6, n) * s2(n) * r(-5)}; }});
    v.push_back({"sigma6-1", g, "S(6,1) = t_2 (61 t_8 + bc) s", "", [](exponent_t n) {
                     return IdentitySides{big_s(6, 1, n), t2(2, n) * (t2(8, n) * r(61) + bc2(n)) * s2(n)};
                 }});
    v.push_back({"sigma6-3", g, "S(6,3) = -61 t_14 - 91 t_6 bc", "", [](exponent_t n) {
                     return IdentitySides{big_s(6, 3, n), t2(14, n) * r(-61) - t2(6, n) * bc2(n) * r(91)};
                 }});
    v.push_back({"sigma8-1", g, "S(8,1) = 1385 t_18 + 3052 t_10 bc + 2 t_2 bc^2", "", [](exponent_t n) {
                     const QSeries bc = bc2(n);
                     return IdentitySides{big_s(8, 1, n),
                                          t2(18, n) * r(1385) + t2(10, n) * bc * r(3052) + t2(2, n) * bc * bc * r(2)};
                 }});
    v.push_back({"sigma8-3", g, "S(8,3) = -t_2 s (1385 t_12 + 410 t_4 bc)", "", [](exponent_t n) {
                     return IdentitySides{big_s(8, 3, n),
                                          -(t2(2, n) * s2(n) * (t2(12, n) * r(1385) + t2(4, n) * bc2(n) * r(410)))};
                 }});
    v.push_back({"sigma10-1", g, "S(10,1) = t_2 s (50521 t_16 + 38147 t_8 bc + bc^2)", "", [](exponent_t n) {
                     const QSeries bc = bc2(n);
                     return IdentitySides{big_s(10, 1, n), t2(2, n) * s2(n)
                                                               * (t2(16, n) * r(50521) + t2(8, n) * bc * r(38147)
                                                                  + bc * bc)};
                 }});
    v.push_back({"sigma10-3", g, "S(10,3) = -(50521 t_22 + 138677 t_14 bc + 7381 t_6 bc^2)", "", [](exponent_t n) {
                     const QSeries bc = bc2(n);
                     return IdentitySides{big_s(10, 3, n), -(t2(22, n) * r(50521) + t2(14, n) * bc * r(138677)
                                                             + t2(6, n) * bc * bc * r(7381))};
                 }});
}

void add_eta_forms(std::vector<CorpusEntry> &v)
{
    const auto g = CorpusGroup::identity_list;
    // theta2^k(2 tau) with eta quotients in (q^4;q^4) and (q^8;q^8).
    v.push_back({"eta6", g, "t_6 = -S(2,3)", "",
                 [](exponent_t n) { return IdentitySides{t2(6, n), -big_s(2, 3, n)}; }});
    v.push_back({"eta10", g, "5 t_10 = S(4,1) - 8 q (q^4;q^4)^14 (q^8;q^8)^-4", "", [](exponent_t n) {
                     return IdentitySides{t2(10, n) * r(5), big_s(4, 1, n) - eta(4, {{4, 14}, {8, -4}}, n) * r(8)};
                 }});
    v.push_back({"eta14", g, "61 t_14 = -S(6,3) - 91*2^6 q^3 (q^4;q^4)^10 (q^8;q^8)^4", "", [](exponent_t n) {
                     return IdentitySides{t2(14, n) * r(61),
                                          -big_s(6, 3, n) - eta(12, {{4, 10}, {8, 4}}, n) * r(91 * 64)};
                 }});
    v.push_back({"eta18", g,
                 "1385 t_18 = S(8,1) - 8 q (q^4;q^4)^30 (q^8;q^8)^-12 - 763*2^12 q^5 (q^4;q^4)^6 (q^8;q^8)^12",
                 "cusp coefficients are -8 and -763*2^12; -1 and -763*2^9 fail (eta18-variant)", [](exponent_t n) {
                     return IdentitySides{t2(18, n) * r(1385), big_s(8, 1, n)
                                                                   - eta(4, {{4, 30}, {8, -12}}, n) * r(8)
                                                                   - eta(20, {{4, 6}, {8, 12}}, n)
                                                                         * (r(763) * pow2(12))};
                 }});
    v.push_back({"eta22", g,
                 "50521 t_22 = -S(10,3) - 138677*2^14 q^7 (q^4;q^4)^2 (q^8;q^8)^20 - 7381*2^6 q^3 (q^4;q^4)^26 "
                 "(q^8;q^8)^-4",
                 "", [](exponent_t n) {
                     return IdentitySides{t2(22, n) * r(50521),
                                          -big_s(10, 3, n) - eta(28, {{4, 2}, {8, 20}}, n) * (r(138677) * pow2(14))
                                              - eta(12, {{4, 26}, {8, -4}}, n) * r(7381 * 64)};
                 }});
    v.push_back({"theta2sq", g, "theta2^2 = 4 Sum (-1)^n q^(n+1/2)/(1-q^(2n+1))", "", [](exponent_t n) {
                     const auto w = [](long j) { return Integer(j % 2 == 0 ? 1 : -1); };
                     return IdentitySides{theta_power(2, 2, n), lambert_sum(w, 4, 2, 8, 4, 1, 0, n) * r(4)};
                 }});
}

void add_bridges(std::vector<CorpusEntry> &v)
{
    const auto g = CorpusGroup::identity_list;
    for (long k = 1; k <= 5; ++k) {
        const std::string ks = std::to_string(k);
        const std::string p = std::to_string(2 * k);
        v.push_back({"bridge1-k" + ks, g,
                     "Sum (2n+1)^" + p + " (q^(2n+1)/(1+q^(4n+2)) + (-1)^n q^(2n+1)/(1-q^(4n+2))) = 2 Sum sigma_(" + p
                         + ",chi)(4n+1) q^(4n+1)",
                     "the first denominator is 1+q^(4n+2); 1+q^(2n+1) with a -2 fails (bridge1-k" + ks + "-variant)",
                     [k](exponent_t n) {
                         return IdentitySides{bridge_lhs(k, 1, n), sigma_series(2 * k, 1, n) * r(2)};
                     }});
        v.push_back({"bridge3-k" + ks, g,
                     "Sum (2n+1)^" + p + " (q^(2n+1)/(1+q^(4n+2)) - (-1)^n q^(2n+1)/(1-q^(4n+2))) = -2 Sum sigma_(" + p
                         + ",chi)(4n+3) q^(4n+3)",
                     "", [k](exponent_t n) {
                         return IdentitySides{bridge_lhs(k, -1, n), sigma_series(2 * k, 3, n) * r(-2)};
                     }});
    }
}

void add_prelim(std::vector<CorpusEntry> &v)
{
    const auto g = CorpusGroup::prelim;
    v.push_back({"prelim-jacobi", g, "theta2^4 = theta3^4 - theta4^4", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{a, b - c};
                 }});
    v.push_back({"prelim-triple-product", g, "theta2 theta3 theta4 = 2 q^(1/4) (q^2;q^2)^3", "", [](exponent_t n) {
                     return IdentitySides{theta_power(2, 1, n) * theta_power(3, 1, n) * theta_power(4, 1, n),
                                          eta(1, {{2, 3}}, n) * r(2)};
                 }});
    v.push_back({"prelim-half-argument", g, "theta2 theta3 = theta2^2(tau/2) / 2", "", [](exponent_t n) {
                     return IdentitySides{theta_power(2, 1, n) * theta_power(3, 1, n),
                                          at_half_argument(theta_power(2, 2, 2 * n)) * Rational(1, 2)};
                 }});
    v.push_back({"prelim-double-argument", g, "theta3 theta4 = theta4^2(2 tau)", "", [](exponent_t n) {
                     return IdentitySides{theta_power(3, 1, n) * theta_power(4, 1, n), theta_power(4, 2, n, 2)};
                 }});
    v.push_back({"prelim-e-sum", g, "e1 + e2 + e3 = 0", "", [](exponent_t n) {
                     const EValues e = e_values(n);
                     return IdentitySides{e.e1 + e.e2 + e.e3, QSeries::zero(n)};
                 }});
    v.push_back({"prelim-e1-minus-e3", g, "e1 - e3 = theta4^4", "", [](exponent_t n) {
                     const EValues e = e_values(n);
                     return IdentitySides{e.e1 - e.e3, theta_power(4, 4, n)};
                 }});
    v.push_back({"prelim-g2-e", g, "g2 = -4 (e1 e2 + e1 e3 + e2 e3)", "", [](exponent_t n) {
                     const EValues e = e_values(n);
                     return IdentitySides{g_invariants(n).g2, (e.e1 * e.e2 + e.e1 * e.e3 + e.e2 * e.e3) * r(-4)};
                 }});
    v.push_back({"prelim-g2-theta", g, "g2 = 4/3 (theta3^8 + theta2^8 - theta2^4 theta3^4)", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{g_invariants(n).g2, (b * b + a * a - a * b) * Rational(4, 3)};
                 }});
    v.push_back({"prelim-g3-e", g, "g3 = 4 e1 e2 e3", "", [](exponent_t n) {
                     const EValues e = e_values(n);
                     return IdentitySides{g_invariants(n).g3, e.e1 * e.e2 * e.e3 * r(4)};
                 }});
    v.push_back({"prelim-e1-lambert", g, "e1 = 1 - 8 Sum (-1)^n n q^(2n)/(1-q^(2n)) - E2/3", "", [](exponent_t n) {
                     const auto w = [](long j) { return Integer(j % 2 == 0 ? j : -j); };
                     return IdentitySides{e_values(n).e1, QSeries::one(n) - lambert_sum(w, 8, 0, 8, 0, 1, 1, n) * r(8)
                                                              - e2_series(n) * Rational(1, 3)};
                 }});
    v.push_back({"prelim-e2-lambert-plus", g, "e2 = -(1 + 24 Sum n q^n/(1+q^n)) / 3", "", [](exponent_t n) {
                     const auto w = [](long j) { return Integer(j); };
                     return IdentitySides{e_values(n).e2, (QSeries::one(n) + lambert_sum(w, 4, 0, 4, 0, -1, 1, n) * r(24))
                                                              * Rational(-1, 3)};
                 }});
    v.push_back({"prelim-e2-lambert", g, "e2 = -8 Sum n q^n/(1-q^(2n)) - E2/3", "", [](exponent_t n) {
                     const auto w = [](long j) { return Integer(j); };
                     return IdentitySides{e_values(n).e2, one_minus_x_power_sum(w, n) * r(-8) - e2_series(n) * Rational(1, 3)};
                 }});
    v.push_back({"prelim-e3-lambert", g, "e3 = -8 Sum (-1)^n n q^n/(1-q^(2n)) - E2/3", "", [](exponent_t n) {
                     const auto w = [](long j) { return Integer(j % 2 == 0 ? j : -j); };
                     return IdentitySides{e_values(n).e3, one_minus_x_power_sum(w, n) * r(-8) - e2_series(n) * Rational(1, 3)};
                 }});
    v.push_back({"prelim-e2-minus-e3-lambert", g, "e2 - e3 = -16 Sum (2n+1) q^(2n+1)/(1-q^(4n+2))", "",
                 [](exponent_t n) {
                     const EValues e = e_values(n);
                     return IdentitySides{e.e2 - e.e3, lambert_odd(1, n) * r(-16)};
                 }});
    v.push_back({"prelim-e2-minus-e3-theta", g, "e2 - e3 = -theta2^4", "", [](exponent_t n) {
                     const EValues e = e_values(n);
                     return IdentitySides{e.e2 - e.e3, -theta_power(2, 4, n)};
                 }});

    struct Point {
        WpPoint p;
        const char *name;
        const char *where;
    };
    static const Point points[] = {
        {WpPoint::half_lattice_tau, "half-tau", "pi tau/2"},
        {WpPoint::half_lattice_both, "half-both", "(pi + pi tau)/2"},
        {WpPoint::quarter_a, "quarter-a", "(pi + 2 pi tau)/4"},
        {WpPoint::quarter_b, "quarter-b", "(pi + pi tau)/2 at modulus tau + 1/2"},
    };
    for (const Point &pt : points) {
        for (int d = 0; d <= 2; ++d) {
            if (d == 1 && (pt.p == WpPoint::half_lattice_tau || pt.p == WpPoint::half_lattice_both)) {
                continue;
            }
            const std::string ds = d == 0 ? "wp" : d == 1 ? "wp1" : "wp2";
            const WpPoint p = pt.p;
            v.push_back({"prelim-" + std::string(pt.name) + "-" + ds, g,
                         std::string(d == 0 ? "wp" : d == 1 ? "wp'" : "wp''") + " at " + pt.where
                             + ": theta form = Lambert form",
                         "", [p, d](exponent_t n) {
                             return IdentitySides{wp_value_theta(p, d, n), wp_value_lambert(p, d, n)};
                         }});
        }
    }
    v.push_back({"prelim-quarter-a-wp2-recurrence", g, "wp'' = 6 wp^2 - g2/2 at (pi + 2 pi tau)/4", "",
                 [](exponent_t n) {
                     const QSeries w = wp_value_theta(WpPoint::quarter_a, 0, n);
                     return IdentitySides{wp_value_theta(WpPoint::quarter_a, 2, n),
                                          w * w * r(6) - g_invariants(n).g2 * Rational(1, 2)};
                 }});
    v.push_back({"prelim-f-e1", g, "6 e1^2 - g2/2 = 2 theta3^4 theta4^4", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const EValues e = e_values(n);
                     return IdentitySides{e.e1 * e.e1 * r(6) - g_invariants(n).g2 * Rational(1, 2), b * c * r(2)};
                 }});
    v.push_back({"prelim-f-e2", g, "6 e2^2 - g2/2 = 2 theta2^4 theta3^4", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const EValues e = e_values(n);
                     return IdentitySides{e.e2 * e.e2 * r(6) - g_invariants(n).g2 * Rational(1, 2), a * b * r(2)};
                 }});
    v.push_back({"prelim-f-e2-half", g, "2 theta2^4 theta3^4 = theta2^8(tau/2) / 8", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{a * b * r(2), at_half_argument(theta_power(2, 8, 2 * n)) * Rational(1, 8)};
                 }});
    v.push_back({"prelim-f-e2-lambert", g, "2 theta2^4 theta3^4 = 32 Sum n^3 q^n/(1-q^(2n))", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     return IdentitySides{a * b * r(2), lambert_half(3, n) * r(32)};
                 }});
    v.push_back({"prelim-f-e3", g, "6 e3^2 - g2/2 = -2 theta2^4 theta4^4", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const EValues e = e_values(n);
                     return IdentitySides{e.e3 * e.e3 * r(6) - g_invariants(n).g2 * Rational(1, 2), a * c * r(-2)};
                 }});
    for (long k = 1; k <= 5; ++k) {
        const std::string p = std::to_string(2 * k);
        v.push_back({"prelim-wp-derivative-" + p, g,
                     "P_" + p + "(x, y) = (-1)^(k+1) 2^(2k+3) Sum n^(2k+1) q^n/(1-q^(2n)) with k = " + std::to_string(k),
                     "", [k](exponent_t n) {
                         return IdentitySides{wp_poly_eval(wp_recurrence_poly(2 * k), n),
                                              wp_even_at_half_lattice(k, n)};
                     }});
    }
}

std::vector<CorpusEntry> build_catalog()
{
    std::vector<CorpusEntry> v;
    add_theta_powers(v);
    add_lambert_pairs(v);
    add_sigma_forms(v);
    add_eta_forms(v);
    add_bridges(v);
    add_prelim(v);
    return v;
}

std::vector<CorpusEntry> build_variants()
{
    std::vector<CorpusEntry> v;
    const auto tp = CorpusGroup::theta_powers;
    const auto il = CorpusGroup::identity_list;
    v.push_back({"theta16-variant", tp, "17 theta2^16 = 2^13 Sum n^7 q^(2n)/(1-q^(4n)) - 2^13 u^4 (q;q)^8 (q^2;q^2)^8", "",
                 [](exponent_t n) {
                     return IdentitySides{theta_power(2, 16, n) * r(17),
                                          lambert_even(7, n) * pow2(13) - eta(4, {{1, 8}, {2, 8}}, n) * pow2(13)};
                 }});
    v.push_back({"theta18-variant", tp,
                 "1385 theta2^18 = 4 (A_8 + B_8) - u^2 (q^2;q^2)^30 (q^4;q^4)^-12 - 763*2^9 u^10 (q^2;q^2)^6 "
                 "(q^4;q^4)^12",
                 "", [](exponent_t n) {
                     return IdentitySides{theta_power(2, 18, n) * r(1385),
                                          (lambert_a(8, n) + lambert_b(8, n)) * r(4) - eta(2, {{2, 30}, {4, -12}}, n)
                                              - eta(10, {{2, 6}, {4, 12}}, n) * (r(763) * pow2(9))};
                 }});
    v.push_back({"theta24-variant", tp,
                 "691 theta2^24 = 2^16 Sum n^11 q^(2n)/(1-q^(4n)) - 2^16 u^4 (q;q)^24 - 259*2^19 u^8 (q^2;q^2)^24", "",
                 [](exponent_t n) {
                     return IdentitySides{theta_power(2, 24, n) * r(691),
                                          lambert_even(11, n) * pow2(16) - eta(4, {{1, 24}}, n) * pow2(16)
                                              - eta(8, {{2, 24}}, n) * (r(259) * pow2(19))};
                 }});
    v.push_back({"lambert-n7-a-variant", il, "32 L(7) = a b c^2 + 17 (a b)^2", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const QSeries ab = a * b;
                     return IdentitySides{lambert_half(7, n) * r(32), ab * c * c + ab * ab * r(17)};
                 }});
    v.push_back({"lambert-n11-a-variant", il, "32 L(11) = 4 a b c^4 + 259 (a b)^2 c^2 + 1382 (a b)^3", "",
                 [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const QSeries ab = a * b;
                     return IdentitySides{lambert_half(11, n) * r(32), ab * pow(c, 4) * r(4)
                                                                           + ab * ab * c * c * r(259)
                                                                           + pow(ab, 3) * r(1382)};
                 }});
    v.push_back({"lambert-n11-b-variant", il,
                 "64 O(11) = a (theta3^4(2 tau) + c) (1383 a^4 + 1131 a^2 b c + 2 b^3 c)", "", [](exponent_t n) {
                     const auto [a, b, c] = abc(n);
                     const QSeries bc = b * c;
                     return IdentitySides{lambert_odd(11, n) * r(64),
                                          a * (theta_power(3, 4, n, 2) + c)
                                              * (pow(a, 4) * r(1383) + a * a * bc * r(1131) + pow(b, 3) * c * r(2))};
                 }});
    v.push_back({"eta18-variant", il,
                 "1385 t_18 = S(8,1) - q (q^4;q^4)^30 (q^8;q^8)^-12 - 763*2^9 q^5 (q^4;q^4)^6 (q^8;q^8)^12", "",
                 [](exponent_t n) {
                     return IdentitySides{t2(18, n) * r(1385), big_s(8, 1, n) - eta(4, {{4, 30}, {8, -12}}, n)
                                                                   - eta(20, {{4, 6}, {8, 12}}, n) * (r(763) * pow2(9))};
                 }});
    for (long k = 1; k <= 5; ++k) {
        const std::string p = std::to_string(2 * k);
        v.push_back({"bridge1-k" + std::to_string(k) + "-variant", il,
                     "Sum (2n+1)^" + p + " (q^(2n+1)/(1+q^(2n+1)) + (-1)^n q^(2n+1)/(1-q^(4n+2))) = -2 Sum sigma_(" + p
                         + ",chi)(4n+1) q^(4n+1)",
                     "", [k](exponent_t n) {
                         return IdentitySides{bridge_lhs_variant(k, 1, n), sigma_series(2 * k, 1, n) * r(-2)};
                     }});
    }
    return v;
}

} // namespace

const std::vector<CorpusEntry> &identity_catalog()
{
    static const std::vector<CorpusEntry> c = build_catalog();
    return c;
}

const std::vector<CorpusEntry> &identity_variants()
{
    static const std::vector<CorpusEntry> v = build_variants();
    return v;
}

const CorpusEntry &find_identity(const std::string &id)
{
    for (const auto *list : {&identity_catalog(), &identity_variants()}) {
        for (const auto &e : *list) {
            if (e.id == id) {
                return e;
            }
        }
    }
    throw invalid_argument("unknown identity id '" + id + "'");
}

IdentityCertificate check_identity(const CorpusEntry &e, exponent_t n)
{
    const IdentitySides s = e.build(n);
    return certify(e.id, s.lhs, s.rhs, n);
}

std::vector<IdentityCertificate> verify_entries(const std::vector<const CorpusEntry *> &entries, exponent_t n,
                                                unsigned jobs)
{
    std::vector<IdentityCertificate> out(entries.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            out[i] = check_identity(*entries[i], n);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
                try {
                    out[i] = check_identity(*entries[i], n);
                } catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

std::vector<IdentityCertificate> verify_group(CorpusGroup g, exponent_t n, unsigned jobs)
{
    std::vector<const CorpusEntry *> sel;
    for (const auto &e : identity_catalog()) {
        if (e.group == g) {
            sel.push_back(&e);
        }
    }
    return verify_entries(sel, n, jobs);
}

std::vector<IdentityCertificate> verify_identity_corpus(exponent_t n, unsigned jobs)
{
    std::vector<const CorpusEntry *> sel;
    for (const auto &e : identity_catalog()) {
        if (e.group != CorpusGroup::prelim) {
            sel.push_back(&e);
        }
    }
    return verify_entries(sel, n, jobs);
}

std::vector<IdentityCertificate> verify_prelim_corpus(exponent_t n)
{
    return verify_group(CorpusGroup::prelim, n);
}

} // namespace thetaform
