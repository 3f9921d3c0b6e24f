#ifndef THETAFORM_RATIONAL_HPP
#define THETAFORM_RATIONAL_HPP

#include <string>
#include <utility>

#include <gmpxx.h>

namespace thetaform
{

// Exact rationals are GMP rationals; mpq_class keeps them canonical
// (gcd(num, den) = 1, den > 0) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "num" for integers, "num/den" otherwise.
inline std::string to_string(const Rational &r)
{
    return r.get_str();
}

inline std::string to_string(const Integer &z)
{
    return z.get_str();
}

inline Rational parse_rational(const std::string &s)
{
    Rational r(s);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational &r)
{
    return r.get_den() == 1;
}

// Decimal-string pair, the JSON wire form of one coefficient.
inline std::pair<std::string, std::string> to_string_pair(const Rational &r)
{
    return {r.get_num().get_str(), r.get_den().get_str()};
}

Integer ipow(const Integer &base, unsigned long exp);
Integer ipow(long base, unsigned long exp);
Integer binomial(long n, long k);

} // namespace thetaform

#endif
