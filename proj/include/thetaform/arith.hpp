#ifndef THETAFORM_ARITH_HPP
#define THETAFORM_ARITH_HPP

#include <thetaform/rational.hpp>

namespace thetaform
{

// Bernoulli number B_n for even n >= 0 (B_2 = 1/6, B_4 = -1/30, ...).
// Throws odd_index for odd n and out_of_range for negative n.
Rational bernoulli(long n);

// Euler number E_n for even n >= 0 with the alternating sign convention
// E_2 = -1, E_4 = 5, E_6 = -61, i.e. sech x = sum E_n x^n / n!.
Integer euler_number(long n);

// sin(n pi / 2): 0 for even n, 1 for n = 1 mod 4, -1 for n = 3 mod 4.
int chi(long n);

// Principal character mod 2: 1 for odd n, 0 for even n.
int chi2(long n);

// sum over d | n of d^k chi(d), for n >= 1.
Integer sigma_chi(long k, long n);

// Kronecker symbol (a / b).
int kronecker(long a, long b);

} // namespace thetaform

#endif
