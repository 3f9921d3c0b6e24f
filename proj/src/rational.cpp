#include <thetaform/rational.hpp>

namespace thetaform
{

Integer ipow(const Integer &base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer ipow(long base, unsigned long exp)
{
    return ipow(Integer(base), exp);
}

Integer binomial(long n, long k)
{
    if (k < 0) {
        return 0;
    }
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

} // namespace thetaform
