#ifndef THETAFORM_ERROR_HPP
#define THETAFORM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace thetaform
{

// Base of every exception thrown by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define THETAFORM_DECLARE_ERROR(name)                                                                                  \
    class name : public error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        using error::error;                                                                                            \
    }

THETAFORM_DECLARE_ERROR(zero_leading_coefficient);
THETAFORM_DECLARE_ERROR(non_integral_exponent);
THETAFORM_DECLARE_ERROR(insufficient_order);
THETAFORM_DECLARE_ERROR(odd_index);
THETAFORM_DECLARE_ERROR(out_of_range);
THETAFORM_DECLARE_ERROR(unsupported_power);
THETAFORM_DECLARE_ERROR(residual_nonzero);
THETAFORM_DECLARE_ERROR(internal_mismatch);
THETAFORM_DECLARE_ERROR(convergence_too_slow);
THETAFORM_DECLARE_ERROR(odd_c);
THETAFORM_DECLARE_ERROR(branch_unavailable);
THETAFORM_DECLARE_ERROR(cutoff_too_small);
THETAFORM_DECLARE_ERROR(invalid_argument);

#undef THETAFORM_DECLARE_ERROR

} // namespace thetaform

#endif
