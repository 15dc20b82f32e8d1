#ifndef XIZETA_TYPES_HPP
#define XIZETA_TYPES_HPP

#include <cmath>
#include <complex>
#include <cstdint>

#include "xizeta/errors.hpp"

namespace xizeta {

// The universal scalar: z = (re, im) in double precision.
using Cplx = std::complex<double>;

inline bool is_finite(const Cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const Cplx& z, const char* who) {
    if (!is_finite(z)) throw DomainError(std::string(who) + ": non-finite input");
}

// Accuracy record for series evaluations.
struct EvalAccuracy {
    double abs_err_estimate = 0.0;  // >= 0
    std::int64_t terms_used = 0;
};

inline bool in_strip(const Cplx& z) {
    return z.real() > 0.0 && z.real() < 1.0;
}

inline void require_strip(const Cplx& z, const char* who) {
    require_finite(z, who);
    if (!in_strip(z))
        throw DomainError(std::string(who) + ": Re(z) must lie in (0, 1)");
}

}  // namespace xizeta

#endif
