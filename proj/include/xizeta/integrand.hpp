#ifndef XIZETA_INTEGRAND_HPP
#define XIZETA_INTEGRAND_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "xizeta/contour.hpp"
#include "xizeta/types.hpp"

namespace xizeta {

// Side determines (exponent, phase) jointly: Left is w^(-z) exp(-pi i w^2),
// Right is w^(z-1) exp(+pi i w^2); the shared denominator is
// exp(pi i w) - exp(-pi i w) = 2i sin(pi w).
struct IntegrandKind {
    Side side;
    Cplx exponent(const Cplx& z) const { return side == Side::Left ? -z : z - 1.0; }
    double phase_sign() const { return side == Side::Left ? -1.0 : +1.0; }
};

namespace detail {

template <typename T>
std::complex<T> exp_checked(const std::complex<T>& arg) {
    if (arg.real() > T(700)) throw OverflowError("exp magnitude above exp(700)");
    return std::exp(arg);
}

// 2i sin(pi w), exactly exp(pi i w) - exp(-pi i w); dominant-exponential
// factorization above |Im w| = 20 keeps the large-|w| regime overflow-safe.
template <typename T>
std::complex<T> sin_denominator_t(const std::complex<T>& w) {
    constexpr T pi = std::numbers::pi_v<T>;
    const std::complex<T> i(T(0), T(1));
    if (w.imag() == T(0) && w.real() == std::round(w.real())) return std::complex<T>(T(0), T(0));
    if (std::abs(w.imag()) > T(20)) {
        // e^{pi i w} - e^{-pi i w} = -e^{-pi i w}(1 - e^{2 pi i w}), Im w > 0
        if (w.imag() > T(0))
            return -exp_checked(-pi * i * w) * (T(1) - std::exp(T(2) * pi * i * w));
        return exp_checked(pi * i * w) * (T(1) - std::exp(T(-2) * pi * i * w));
    }
    return T(2) * i * std::sin(pi * w);
}

// w^v on the principal branch, exp(v (ln|w| + i Arg w)), Arg in (-pi, pi].
template <typename T>
std::complex<T> principal_power_t(const std::complex<T>& w, const std::complex<T>& v) {
    if (w == std::complex<T>(T(0), T(0))) throw DomainError("principal_power: w = 0");
    std::complex<T> logw(std::log(std::abs(w)), std::arg(w));
    return exp_checked(v * logw);
}

template <typename T>
std::complex<T> integrand_t(const std::complex<T>& w, const std::complex<T>& v, T phase_sign) {
    constexpr T pi = std::numbers::pi_v<T>;
    if (w == std::complex<T>(T(0), T(0))) throw PoleError("integrand: pole at w = 0");
    std::complex<T> den = sin_denominator_t(w);
    if (den == std::complex<T>(T(0), T(0))) throw PoleError("integrand: pole at integer w");
    std::complex<T> logw(std::log(std::abs(w)), std::arg(w));
    std::complex<T> log_num = v * logw + phase_sign * pi * std::complex<T>(T(0), T(1)) * w * w;
    return exp_checked(log_num) / den;
}

// exp(phase_sign pi i w^2) * pi w / sin(pi w) - 1; analytic near 0, O(w^2).
template <typename T>
std::complex<T> phi_minus_one(const std::complex<T>& w, T phase_sign) {
    constexpr T pi = std::numbers::pi_v<T>;
    return std::exp(phase_sign * pi * std::complex<T>(T(0), T(1)) * w * w) * (pi * w) /
               std::sin(pi * w) -
           T(1);
}

}  // namespace detail

// exp(pi i w) - exp(-pi i w) computed cancellation-free as 2i sin(pi w);
// exact 0 at integer w (callers treat that as the pole marker).
Cplx sin_denominator(const Cplx& w);

// Principal-branch complex power w^v.
Cplx principal_power(const Cplx& w, const Cplx& v);

// The Theorem-1 integrands.
Cplx integrand_left(const Cplx& w, const Cplx& z);
Cplx integrand_right(const Cplx& w, const Cplx& z);
Cplx integrand_for(Side side, const Cplx& w, const Cplx& z);

}  // namespace xizeta

#endif
