#ifndef XIZETA_ERRORS_HPP
#define XIZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xizeta {

enum class ErrorCode {
    domain = 1,
    ordering,
    pole,
    convergence,
    overflow,
    fit,
    audit,
    realness,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Invalid argument outside an operation's domain (bad t, Re z out of strip, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

// Radii ordering chain 0 < r1 <= r_m/10 < r_m < 1/2 < r_M < ray_cut violated.
struct OrderingError : Error {
    explicit OrderingError(const std::string& what) : Error(ErrorCode::ordering, what) {}
};

// Evaluation at (or within tolerance of) a pole.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(ErrorCode::pole, what) {}
};

// Adaptive quadrature exhausted its depth/panel budget above tolerance.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& what) : Error(ErrorCode::convergence, what) {}
};

// A computed magnitude exceeded exp(700)-scale representability.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(ErrorCode::overflow, what) {}
};

// Log-log regression quality below the acceptance floor (r^2 < 0.99).
struct FitError : Error {
    explicit FitError(const std::string& what) : Error(ErrorCode::fit, what) {}
};

// No integral-form convention matches the direct oracle; implementation bug.
struct AuditFailure : Error {
    explicit AuditFailure(const std::string& what) : Error(ErrorCode::audit, what) {}
};

// Im(xi) on the critical line above rounding tolerance; implementation bug.
struct RealnessViolation : Error {
    explicit RealnessViolation(const std::string& what) : Error(ErrorCode::realness, what) {}
};

}  // namespace xizeta

#endif
