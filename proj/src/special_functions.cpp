#include "xizeta/special_functions.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

namespace xizeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

// Lanczos g=7, 9 coefficients (Godfrey set); ~1e-13 relative over the
// contract domain, verified against a high-precision reference scan.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

Cplx gamma_lanczos_half_plane(Cplx z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    Cplx acc(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    Cplx t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

// Borwein d_k table for the eta acceleration; built once per n.
const std::vector<double>& borwein_d(int n) {
    static std::mutex mu;
    static std::vector<std::vector<double>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
    if (cache[n].empty()) {
        std::vector<double> d(n + 1);
        double t = 1.0 / n;  // t_j = (n+j-1)! 4^j / ((n-j)! (2j)!), t_0 = 1/n
        double s = t;
        d[0] = n * s;
        for (int j = 1; j <= n; ++j) {
            t *= 4.0 * (n + j - 1) * (n - j + 1) / ((2.0 * j - 1) * (2.0 * j));
            s += t;
            d[j] = n * s;
        }
        cache[n] = std::move(d);
    }
    return cache[n];
}

// Terms needed for <=1e-13-level eta acceleration error at height t
// (from the Borwein bound ~ (3+sqrt8)^-n (1+2|t|) e^(pi|t|/2)).
int borwein_terms(double t) {
    double at = std::abs(t);
    double digits = 16.5 * std::numbers::ln10 + kPi * at / 2.0 + std::log1p(2.0 * at);
    int n = static_cast<int>(std::ceil(digits / std::log(3.0 + std::sqrt(8.0)))) + 4;
    return std::max(50, n);
}

}  // namespace

Cplx gamma(const Cplx& z) {
    require_finite(z, "gamma");
    double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z.real() - nearest) <= kPoleTol && std::abs(z.imag()) <= kPoleTol)
        throw PoleError("gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        Cplx s = std::sin(kPi * z);
        if (s == Cplx(0.0, 0.0)) throw PoleError("gamma: pole at nonpositive integer");
        return kPi / (s * gamma_lanczos_half_plane(Cplx(1.0, 0.0) - z));
    }
    return gamma_lanczos_half_plane(z);
}

Cplx zeta_reference(const Cplx& z, EvalAccuracy& acc) {
    require_finite(z, "zeta_reference");
    if (z.real() <= 0.0) throw DomainError("zeta_reference: requires Re(z) > 0");
    if (std::abs(z - Cplx(1.0, 0.0)) <= kPoleTol) throw PoleError("zeta_reference: pole at z = 1");

    const int n = borwein_terms(z.imag());
    const std::vector<double>& d = borwein_d(n);
    Cplx sum(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        double coeff = (k % 2 == 0) ? (d[k] - d[n]) : -(d[k] - d[n]);
        sum += coeff * std::exp(-z * std::log(static_cast<double>(k + 1)));
    }
    Cplx eta_factor = 1.0 - std::exp((1.0 - z) * std::numbers::ln2);
    Cplx value = -sum / (d[n] * eta_factor);

    acc.terms_used = n;
    double bound = 3.0 * (1.0 + 2.0 * std::abs(z.imag())) * std::exp(kPi * std::abs(z.imag()) / 2.0);
    acc.abs_err_estimate = std::abs(value) * 1e-13 +
                           bound * std::exp(-n * std::log(3.0 + std::sqrt(8.0))) / std::abs(eta_factor);
    return value;
}

Cplx zeta_reference(const Cplx& z) {
    EvalAccuracy acc;
    return zeta_reference(z, acc);
}

Cplx completed_zeta_direct(const Cplx& z) {
    require_strip(z, "completed_zeta_direct");
    Cplx pref = std::exp(-z / 2.0 * std::log(kPi));
    return pref * gamma(z / 2.0) * zeta_reference(z);
}

}  // namespace xizeta
