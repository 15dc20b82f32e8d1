#ifndef XIZETA_SPECIAL_FUNCTIONS_HPP
#define XIZETA_SPECIAL_FUNCTIONS_HPP

#include "xizeta/types.hpp"

namespace xizeta {

// Gamma(z), Lanczos g=7 with reflection for Re z < 1/2.
// Relative error <= 1e-12 for 0 < Re z <= 10, |Im z| <= 100.
// Throws PoleError within 1e-12 of a nonpositive integer.
Cplx gamma(const Cplx& z);

// zeta(z) for Re z > 0, z != 1, via Borwein-accelerated eta series.
// Relative error <= 1e-12 for |Im z| <= 100.
Cplx zeta_reference(const Cplx& z);
Cplx zeta_reference(const Cplx& z, EvalAccuracy& acc);

// The completed zeta pi^(-z/2) Gamma(z/2) zeta(z) on the strip 0 < Re z < 1.
Cplx completed_zeta_direct(const Cplx& z);

}  // namespace xizeta

#endif
