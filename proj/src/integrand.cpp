#include "xizeta/integrand.hpp"

namespace xizeta {

Cplx sin_denominator(const Cplx& w) {
    require_finite(w, "sin_denominator");
    return detail::sin_denominator_t<double>(w);
}

Cplx principal_power(const Cplx& w, const Cplx& v) {
    require_finite(w, "principal_power");
    require_finite(v, "principal_power");
    return detail::principal_power_t<double>(w, v);
}

Cplx integrand_left(const Cplx& w, const Cplx& z) {
    require_finite(w, "integrand_left");
    require_finite(z, "integrand_left");
    return detail::integrand_t<double>(w, -z, -1.0);
}

Cplx integrand_right(const Cplx& w, const Cplx& z) {
    require_finite(w, "integrand_right");
    require_finite(z, "integrand_right");
    return detail::integrand_t<double>(w, z - 1.0, +1.0);
}

Cplx integrand_for(Side side, const Cplx& w, const Cplx& z) {
    return side == Side::Left ? integrand_left(w, z) : integrand_right(w, z);
}

}  // namespace xizeta
