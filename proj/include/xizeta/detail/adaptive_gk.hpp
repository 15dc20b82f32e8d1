#ifndef XIZETA_DETAIL_ADAPTIVE_GK_HPP
#define XIZETA_DETAIL_ADAPTIVE_GK_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace xizeta::detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1] (QUADPACK dqk15 constants).
template <typename T>
struct GK15 {
    static constexpr T xgk[8] = {
        T(0.991455371120812639206854697526329L), T(0.949107912342758524526189684047851L),
        T(0.864864423359769072789712788640926L), T(0.741531185599394439863864773280788L),
        T(0.586087235467691130294144838258730L), T(0.405845151377397166906606412076961L),
        T(0.207784955007898467600689403773245L), T(0.0L)};
    static constexpr T wgk[8] = {
        T(0.022935322010529224963732008058970L), T(0.063092092629978553290700663189204L),
        T(0.104790010322250183839876322541518L), T(0.140653259715525918745189590510238L),
        T(0.169004726639267902826583426598550L), T(0.190350578064785409913256402421014L),
        T(0.204432940075298892414161999234649L), T(0.209482141084727828012999174891714L)};
    static constexpr T wg[4] = {
        T(0.129484966168869693270611432679082L), T(0.279705391489276667901467771423780L),
        T(0.381830050505118944950369775488975L), T(0.417959183673469387755102040816327L)};
};

template <typename T>
struct Panel {
    T a, b;
    std::complex<T> value;
    T err;
    T l1;
    int depth;
    std::uint64_t id;  // insertion order, for deterministic tie-breaking
};

template <typename T>
struct PanelWorse {
    bool operator()(const Panel<T>& x, const Panel<T>& y) const {
        if (x.err != y.err) return x.err < y.err;  // max-heap on err
        return x.id > y.id;
    }
};

template <typename T, typename F>
Panel<T> gk15_panel(const F& f, T a, T b, int depth, std::uint64_t id) {
    using GK = GK15<T>;
    const T c = (a + b) / T(2);
    const T h = (b - a) / T(2);
    const std::complex<T> f0 = f(c);
    std::complex<T> k = GK::wgk[7] * f0;
    std::complex<T> g = GK::wg[3] * f0;
    T l1 = GK::wgk[7] * std::abs(f0);
    for (int i = 0; i < 7; ++i) {
        const std::complex<T> fa = f(c - h * GK::xgk[i]);
        const std::complex<T> fb = f(c + h * GK::xgk[i]);
        const std::complex<T> s = fa + fb;
        k += GK::wgk[i] * s;
        l1 += GK::wgk[i] * (std::abs(fa) + std::abs(fb));
        if (i % 2 == 1) g += GK::wg[i / 2] * s;
    }
    const T ah = h < T(0) ? -h : h;
    return Panel<T>{a, b, k * h, std::abs((k - g) * h), l1 * ah, depth, id};
}

struct AdaptiveLimits {
    int max_depth = 40;
    int max_panels = 20000;
};

template <typename T>
struct AdaptiveResult {
    std::complex<T> value{};
    T err = T(0);  // summed |K15 - G7| over final panels
    T l1 = T(0);   // integral of |f|
    int panels = 1;
    bool exhausted = false;  // stopped on depth/budget with err above target
};

// Global adaptive: repeatedly bisect the worst panel until
// err <= target(value, l1). target is re-evaluated as the totals change.
template <typename T, typename F, typename Target>
AdaptiveResult<T> adaptive_gk15(const F& f, T a, T b, const Target& target,
                                const AdaptiveLimits& lim = {}) {
    std::priority_queue<Panel<T>, std::vector<Panel<T>>, PanelWorse<T>> heap;
    std::uint64_t next_id = 0;
    Panel<T> root = gk15_panel(f, a, b, 0, next_id++);
    AdaptiveResult<T> res;
    res.value = root.value;
    res.err = root.err;
    res.l1 = root.l1;
    heap.push(root);

    while (res.err > target(res.value, res.l1)) {
        if (heap.empty() || res.panels + 1 > lim.max_panels) {
            res.exhausted = true;
            break;
        }
        Panel<T> p = heap.top();
        heap.pop();
        if (p.depth >= lim.max_depth) continue;  // err stays counted; panel frozen
        const T m = (p.a + p.b) / T(2);
        Panel<T> left = gk15_panel(f, p.a, m, p.depth + 1, next_id++);
        Panel<T> right = gk15_panel(f, m, p.b, p.depth + 1, next_id++);
        res.value += left.value + right.value - p.value;
        res.err += left.err + right.err - p.err;
        res.l1 += left.l1 + right.l1 - p.l1;
        res.panels += 1;
        heap.push(left);
        heap.push(right);
    }
    return res;
}

}  // namespace xizeta::detail

#endif
