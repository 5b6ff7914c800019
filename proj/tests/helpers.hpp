#pragma once

#include <stdexcept>
#include <vector>

#include "amalgam/specs.hpp"

namespace amalgam::testing {

inline SurfaceAmalgamSpec mk(int g, int h, int m, int n,
                             CurveSpec a = CurveSpec::non_separating(),
                             CurveSpec b = CurveSpec::non_separating()) {
    SurfaceAmalgamSpec raw;
    raw.g = g;
    raw.h = h;
    raw.m = m;
    raw.n = n;
    raw.curve_a = a;
    raw.curve_b = b;
    ValidatedAmalgam v = validate_spec(raw);
    if (!v.ok()) throw std::runtime_error("helper built an invalid amalgam spec");
    return *v.spec;
}

inline ThetaGraphSpec th(std::vector<int> arms) {
    ThetaGraphSpec raw;
    raw.arms = std::move(arms);
    ValidatedTheta v = validate_spec(raw);
    if (!v.ok()) throw std::runtime_error("helper built an invalid theta spec");
    return *v.spec;
}

// All essential curve kinds on a genus-g surface, separating splits in
// canonical g1 <= g2 order.
inline std::vector<CurveSpec> curve_kinds(int g) {
    std::vector<CurveSpec> out = {CurveSpec::non_separating()};
    for (int g1 = 1; g1 <= g - g1; ++g1) out.push_back(CurveSpec::separating(g1, g - g1));
    return out;
}

// The criterion-1 box: g,h in {2,3,4}, 1 <= m <= n <= 4, all curve kinds.
inline std::vector<SurfaceAmalgamSpec> c_box() {
    std::vector<SurfaceAmalgamSpec> out;
    for (int g = 2; g <= 4; ++g)
        for (int h = 2; h <= 4; ++h)
            for (int m = 1; m <= 4; ++m)
                for (int n = m; n <= 4; ++n)
                    for (const auto& a : curve_kinds(g))
                        for (const auto& b : curve_kinds(h))
                            out.push_back(mk(g, h, m, n, a, b));
    return out;
}

// The W box: sorted arm tuples with 3 <= k <= 6, 1 <= n_i <= 4.
inline std::vector<ThetaGraphSpec> w_box() {
    std::vector<ThetaGraphSpec> out;
    std::vector<int> arms;
    auto rec = [&](auto&& self, int lo, int k) -> void {
        if (k == 0) {
            if (arms.size() >= 3) out.push_back(th(arms));
            return;
        }
        for (int v = lo; v <= 4; ++v) {
            arms.push_back(v);
            self(self, v, k - 1);
            arms.pop_back();
        }
    };
    for (int k = 3; k <= 6; ++k) rec(rec, 1, k);
    return out;
}

}  // namespace amalgam::testing
