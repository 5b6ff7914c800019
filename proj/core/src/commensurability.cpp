#include "amalgam/commensurability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace amalgam {

EulerVector euler_vector(const ThetaGraphSpec& theta) {
    EulerVector v;
    v.quarters.reserve(theta.arms.size());
    for (int n : theta.arms) v.quarters.push_back(1 - n);  // (1-n)/4 in quarters
    return v;
}

std::optional<std::pair<long long, long long>> vectors_commensurable(
    const EulerVector& v, const EulerVector& w) {
    if (v.size() != w.size()) return std::nullopt;
    std::vector<long long> a = v.sorted_desc().quarters;
    std::vector<long long> b = w.sorted_desc().quarters;
    long long K = 1, L = 1;
    bool fixed = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return std::nullopt;
        if (a[i] == 0 || fixed) continue;
        // K/L = b[i]/a[i], reduced; both entries are negative here.
        long long p = -b[i], q = -a[i];
        long long g = std::gcd(p, q);
        K = p / g;
        L = q / g;
        fixed = true;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (K * a[i] != L * b[i]) return std::nullopt;
    return std::make_pair(K, L);
}

AssociatedVectorData associated_racg_vector(const SurfaceAmalgamSpec& s) {
    AssociatedVectorData d;
    d.N = static_cast<long long>(s.m) * s.n - s.m - s.n + 1;
    auto side = [](int g, const CurveSpec& c, long long& lo, long long& hi) {
        if (c.is_separating()) {
            // Cutting along the curve gives one-boundary pieces of Euler
            // characteristic 1-2g1 and 1-2g2; the double cover doubles them.
            long long x = 2 * (1 - 2 * static_cast<long long>(c.g1));
            long long y = 2 * (1 - 2 * static_cast<long long>(c.g2));
            lo = std::min(x, y);
            hi = std::max(x, y);
        } else {
            lo = hi = 2 - 2 * static_cast<long long>(g);
        }
    };
    side(s.g, s.curve_a, d.v1, d.v2);
    side(s.h, s.curve_b, d.v3, d.v4);
    d.w.quarters.assign(2 * d.N, 0);
    auto push = [&](long long value, int copies) {
        for (int i = 0; i < copies; ++i) d.w.quarters.push_back(4 * value);
    };
    push(s.m * d.v1, s.n);
    push(s.m * d.v2, s.n);
    push(s.n * d.v3, s.m);
    push(s.n * d.v4, s.m);
    return d;
}

RealizeResult realize_vector_as_theta(const EulerVector& w) {
    RealizeResult out;
    ThetaGraphSpec t;
    for (long long q : w.quarters) {
        // chi = q/4 and the arm value is n = 1 - 4*chi = 1 - q.
        long long n = 1 - q;
        if (q > 0 || n < 1 || n > 1'000'000'000LL) {
            out.error = "NotRealizable";
            return out;
        }
        t.arms.push_back(static_cast<int>(n));
    }
    ValidatedTheta v = validate_spec(t);
    if (!v.ok()) {
        out.error = to_string(v.errors.front());
        return out;
    }
    out.theta = *v.spec;
    return out;
}

ThetaGraphSpec scale_class(const ThetaGraphSpec& theta, long long K) {
    ThetaGraphSpec out;
    for (int n : theta.arms) out.arms.push_back(static_cast<int>(1 + K * (n - 1)));
    return out;
}

ThetaGraphSpec hyperbolic_degree_expand(const ThetaGraphSpec& theta, int m) {
    int l = theta.linear_degree();
    if (l < 2) throw std::domain_error("LinearDegreeTooSmall: linear degree < 2");
    ThetaGraphSpec out;
    out.arms.assign(static_cast<std::size_t>(m) * (l - 2) + 2, 1);
    for (int n : theta.arms)
        if (n >= 2)
            for (int i = 0; i < m; ++i) out.arms.push_back(n);
    std::sort(out.arms.begin(), out.arms.end());
    return out;
}

namespace {

// Effect of hyperbolic_degree_expand on an Euler vector: the zero block of
// size l becomes p(l-2)+2 and every negative entry is repeated p times.
std::optional<EulerVector> expand_vector(const EulerVector& v, int p) {
    if (p == 1) return v;
    int zeros = 0;
    for (long long q : v.quarters)
        if (q == 0) ++zeros;
    if (zeros < 2) return std::nullopt;
    EulerVector out;
    out.quarters.assign(static_cast<std::size_t>(p) * (zeros - 2) + 2, 0);
    for (long long q : v.quarters)
        if (q != 0)
            for (int i = 0; i < p; ++i) out.quarters.push_back(q);
    return out;
}

}  // namespace

CommensurabilityVerdict commensurable_CW(const SurfaceAmalgamSpec& spec,
                                         const ThetaGraphSpec& theta) {
    CommensurabilityVerdict out;
    EulerVector vs = associated_racg_vector(spec).w;
    EulerVector vt = euler_vector(theta);
    constexpr int kMaxExpand = 12;
    for (int total = 2; total <= 2 * kMaxExpand; ++total) {
        for (int p = 1; p < total; ++p) {
            int q = total - p;
            if (q < 1 || q > kMaxExpand || p > kMaxExpand) continue;
            std::optional<EulerVector> ev = expand_vector(vs, p);
            std::optional<EulerVector> et = expand_vector(vt, q);
            if (!ev || !et) continue;
            auto witness = vectors_commensurable(*ev, *et);
            if (!witness) continue;
            out.tag = CommensurabilityVerdict::Tag::Commensurable;
            out.K = witness->first;
            out.L = witness->second;
            out.expand_spec_side = p;
            out.expand_theta_side = q;
            out.summary = "expand spec vector x" + std::to_string(p) +
                          ", theta vector x" + std::to_string(q) + ", K=" +
                          std::to_string(out.K) + ", L=" + std::to_string(out.L);
            return out;
        }
    }
    out.summary = "vector criterion inapplicable; commensurability unknown";
    return out;
}

}  // namespace amalgam
