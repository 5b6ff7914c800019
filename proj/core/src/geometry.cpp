#include "amalgam/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace amalgam {

int TreeBall::distance(int u, int v) const {
    int d = 0;
    while (depth[u] > depth[v]) u = parent[u], ++d;
    while (depth[v] > depth[u]) v = parent[v], ++d;
    while (u != v) u = parent[u], v = parent[v], d += 2;
    return d;
}

std::vector<int> TreeBall::level_sizes() const {
    std::vector<int> out(radius + 1, 0);
    for (int d : depth) out[d]++;
    return out;
}

TreeBall biregular_ball(int m, int n, int R, std::size_t max_vertices) {
    if (m < 1 || n < 1 || R < 0) throw std::invalid_argument("bad ball parameters");
    TreeBall b;
    b.m = m;
    b.n = n;
    b.radius = R;
    b.parent.push_back(-1);
    b.depth.push_back(0);
    b.children.push_back({});
    for (int v = 0; v < b.size(); ++v) {
        int d = b.depth[v];
        if (d == R) continue;
        // Root emits its full valence m; deeper vertices keep one edge for
        // the parent. Valences alternate m (even depth) / n (odd depth).
        int valence = (d % 2 == 0) ? m : n;
        int kids = (v == 0) ? valence : valence - 1;
        for (int c = 0; c < kids; ++c) {
            if (b.parent.size() >= max_vertices)
                throw std::length_error("SizeLimit: tree ball exceeds vertex cap");
            b.children[v].push_back(b.size());
            b.parent.push_back(v);
            b.depth.push_back(d + 1);
            b.children.push_back({});
        }
    }
    return b;
}

ModelSpaceType model_space_type_of(const SurfaceAmalgamSpec& spec) {
    return ModelSpaceType{spec.m, spec.n, 2, 1, false};
}

ModelSpaceType model_space_type_of(const ThetaGraphSpec& theta) {
    int l = theta.linear_degree();
    return ModelSpaceType{l, l, theta.k() - l, 1, false};
}

ModelSpaceType standard_representative(ModelSpaceType t) {
    if (t.m <= 1) {
        t.hyperbolic = true;
        return t;
    }
    if (t.m == 2 && t.n == 2 && t.s >= 1) return ModelSpaceType{2, 2, 1, 1, false};
    if (t.s >= 1) return ModelSpaceType{3, 3, 1, 1, false};
    return ModelSpaceType{2, 3, 0, 1, false};
}

DistortionResult measure_distortion(const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("EmptySample");
    std::set<std::pair<int, int>> unique(pairs.begin(), pairs.end());
    int maxd = 0;
    std::set<Rational> candidates;
    candidates.insert(Rational{1});
    for (const auto& [dx, dy] : unique) {
        maxd = std::max({maxd, dx, dy});
        if (dx > 0 && dy > 0) {
            if (dx >= dy) candidates.insert(Rational(dx, dy));
            if (dy >= dx) candidates.insert(Rational(dy, dx));
        }
    }
    for (int i = 2; i <= std::max(1, maxd); ++i) candidates.insert(Rational{i});

    for (const Rational& L : candidates) {
        Rational C{0};
        bool feasible = true;
        for (const auto& [dx, dy] : unique) {
            if (dx == 0 && dy > 0) {
                feasible = false;  // no additive constant in the grid helps
                break;
            }
            Rational upper = Rational{dy} - L * Rational{dx};  // need C >= dy - L dx
            Rational lower = Rational{dx} / L - Rational{dy};  // need C >= dx/L - dy
            if (upper > C) C = upper;
            if (lower > C) C = lower;
        }
        if (feasible && C <= L) return DistortionResult{L, C};
    }
    // Unreachable for maps (dx = 0 forces dy = 0); report the worst grid point.
    return DistortionResult{Rational{maxd}, Rational{maxd}};
}

LineCollapse collapse_map_line(int s, int R) {
    if (s < 1) throw std::invalid_argument("collapse scale must be >= 1");
    if (R < s) throw std::domain_error("RadiusTooSmall: need R >= s");
    return LineCollapse{s, R};
}

int LineCollapse::map(int i) const {
    // Floor division: [ks, (k+1)s - 1] -> k for every integer k.
    int q = i / s;
    if (i % s != 0 && i < 0) --q;
    return q;
}

std::vector<std::pair<int, int>> LineCollapse::interior_pairs() const {
    int r = R - s;
    std::vector<std::pair<int, int>> points;
    for (int i = -r; i <= r; ++i)
        for (int j = -(r - std::abs(i)); j <= r - std::abs(i); ++j)
            points.push_back({i, j});
    std::vector<std::pair<int, int>> out;
    out.reserve(points.size() * (points.size() - 1) / 2);
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            int dx = std::abs(points[a].first - points[b].first) +
                     std::abs(points[a].second - points[b].second);
            int dy = std::abs(map(points[a].first) - map(points[b].first)) +
                     std::abs(points[a].second - points[b].second);
            out.push_back({dx, dy});
        }
    return out;
}

int TreeCollapse::quotient_distance(int qu, int qv) const {
    int d = 0;
    while (qdepth[qu] > qdepth[qv]) qu = qparent[qu], ++d;
    while (qdepth[qv] > qdepth[qu]) qv = qparent[qv], ++d;
    while (qu != qv) qu = qparent[qu], qv = qparent[qv], d += 2;
    return d;
}

std::vector<int> TreeCollapse::interior_quotient_valences(int margin) const {
    int limit = ball.radius - margin;
    std::vector<int> valence(qmembers.size(), 0);
    for (std::size_t q = 1; q < qmembers.size(); ++q) {
        valence[q]++;
        valence[qparent[q]]++;
    }
    std::vector<int> out;
    for (std::size_t q = 0; q < qmembers.size(); ++q) {
        if (static_cast<int>(qmembers[q].size()) != s) continue;
        bool interior = true;
        for (int v : qmembers[q])
            if (ball.depth[v] > limit) interior = false;
        if (interior) out.push_back(valence[q]);
    }
    return out;
}

std::vector<std::pair<int, int>> TreeCollapse::interior_pairs(int margin) const {
    int limit = ball.radius - margin;
    std::vector<int> verts;
    for (int v = 0; v < ball.size(); ++v)
        if (ball.depth[v] <= limit) verts.push_back(v);
    std::vector<std::pair<int, int>> out;
    out.reserve(verts.size() * (verts.size() - 1) / 2);
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            out.push_back({ball.distance(verts[a], verts[b]),
                           quotient_distance(path_of[verts[a]], path_of[verts[b]])});
    return out;
}

TreeCollapse collapse_map_tree(int s, int R, std::size_t max_vertices,
                               ChildOrder order) {
    if (s < 1) throw std::invalid_argument("collapse scale must be >= 1");
    if (R < s) throw std::domain_error("RadiusTooSmall: need R >= s");
    TreeCollapse tc;
    tc.s = s;
    tc.ball = biregular_ball(3, 3, R, max_vertices);
    const TreeBall& b = tc.ball;
    tc.path_of.assign(b.size(), -1);

    // Recursive path selection from the root: each unassigned neighbor of a
    // selected path starts its own path of s vertices, extended away from
    // the parent path through the chosen child ordering.
    std::vector<int> starts = {0};
    for (std::size_t head = 0; head < starts.size(); ++head) {
        int start = starts[head];
        int q = static_cast<int>(tc.qmembers.size());
        tc.qmembers.push_back({});
        int parent_path = (start == 0) ? -1 : tc.path_of[b.parent[start]];
        tc.qparent.push_back(parent_path);
        tc.qdepth.push_back(parent_path < 0 ? 0 : tc.qdepth[parent_path] + 1);
        int cur = start;
        for (int step = 0; step < s && cur >= 0; ++step) {
            tc.path_of[cur] = q;
            tc.qmembers[q].push_back(cur);
            int next = -1;
            if (step + 1 < s) {
                const auto& kids = b.children[cur];
                if (!kids.empty())
                    next = (order == ChildOrder::Forward) ? kids.front() : kids.back();
            }
            cur = next;
        }
        for (int v : tc.qmembers[q])
            for (int kid : b.children[v])
                if (tc.path_of[kid] == -1) starts.push_back(kid);
    }
    return tc;
}

}  // namespace amalgam
