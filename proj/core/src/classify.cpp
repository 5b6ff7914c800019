#include "amalgam/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace amalgam {

std::string to_string(ManifoldWitness w) {
    switch (w) {
        case ManifoldWitness::TrivialIBundles: return "TrivialIBundles";
        case ManifoldWitness::TwistedOneSide: return "TwistedOneSide";
        case ManifoldWitness::TwistedBothSides: return "TwistedBothSides";
    }
    return "Unknown";
}

std::string to_string(ManifoldObstruction o) {
    switch (o) {
        case ManifoldObstruction::DihedralCase1: return "DihedralCase1";
        case ManifoldObstruction::DihedralCase2: return "DihedralCase2";
        case ManifoldObstruction::CommutatorCase3: return "CommutatorCase3";
        case ManifoldObstruction::CommutatorCase4: return "CommutatorCase4";
    }
    return "Unknown";
}

bool is_hyperbolic_C(const SurfaceAmalgamSpec& spec) { return spec.m == 1; }

namespace {

ThreeManifoldVerdict yes_verdict(const SurfaceAmalgamSpec& s) {
    ThreeManifoldVerdict v;
    v.is_3manifold = true;
    if (s.m == 1 && s.n == 1)
        v.witness = ManifoldWitness::TrivialIBundles;
    else if (s.m == 1 && s.n == 2)
        v.witness = ManifoldWitness::TwistedOneSide;
    else
        v.witness = ManifoldWitness::TwistedBothSides;  // m = n = 2
    return v;
}

ThreeManifoldVerdict no_verdict(ManifoldObstruction o, int half_planes) {
    ThreeManifoldVerdict v;
    v.is_3manifold = false;
    v.obstruction = o;
    v.half_plane_count = half_planes;
    return v;
}

}  // namespace

ThreeManifoldVerdict is_3manifold_group(const SurfaceAmalgamSpec& s) {
    if (s.m >= 2 && s.n >= 3)
        return no_verdict(ManifoldObstruction::DihedralCase1, s.n + 2);
    if (s.m == 1 && s.n >= 3)
        return no_verdict(ManifoldObstruction::DihedralCase2, 2 * s.n + 2);
    if (s.m == 2 && s.n == 2 &&
        (s.curve_a.is_separating() || s.curve_b.is_separating()))
        return no_verdict(ManifoldObstruction::CommutatorCase3, 4);
    if (s.m == 1 && s.n == 2 && s.curve_b.is_separating())
        return no_verdict(ManifoldObstruction::CommutatorCase4, 6);
    return yes_verdict(s);
}

bool HalfPlaneConfig::valid() const {
    if (static_cast<int>(action.size()) != k) return false;
    std::vector<bool> seen(k, false);
    for (int v : action) {
        if (v < 0 || v >= k || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<int> HalfPlaneConfig::cycle_type() const {
    std::vector<int> type;
    std::vector<bool> done(k, false);
    for (int i = 0; i < k; ++i) {
        if (done[i]) continue;
        int len = 0;
        for (int j = i; !done[j]; j = action[j]) {
            done[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

bool dihedral_realizable(std::vector<int> cycle_type, int k) {
    long long total = 0;
    for (int c : cycle_type) total += c;
    if (k < 1 || total != k)
        throw std::invalid_argument("BadCycleType: cycle lengths must sum to k");
    std::sort(cycle_type.begin(), cycle_type.end(), std::greater<int>());

    auto type_of = [&](const std::vector<int>& perm) {
        HalfPlaneConfig cfg{k, perm};
        return cfg.cycle_type();
    };
    std::vector<int> perm(k);
    // Rotations i -> i + r, then reflections i -> r - i (mod k): all 2k
    // elements of the dihedral group on k cyclically ordered points.
    for (int r = 0; r < k; ++r) {
        for (int i = 0; i < k; ++i) perm[i] = (i + r) % k;
        if (type_of(perm) == cycle_type) return true;
        for (int i = 0; i < k; ++i) perm[i] = ((r - i) % k + k) % k;
        if (type_of(perm) == cycle_type) return true;
    }
    return false;
}

namespace {

// Half-plane permutation driving the obstruction: c disjoint n-cycles plus
// two fixed points on k = c*n + 2 indices.
HalfPlaneConfig cycles_plus_two_fixed(int n, int c) {
    HalfPlaneConfig cfg;
    cfg.k = c * n + 2;
    cfg.action.resize(cfg.k);
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < n; ++i) cfg.action[j * n + i] = j * n + (i + 1) % n;
    cfg.action[cfg.k - 2] = cfg.k - 2;
    cfg.action[cfg.k - 1] = cfg.k - 1;
    return cfg;
}

}  // namespace

ThreeManifoldVerdict obstruction_oracle(const SurfaceAmalgamSpec& s) {
    if (s.m >= 2) {
        // One family of n half-planes permuted cyclically plus two fixed
        // half-planes; a coarse PD(3) structure forces this pattern to be
        // realized inside the dihedral group on n+2 points.
        HalfPlaneConfig cfg = cycles_plus_two_fixed(s.n, 1);
        bool realizable = dihedral_realizable(cfg.cycle_type(), cfg.k);
        if (!realizable)
            return no_verdict(ManifoldObstruction::DihedralCase1, cfg.k);
        // n <= 2 here. The pattern is realizable; the only remaining
        // obstruction is homological (separating curve forces an element of
        // the commutator subgroup to act as a transposition).
        if (s.n == 2 && (s.curve_a.is_separating() || s.curve_b.is_separating()))
            return no_verdict(ManifoldObstruction::CommutatorCase3, cfg.k);
        return yes_verdict(s);
    }
    // m = 1: two families of n half-planes each, plus two fixed, on 2n+2
    // indices; an element with two fixed points in a dihedral group has
    // order at most 2, which kills every n >= 3.
    HalfPlaneConfig cfg = cycles_plus_two_fixed(s.n, 2);
    bool realizable = dihedral_realizable(cfg.cycle_type(), cfg.k);
    if (!realizable)
        return no_verdict(ManifoldObstruction::DihedralCase2, cfg.k);
    if (s.n == 2 && s.curve_b.is_separating())
        return no_verdict(ManifoldObstruction::CommutatorCase4, cfg.k);
    return yes_verdict(s);
}

std::string to_string(const QiClassC& c) {
    switch (c.tag) {
        case QiClassC::Tag::Hyperbolic: return "Hyperbolic(" + std::to_string(c.n) + ")";
        case QiClassC::Tag::Mixed22: return "Mixed22";
        case QiClassC::Tag::Generic: return "Generic";
    }
    return "Unknown";
}

QiClassC qi_class_C(const SurfaceAmalgamSpec& s) {
    if (s.m == 1) return QiClassC{QiClassC::Tag::Hyperbolic, s.n};
    if (s.m == 2 && s.n == 2) return QiClassC{QiClassC::Tag::Mixed22, 0};
    return QiClassC{QiClassC::Tag::Generic, 0};
}

bool qi_equivalent_C(const SurfaceAmalgamSpec& a, const SurfaceAmalgamSpec& b) {
    return qi_class_C(a) == qi_class_C(b);
}

std::string to_string(const QiClassW& c) {
    switch (c.tag) {
        case QiClassW::Tag::HypZeroLinear:
            return "HypZeroLinear(" + std::to_string(c.k) + ")";
        case QiClassW::Tag::HypOneLinear:
            return "HypOneLinear(" + std::to_string(c.k) + ")";
        case QiClassW::Tag::Mixed2: return "Mixed2";
        case QiClassW::Tag::Mixed3: return "Mixed3";
        case QiClassW::Tag::Flat: return "Flat";
    }
    return "Unknown";
}

QiClassW qi_class_W(const ThetaGraphSpec& t) {
    int l = t.linear_degree();
    int h = t.hyperbolic_degree();
    if (l == 0) return QiClassW{QiClassW::Tag::HypZeroLinear, t.k()};
    if (l == 1) return QiClassW{QiClassW::Tag::HypOneLinear, t.k()};
    if (l == 2) return QiClassW{QiClassW::Tag::Mixed2, 0};
    if (h >= 1) return QiClassW{QiClassW::Tag::Mixed3, 0};
    return QiClassW{QiClassW::Tag::Flat, 0};
}

std::pair<int, int> qi_key_W(const ThetaGraphSpec& t) {
    QiClassW c = qi_class_W(t);
    switch (c.tag) {
        // A graph with one linear arm and k arms is QI to one with no
        // linear arms and 2(k-1) arms, so both hyperbolic tags reduce to a
        // single integer invariant.
        case QiClassW::Tag::HypZeroLinear: return {0, c.k};
        case QiClassW::Tag::HypOneLinear: return {0, 2 * (c.k - 1)};
        case QiClassW::Tag::Mixed2: return {1, 2};
        case QiClassW::Tag::Mixed3: return {1, 3};
        case QiClassW::Tag::Flat: return {1, 4};
    }
    return {-1, -1};
}

bool qi_equivalent_W(const ThetaGraphSpec& a, const ThetaGraphSpec& b) {
    return qi_key_W(a) == qi_key_W(b);
}

bool qi_cross(const SurfaceAmalgamSpec& s, const ThetaGraphSpec& t) {
    std::pair<int, int> key = qi_key_W(t);
    if (s.m == 1) return key == std::pair<int, int>{0, 2 * s.n + 2};
    if (s.m == 2 && s.n == 2) return key == std::pair<int, int>{1, 2};
    return key == std::pair<int, int>{1, 3};  // m >= 2, n >= 3
}

SphereTriangulation cone_planar_nerve(const ThetaGraphSpec& t) {
    SphereTriangulation out;
    int k = t.k();
    // Vertex layout: 0 = a, 1 = b, then the internal arm vertices, then one
    // cone vertex per complementary region of the planar embedding (arms
    // drawn as nested concentric arcs; k-1 bigons plus the outer region).
    std::vector<std::vector<int>> arm(k);
    int next = 2;
    for (int i = 0; i < k; ++i) {
        arm[i].push_back(0);
        for (int j = 0; j < t.arms[i]; ++j) arm[i].push_back(next++);
        arm[i].push_back(1);
    }
    for (int r = 0; r < k; ++r) {
        int cone = next++;
        int left = r;
        int right = (r + 1) % k;
        // Region boundary: arm `left` from a to b, then arm `right` back.
        std::vector<int> cycle(arm[left]);
        for (int j = static_cast<int>(arm[right].size()) - 2; j >= 1; --j)
            cycle.push_back(arm[right][j]);
        int c = static_cast<int>(cycle.size());
        for (int j = 0; j < c; ++j)
            out.triangles.push_back({cone, cycle[j], cycle[(j + 1) % c]});
    }
    out.vertex_count = next;
    return out;
}

SphereTriangulation::Certificate SphereTriangulation::certify() const {
    Certificate cert;
    std::map<std::pair<int, int>, int> edge_count;
    std::map<int, std::vector<std::pair<int, int>>> link;  // vertex -> opposite edges
    std::set<std::array<int, 3>> tri_set;
    for (const auto& tri : triangles) {
        std::array<int, 3> s = tri;
        std::sort(s.begin(), s.end());
        tri_set.insert(s);
        edge_count[{s[0], s[1]}]++;
        edge_count[{s[0], s[2]}]++;
        edge_count[{s[1], s[2]}]++;
        link[s[0]].push_back({s[1], s[2]});
        link[s[1]].push_back({s[0], s[2]});
        link[s[2]].push_back({s[0], s[1]});
    }
    cert.euler = vertex_count - static_cast<long long>(edge_count.size()) +
                 static_cast<long long>(tri_set.size());

    cert.edges_in_two_triangles = true;
    for (const auto& [e, c] : edge_count)
        if (c != 2) cert.edges_in_two_triangles = false;

    // The link of a vertex is the graph of opposite edges; it must be a
    // single cycle: every link vertex has degree 2 and the link is connected.
    cert.links_are_cycles = true;
    for (const auto& [v, edges] : link) {
        std::map<int, std::vector<int>> adj;
        for (const auto& [x, y] : edges) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        bool ok = true;
        for (const auto& [x, nb] : adj)
            if (nb.size() != 2) ok = false;
        if (ok && !adj.empty()) {
            std::set<int> seen;
            std::vector<int> stack = {adj.begin()->first};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (!seen.insert(x).second) continue;
                for (int y : adj.at(x)) stack.push_back(y);
            }
            if (seen.size() != adj.size()) ok = false;
        }
        if (!ok) cert.links_are_cycles = false;
    }

    // Flagness: every pairwise-adjacent triple spans a triangle.
    std::vector<std::vector<bool>> adj(vertex_count, std::vector<bool>(vertex_count, false));
    for (const auto& [e, c] : edge_count) adj[e.first][e.second] = adj[e.second][e.first] = true;
    cert.flag = true;
    for (int x = 0; x < vertex_count && cert.flag; ++x)
        for (int y = x + 1; y < vertex_count && cert.flag; ++y) {
            if (!adj[x][y]) continue;
            for (int z = y + 1; z < vertex_count; ++z) {
                if (adj[x][z] && adj[y][z] && !tri_set.count({x, y, z})) {
                    cert.flag = false;
                    break;
                }
            }
        }
    return cert;
}

}  // namespace amalgam
