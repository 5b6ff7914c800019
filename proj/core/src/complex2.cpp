#include "amalgam/complex2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace amalgam {

int Complex2::add_circle(const std::string& name, const std::string& label) {
    circle_names.push_back(name);
    circle_labels.push_back(label);
    return static_cast<int>(circle_names.size()) - 1;
}

int Complex2::add_surface(int euler, std::vector<Attachment> att) {
    pieces.push_back(Piece{Piece::Kind::Surface, euler, std::move(att)});
    return static_cast<int>(pieces.size()) - 1;
}

int Complex2::add_tube(Attachment end1, Attachment end2) {
    pieces.push_back(Piece{Piece::Kind::Tube, 0, {end1, end2}});
    return static_cast<int>(pieces.size()) - 1;
}

long long euler_char(const Complex2& c) {
    long long chi = 0;
    for (const auto& p : c.pieces)
        if (p.kind == Complex2::Piece::Kind::Surface) chi += p.euler;
    return chi;
}

std::vector<std::string> validate_complex(const Complex2& c) {
    std::vector<std::string> out;
    std::vector<bool> used(c.circle_names.size(), false);
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        const auto& p = c.pieces[i];
        std::string where = "piece " + std::to_string(i);
        for (const auto& a : p.att) {
            if (a.circle < 0 || a.circle >= c.circle_count()) {
                out.push_back(where + ": attachment to missing circle");
                continue;
            }
            used[a.circle] = true;
            if (a.degree < 1) out.push_back(where + ": non-positive degree");
        }
        if (p.kind == Complex2::Piece::Kind::Tube) {
            if (p.att.size() != 2) out.push_back(where + ": tube needs two ends");
        } else {
            long long slack = 2 - static_cast<long long>(p.euler) -
                              static_cast<long long>(p.att.size());
            if (slack % 2 != 0 || slack < 0)
                out.push_back(where + ": no genus realizes (euler, boundary) pair");
            for (const auto& a : p.att)
                if (a.degree != 1)
                    out.push_back(where + ": surface attachment degree must be 1");
        }
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) out.push_back("circle " + c.circle_names[i] + " is free");
    return out;
}

namespace {

// One surface side of the amalgam complex, cut along its curve.
void add_side(Complex2& c, int genus, const CurveSpec& curve, int circle) {
    if (curve.is_separating()) {
        c.add_surface(1 - 2 * curve.g1, {{circle, 1}});
        c.add_surface(1 - 2 * curve.g2, {{circle, 1}});
    } else {
        c.add_surface(2 - 2 * genus, {{circle, 1}, {circle, 1}});
    }
}

}  // namespace

Complex2 build_amalgam_complex(const SurfaceAmalgamSpec& s) {
    Complex2 c;
    int A = c.add_circle("A");
    int B = c.add_circle("B");
    c.add_tube({A, s.m}, {B, s.n});
    add_side(c, s.g, s.curve_a, A);
    add_side(c, s.h, s.curve_b, B);
    return c;
}

bool is_connected(const Complex2& c) {
    // Union-find over circle and piece nodes of the incidence graph.
    int nc = c.circle_count();
    int total = nc + static_cast<int>(c.pieces.size());
    if (total == 0) return true;
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < c.pieces.size(); ++i)
        for (const auto& a : c.pieces[i].att)
            parent[find(nc + static_cast<int>(i))] = find(a.circle);
    int root = find(0);
    for (int x = 0; x < total; ++x)
        if (find(x) != root) return false;
    return true;
}

namespace {

using ShapeKey = std::tuple<int, int, std::vector<int>>;  // kind, euler, degrees

ShapeKey shape_key(const Complex2::Piece& p) {
    std::vector<int> degs;
    for (const auto& a : p.att) degs.push_back(a.degree);
    std::sort(degs.begin(), degs.end());
    return {static_cast<int>(p.kind), p.kind == Complex2::Piece::Kind::Tube ? 0 : p.euler,
            degs};
}

using CircleSig = std::vector<std::pair<ShapeKey, int>>;

std::vector<CircleSig> circle_signatures(const Complex2& c) {
    std::vector<CircleSig> sig(c.circle_count());
    for (const auto& p : c.pieces) {
        ShapeKey k = shape_key(p);
        for (const auto& a : p.att) sig[a.circle].push_back({k, a.degree});
    }
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
}

using MappedKey = std::tuple<int, int, std::vector<std::pair<int, int>>>;

MappedKey mapped_key(const Complex2::Piece& p, const std::vector<int>& circle_map) {
    std::vector<std::pair<int, int>> att;
    for (const auto& a : p.att)
        att.push_back({circle_map.empty() ? a.circle : circle_map[a.circle], a.degree});
    std::sort(att.begin(), att.end());
    return {static_cast<int>(p.kind), p.kind == Complex2::Piece::Kind::Tube ? 0 : p.euler,
            att};
}

std::optional<std::vector<int>> match_pieces(const Complex2& c1, const Complex2& c2,
                                             const std::vector<int>& circle_map) {
    std::map<MappedKey, std::vector<int>> buckets;
    for (std::size_t j = 0; j < c2.pieces.size(); ++j)
        buckets[mapped_key(c2.pieces[j], {})].push_back(static_cast<int>(j));
    std::vector<int> piece_map(c1.pieces.size(), -1);
    std::map<MappedKey, std::size_t> cursor;
    for (std::size_t i = 0; i < c1.pieces.size(); ++i) {
        MappedKey k = mapped_key(c1.pieces[i], circle_map);
        auto it = buckets.find(k);
        if (it == buckets.end()) return std::nullopt;
        std::size_t& pos = cursor[k];
        if (pos >= it->second.size()) return std::nullopt;
        piece_map[i] = it->second[pos++];
    }
    return piece_map;
}

bool backtrack_circles(const Complex2& c1, const Complex2& c2,
                       const std::vector<std::vector<int>>& candidates,
                       const std::vector<int>& order, std::size_t at,
                       std::vector<int>& assign, std::vector<bool>& used,
                       std::optional<ComplexIso>& result) {
    if (at == order.size()) {
        auto pm = match_pieces(c1, c2, assign);
        if (!pm) return false;
        result = ComplexIso{assign, *pm};
        return true;
    }
    int i = order[at];
    for (int j : candidates[i]) {
        if (used[j]) continue;
        used[j] = true;
        assign[i] = j;
        if (backtrack_circles(c1, c2, candidates, order, at + 1, assign, used, result))
            return true;
        used[j] = false;
        assign[i] = -1;
    }
    return false;
}

}  // namespace

std::optional<ComplexIso> iso_check(const Complex2& c1, const Complex2& c2) {
    if (c1.circle_count() != c2.circle_count() || c1.pieces.size() != c2.pieces.size())
        return std::nullopt;
    std::vector<CircleSig> s1 = circle_signatures(c1);
    std::vector<CircleSig> s2 = circle_signatures(c2);
    std::vector<std::vector<int>> candidates(c1.circle_count());
    for (int i = 0; i < c1.circle_count(); ++i) {
        for (int j = 0; j < c2.circle_count(); ++j)
            if (s1[i] == s2[j]) candidates[i].push_back(j);
        if (candidates[i].empty()) return std::nullopt;
    }
    std::vector<int> order(c1.circle_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return candidates[a].size() < candidates[b].size();
    });
    std::vector<int> assign(c1.circle_count(), -1);
    std::vector<bool> used(c2.circle_count(), false);
    std::optional<ComplexIso> result;
    backtrack_circles(c1, c2, candidates, order, 0, assign, used, result);
    return result;
}

Complex2 collapse_products(const Complex2& c, const std::vector<ProductFragment>& fragments,
                           CollapseRecord* record, SpanningTreeOrder order) {
    int nc = c.circle_count();
    std::vector<int> fragment_of_circle(nc, -1);
    std::vector<int> fragment_of_tube(c.pieces.size(), -1);
    for (std::size_t f = 0; f < fragments.size(); ++f) {
        for (int ci : fragments[f].circles) {
            if (ci < 0 || ci >= nc || fragment_of_circle[ci] != -1)
                throw std::invalid_argument("NotAProductFragment: bad circle set");
            fragment_of_circle[ci] = static_cast<int>(f);
        }
        for (int ti : fragments[f].tubes) {
            if (ti < 0 || ti >= static_cast<int>(c.pieces.size()) ||
                fragment_of_tube[ti] != -1)
                throw std::invalid_argument("NotAProductFragment: bad tube set");
            fragment_of_tube[ti] = static_cast<int>(f);
        }
    }
    // Certify each fragment is complete bipartite with unit tube degrees.
    for (std::size_t f = 0; f < fragments.size(); ++f) {
        const auto& fr = fragments[f];
        std::map<int, int> color;  // circle -> side (0/1)
        std::vector<std::pair<int, int>> pairs;
        for (int ti : fr.tubes) {
            const auto& p = c.pieces[ti];
            if (p.kind != Complex2::Piece::Kind::Tube || p.att.size() != 2 ||
                p.att[0].degree != 1 || p.att[1].degree != 1)
                throw std::invalid_argument("NotAProductFragment: non-unit tube");
            int x = p.att[0].circle, y = p.att[1].circle;
            if (fragment_of_circle[x] != static_cast<int>(f) ||
                fragment_of_circle[y] != static_cast<int>(f))
                throw std::invalid_argument("NotAProductFragment: tube leaves fragment");
            pairs.push_back({std::min(x, y), std::max(x, y)});
        }
        // Two-color by propagation over the tube graph.
        for (int ci : fr.circles) color.emplace(ci, -1);
        std::vector<int> stack;
        for (int ci : fr.circles) {
            if (color[ci] != -1) continue;
            color[ci] = 0;
            stack.push_back(ci);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (const auto& [a, b] : pairs) {
                    int other = (a == x) ? b : (b == x ? a : -1);
                    if (other < 0) continue;
                    if (color[other] == color[x])
                        throw std::invalid_argument("NotAProductFragment: odd cycle");
                    if (color[other] == -1) {
                        color[other] = 1 - color[x];
                        stack.push_back(other);
                    }
                }
            }
        }
        std::size_t side0 = 0, side1 = 0;
        for (int ci : fr.circles) (color[ci] == 0 ? side0 : side1)++;
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end() ||
            pairs.size() != side0 * side1)
            throw std::invalid_argument("NotAProductFragment: incidence not complete bipartite");
    }

    Complex2 out;
    std::vector<int> circle_image(nc, -1);
    std::vector<int> merged(fragments.size(), -1);
    for (int i = 0; i < nc; ++i)
        if (fragment_of_circle[i] == -1)
            circle_image[i] = out.add_circle(c.circle_names[i], c.circle_labels[i]);
    for (std::size_t f = 0; f < fragments.size(); ++f) {
        merged[f] = out.add_circle("merged" + std::to_string(f));
        for (int ci : fragments[f].circles) circle_image[ci] = merged[f];
    }

    // Deterministic spanning tree per fragment over the chosen tube order.
    std::vector<bool> is_tree_tube(c.pieces.size(), false);
    std::vector<int> uf(nc);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (std::size_t f = 0; f < fragments.size(); ++f) {
        std::vector<int> tubes = fragments[f].tubes;
        std::sort(tubes.begin(), tubes.end());
        if (order == SpanningTreeOrder::HighestFirst)
            std::reverse(tubes.begin(), tubes.end());
        for (int ti : tubes) {
            int x = find(c.pieces[ti].att[0].circle);
            int y = find(c.pieces[ti].att[1].circle);
            if (x != y) {
                uf[x] = y;
                is_tree_tube[ti] = true;
            }
        }
    }

    CollapseRecord rec;
    rec.fragments.resize(fragments.size());
    for (std::size_t f = 0; f < fragments.size(); ++f)
        rec.fragments[f].merged_circle = merged[f];
    rec.circle_image = circle_image;
    rec.piece_image.assign(c.pieces.size(), -1);
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        int f = fragment_of_tube[i];
        if (f >= 0) {
            if (is_tree_tube[i]) {
                rec.fragments[f].deleted_tubes.push_back(static_cast<int>(i));
                continue;
            }
            int torus = out.add_tube({merged[f], 1}, {merged[f], 1});
            rec.fragments[f].torus_pieces.push_back(torus);
            rec.piece_image[i] = torus;
            continue;
        }
        Complex2::Piece p = c.pieces[i];
        for (auto& a : p.att) a.circle = circle_image[a.circle];
        out.pieces.push_back(p);
        rec.piece_image[i] = static_cast<int>(out.pieces.size()) - 1;
    }
    if (record) *record = rec;
    return out;
}

}  // namespace amalgam
