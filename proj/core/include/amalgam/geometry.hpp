#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "amalgam/rational.hpp"
#include "amalgam/specs.hpp"

namespace amalgam {

// Rooted radius-R ball in the biregular tree T_{m,n}, root on the m-valence
// side. Valences alternate by level parity.
struct TreeBall {
    int m = 1, n = 1;
    int radius = 0;
    std::vector<int> parent;               // parent[0] = -1
    std::vector<int> depth;
    std::vector<std::vector<int>> children;

    int size() const { return static_cast<int>(parent.size()); }
    int distance(int u, int v) const;      // via lowest common ancestor
    std::vector<int> level_sizes() const;
};

inline constexpr std::size_t kDefaultMaxVertices = 200000;

// Throws std::length_error (SizeLimit) if the ball would exceed the cap.
TreeBall biregular_ball(int m, int n, int R,
                        std::size_t max_vertices = kDefaultMaxVertices);

// Model-space type tuple (m, n, |X|, s); the tree set is opaque and carried
// only as a size. Hyperbolic types (m <= 1) are terminal for
// standard_representative.
struct ModelSpaceType {
    int m = 0, n = 0;
    int s = 0;                // branching
    int tree_set_size = 1;    // |X|, opaque
    bool hyperbolic = false;  // marker set by standard_representative

    friend bool operator==(const ModelSpaceType&, const ModelSpaceType&) = default;
};

ModelSpaceType model_space_type_of(const SurfaceAmalgamSpec& spec);  // (m, n, 2)
ModelSpaceType model_space_type_of(const ThetaGraphSpec& theta);     // (l, l, k-l)

// (m>=2,n>=3,s>=1) -> (3,3,1); (2,2,s>=1) -> (2,2,1); (m>=2,n>=3,s=0) ->
// (2,3,0); hyperbolic types unchanged with the marker set.
ModelSpaceType standard_representative(ModelSpaceType t);

// Measured quasi-isometry constants over a sample of (d_domain, d_image)
// distance pairs: the least grid value L (candidates are the pairwise
// distance ratios and the integers up to their maximum) whose induced
// minimal additive constant C(L) satisfies C(L) <= L, i.e. the smallest L
// realizing an (L, C)-quasi-isometry with C <= L on the sample. Throws
// std::invalid_argument (EmptySample) on an empty sample.
struct DistortionResult {
    Rational L{1};
    Rational C{0};
};
DistortionResult measure_distortion(const std::vector<std::pair<int, int>>& pairs);

// The line collapse [ks, (k+1)s-1] -> k on the Z factor of T_{2,2} x Z,
// identity on the slab coordinate, restricted to the radius-R l1-ball.
struct LineCollapse {
    int s = 1;
    int R = 1;

    int map(int i) const;  // floor division by s
    // All interior vertex pairs of the product ball (margin s from the
    // boundary), as (domain distance, image distance).
    std::vector<std::pair<int, int>> interior_pairs() const;
};
LineCollapse collapse_map_line(int s, int R);  // throws std::domain_error if R < s

// The tree collapse T_{3,3} -> T_{s+2,s+2}: disjoint paths of s vertices
// selected recursively from the root, each collapsed to a quotient vertex;
// identity on the slab coordinate. Child order is a test knob; either
// selection yields the same distortion bound.
enum class ChildOrder { Forward, Reversed };

struct TreeCollapse {
    int s = 1;
    TreeBall ball;
    std::vector<int> path_of;               // domain vertex -> quotient vertex
    std::vector<int> qparent;               // quotient tree, qparent[0] = -1
    std::vector<int> qdepth;
    std::vector<std::vector<int>> qmembers; // quotient vertex -> domain vertices

    int quotient_distance(int qu, int qv) const;
    // Interior quotient vertices: full paths whose members all lie at depth
    // <= radius - margin.
    std::vector<int> interior_quotient_valences(int margin) const;
    // (domain distance, quotient distance) over all pairs of interior
    // domain vertices (both at depth <= radius - margin). The slab factor
    // adds equal amounts to both coordinates and never worsens the
    // constants, so tree-factor pairs suffice.
    std::vector<std::pair<int, int>> interior_pairs(int margin) const;
};

TreeCollapse collapse_map_tree(int s, int R,
                               std::size_t max_vertices = kDefaultMaxVertices,
                               ChildOrder order = ChildOrder::Forward);

}  // namespace amalgam
