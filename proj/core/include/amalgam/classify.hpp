#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/specs.hpp"

namespace amalgam {

// Which I-bundle gluing realizes the amalgam as a 3-manifold group (yes
// verdicts), or which half-plane/homology argument rules it out (no
// verdicts).
enum class ManifoldWitness { TrivialIBundles, TwistedOneSide, TwistedBothSides };
enum class ManifoldObstruction {
    DihedralCase1,    // m >= 2, n >= 3: n-cycle + 2 fixed points in D_{n+2}
    DihedralCase2,    // m = 1, n >= 3: two n-cycles + 2 fixed points in D_{2n+2}
    CommutatorCase3,  // m = n = 2, a separating curve: homology vs forced transposition
    CommutatorCase4,  // m = 1, n = 2, b separating: same argument with m = 1
};

std::string to_string(ManifoldWitness w);
std::string to_string(ManifoldObstruction o);

struct ThreeManifoldVerdict {
    bool is_3manifold = false;
    std::optional<ManifoldWitness> witness;
    std::optional<ManifoldObstruction> obstruction;
    // Number of half-planes in the configuration driving the obstruction
    // case (0 for the commutator cases, which need no half-plane count).
    int half_plane_count = 0;
};

// Group is delta-hyperbolic iff m = 1.
bool is_hyperbolic_C(const SurfaceAmalgamSpec& spec);

// Direct decision: yes iff (m=n=1) or (m=1, n=2, curve_b nonseparating) or
// (m=n=2 with both curves nonseparating). Expects a normalized spec (m <= n).
ThreeManifoldVerdict is_3manifold_group(const SurfaceAmalgamSpec& spec);

// The permutation induced on the cyclically ordered half-plane index set by
// the distinguished group element in the obstruction cases.
struct HalfPlaneConfig {
    int k = 0;
    std::vector<int> action;  // permutation of {0..k-1}

    bool valid() const;
    std::vector<int> cycle_type() const;  // sorted descending
};

// True iff the dihedral group of order 2k acting on k cyclically ordered
// points contains an element with the given cycle type. Implemented by
// exhaustive enumeration of all 2k dihedral permutations.
// Throws std::invalid_argument (BadCycleType) if lengths do not sum to k.
bool dihedral_realizable(std::vector<int> cycle_type, int k);

// Independently re-derives the 3-manifold verdict from the half-plane
// configurations and the separating-curve homology argument, using
// dihedral_realizable as the combinatorial engine.
ThreeManifoldVerdict obstruction_oracle(const SurfaceAmalgamSpec& spec);

// QI classes within the amalgam family: Hyperbolic(n) iff m=1; Mixed22 iff
// m=n=2; Generic iff m>=2 and n>=3.
struct QiClassC {
    enum class Tag { Hyperbolic, Mixed22, Generic };
    Tag tag = Tag::Generic;
    int n = 0;  // meaningful for Hyperbolic only
    friend bool operator==(const QiClassC&, const QiClassC&) = default;
};

std::string to_string(const QiClassC& c);
QiClassC qi_class_C(const SurfaceAmalgamSpec& spec);
bool qi_equivalent_C(const SurfaceAmalgamSpec& a, const SurfaceAmalgamSpec& b);

// QI classes within the theta-graph family. The two hyperbolic tags
// (linear degree <= 1) are cross-equivalent when k' = 2(k-1), so tag
// equality alone is not the equivalence; use qi_equivalent_W.
struct QiClassW {
    enum class Tag { HypZeroLinear, HypOneLinear, Mixed2, Mixed3, Flat };
    Tag tag = Tag::Flat;
    int k = 0;  // arm count, meaningful for the hyperbolic tags
    friend bool operator==(const QiClassW&, const QiClassW&) = default;
};

std::string to_string(const QiClassW& c);
QiClassW qi_class_W(const ThetaGraphSpec& theta);
bool qi_equivalent_W(const ThetaGraphSpec& a, const ThetaGraphSpec& b);

// Canonical key for qi_equivalent_W: hyperbolic classes reduce to a single
// integer invariant (k for linear degree 0, 2(k-1) for linear degree 1);
// non-hyperbolic classes reduce to the three-class trichotomy.
std::pair<int, int> qi_key_W(const ThetaGraphSpec& theta);

// Cross-family QI: m=1 <-> hyperbolic theta in the class of (linear 0, arm
// count 2n+2); m=n=2 <-> (l=2, h>=1); (m>=2,n>=3) <-> (l>=3, h>=1).
bool qi_cross(const SurfaceAmalgamSpec& spec, const ThetaGraphSpec& theta);

// Triangulated 2-sphere obtained by coning every complementary region of the
// canonical planar embedding of a generalized theta graph.
struct SphereTriangulation {
    int vertex_count = 0;
    std::vector<std::array<int, 3>> triangles;

    struct Certificate {
        long long euler = 0;
        bool edges_in_two_triangles = false;
        bool links_are_cycles = false;
        bool flag = false;
        bool is_sphere() const {
            return euler == 2 && edges_in_two_triangles && links_are_cycles;
        }
    };
    Certificate certify() const;
};

SphereTriangulation cone_planar_nerve(const ThetaGraphSpec& theta);

}  // namespace amalgam
