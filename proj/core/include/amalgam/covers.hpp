#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/commensurability.hpp"
#include "amalgam/complex2.hpp"
#include "amalgam/specs.hpp"

namespace amalgam {

// Per base boundary circle of a surface piece: the degrees of the cover's
// boundary circles lying over it (a partition of the cover degree d).
struct BoundaryPartition {
    std::vector<std::vector<int>> parts;  // one partition per base boundary
};

// Parity criterion for covers of positive-genus surfaces with boundary:
// a connected degree-d cover with the prescribed boundary degrees exists
// iff the total prescribed boundary count has the same parity as d*euler_S.
// Throws std::domain_error (GenusZero) when the genus hypothesis fails and
// std::invalid_argument when a partition does not sum to d.
bool neumann_cover_exists(int euler_S, int base_boundary_count, int d,
                          const BoundaryPartition& partitions);

// A claimed covering of 2-complexes; verification is an operation.
struct CoverMap {
    Complex2 total;
    Complex2 base;
    long long degree = 1;
    // total circle index -> (base circle index, circle degree f)
    std::vector<std::pair<int, int>> circle_map;
    // total piece index -> (base piece index, piece degree e)
    std::vector<std::pair<int, int>> piece_map;
    bool claims_connected = true;
    std::string name;
};

enum class CoverCondition {
    EulerMultiplicativity,     // (i)   chi(total) = D * chi(base)
    PieceDegreeSum,            // (ii)  per base piece, degrees sum to D
    CircleDegreeSum,           // (iii) per base circle, degrees sum to D
    AttachmentCompatibility,   // (iv)  boundary degree a'*f/a is a positive integer
    PieceLocalStructure,       // (v)   euler scaling + boundary partitions + parity
    Connectivity,              // (vi)  total connected when claimed
};

std::string to_string(CoverCondition c);

struct CoverViolation {
    CoverCondition cond;
    std::string where;
};

struct CoverReport {
    bool pass = true;
    std::vector<CoverViolation> violations;
    // Most local violated condition (checked in order iv, v, ii, iii, i, vi).
    std::optional<CoverCondition> primary;
    bool has(CoverCondition c) const;
};

// Checks all six cover conditions and reports every violation.
CoverReport verify_cover(const CoverMap& cm);

// Double cover of one cut surface side in which the preimage of the curve is
// a bounding pair: base is the side complex (one circle + its cut pieces),
// total has two circles of degree 1 over the curve. Also reports the two
// piece Euler characteristics (v_lo <= v_hi).
struct BoundingPairCover {
    std::array<long long, 2> eulers;  // sorted ascending
    CoverMap cover;
};
BoundingPairCover bounding_pair_double_cover(int g, const CurveSpec& curve);

// Degree-mn cover of a single (m,n) tube by the K_{m,n} product fragment:
// m+n circles (the n circles on the m-side cover the A-end with degree m,
// the m circles on the n-side cover the B-end with degree n) and mn unit
// tubes.
CoverMap kmn_cover_fragment(int m, int n);

struct TowerLink {
    enum class Kind { Cover, HomotopyEquivalence };
    Kind kind = Kind::Cover;
    std::optional<CoverMap> cover;     // when kind == Cover
    CollapseRecord collapse;           // when kind == HomotopyEquivalence
    std::string name;
};

// Degree-16 relation of the first tower stage against the orbicomplex,
// recorded numerically (orbifold pieces are not modeled as complexes).
struct OrbiLinkInfo {
    int degree = 16;
    EulerVector base_vector;  // the associated vector w
};

struct Tower {
    // Stages are listed base-first (X, X1, ..., X5); links[i] exhibits
    // stages[i+1] over stages[i], or records the homotopy equivalence for
    // the collapse step.
    std::vector<Complex2> stages;
    std::vector<std::string> stage_names;
    std::vector<TowerLink> links;
    std::optional<OrbiLinkInfo> orbi_link;
    // Side Euler characteristics (v1..v4) consumed by associated_racg_vector.
    std::array<long long, 4> side_eulers = {0, 0, 0, 0};
    long long N = 0;
};

Tower build_tower_X(const SurfaceAmalgamSpec& spec);
Tower build_tower_Z(const SurfaceAmalgamSpec& spec);

std::optional<ComplexIso> check_X5_iso_Z2(const SurfaceAmalgamSpec& spec);

}  // namespace amalgam
