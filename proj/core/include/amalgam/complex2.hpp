#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/specs.hpp"

namespace amalgam {

// Combinatorial 2-complex: branch circles plus pieces glued along them.
// A Surface piece is a compact orientable surface with boundary, stored cut
// along its gluing curves; its boundary circles attach to branch circles
// (always at degree 1 -- winding lives on tubes). A Tube is an annulus with
// two degree-labeled ends; a (1,1) self-tube on one circle is a torus
// attached along that curve.
struct Complex2 {
    struct Attachment {
        int circle = 0;
        int degree = 1;
        friend bool operator==(const Attachment&, const Attachment&) = default;
    };
    struct Piece {
        enum class Kind { Surface, Tube };
        Kind kind = Kind::Surface;
        int euler = 0;  // surfaces only; tubes have Euler characteristic 0
        std::vector<Attachment> att;  // tubes: exactly two entries (the ends)
        friend bool operator==(const Piece&, const Piece&) = default;
    };

    std::vector<std::string> circle_names;
    std::vector<std::string> circle_labels;  // optional color tags
    std::vector<Piece> pieces;

    int add_circle(const std::string& name, const std::string& label = "");
    int add_surface(int euler, std::vector<Attachment> att);
    int add_tube(Attachment end1, Attachment end2);
    int circle_count() const { return static_cast<int>(circle_names.size()); }
};

// Sum of surface-piece Euler characteristics (circles and tubes are chi-null).
long long euler_char(const Complex2& c);

// Structural invariants: no free circles, valid attachment indices, genus
// integrality (2 - euler - #attachments even and >= 0) for surfaces, tubes
// with exactly two ends. Returns human-readable violations.
std::vector<std::string> validate_complex(const Complex2& c);

// The amalgam's presentation complex: circles A, B; one (m,n) tube; surface
// sides cut along their curves.
Complex2 build_amalgam_complex(const SurfaceAmalgamSpec& spec);

bool is_connected(const Complex2& c);

struct ComplexIso {
    std::vector<int> circle_map;  // c1 circle -> c2 circle
    std::vector<int> piece_map;   // c1 piece -> c2 piece
};

// Bijection of circles and pieces preserving kind, euler and attachment
// multisets with degrees, found by backtracking on the labeled bipartite
// incidence multigraph. Color labels are ignored (they are construction
// bookkeeping, not topology).
std::optional<ComplexIso> iso_check(const Complex2& c1, const Complex2& c2);

// A sub-complex isomorphic to a product fragment: circles split in two
// sides with one unit-degree tube per side pair (complete bipartite).
struct ProductFragment {
    std::vector<int> circles;  // all m+n circle indices
    std::vector<int> tubes;    // the mn tube piece indices
};

struct CollapseRecord {
    struct PerFragment {
        int merged_circle = -1;            // circle index in the result
        std::vector<int> deleted_tubes;    // spanning-tree tubes (input indices)
        std::vector<int> torus_pieces;     // self-tube indices in the result
    };
    std::vector<PerFragment> fragments;
    std::vector<int> circle_image;  // input circle -> result circle
    std::vector<int> piece_image;   // input piece -> result piece (-1 if deleted)
};

enum class SpanningTreeOrder { LowestFirst, HighestFirst };

// Collapses each product fragment to a single circle: merges its circles,
// deletes a deterministic spanning tree of tubes, and turns the remaining
// N = mn-m-n+1 tubes into tori (self-tubes) on the merged circle. External
// attachments re-target the merged circle. Throws std::invalid_argument
// (NotAProductFragment) if a fragment is not complete bipartite with unit
// degrees.
Complex2 collapse_products(const Complex2& c,
                           const std::vector<ProductFragment>& fragments,
                           CollapseRecord* record = nullptr,
                           SpanningTreeOrder order = SpanningTreeOrder::LowestFirst);

}  // namespace amalgam
