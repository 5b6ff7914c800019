#pragma once

#include "amalgam/classify.hpp"
#include "amalgam/commensurability.hpp"
#include "amalgam/covers.hpp"
#include "amalgam/geometry.hpp"
#include "amalgam/json_io.hpp"

namespace amalgam {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr long long kDeterministicSeed = 0;

Json to_json(const ModelSpaceType& t);
Json to_json(const ThreeManifoldVerdict& v);
Json to_json(const CoverReport& r);
Json to_json(const CommensurabilityVerdict& v);
Json to_json(const DistortionResult& d);

Json provenance_block();

// Classification block: hyperbolicity, 3-manifold verdict with case, QI
// class, model-space type, standard representative.
Json classification_block(const SurfaceAmalgamSpec& spec);
Json classification_block(const ThetaGraphSpec& theta);

// Commensurability block: Euler vector / associated vector and witnesses.
Json commensurability_block(const SurfaceAmalgamSpec& spec);
Json commensurability_block(const ThetaGraphSpec& theta);

// Tower block: chi-chain, per-link verification PASS/FAIL, X5 = Z2 result.
Json tower_block(const SurfaceAmalgamSpec& spec, bool verify);

// Full report for one parsed spec (must satisfy ok()).
Json full_report(const ParsedSpec& spec);

std::string render_human(const Json& report);

}  // namespace amalgam
