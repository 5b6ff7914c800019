#pragma once

#include <optional>
#include <string>
#include <utility>

#include "amalgam/specs.hpp"

namespace amalgam {

// Data of the right-angled Coxeter group vector associated to an amalgam
// spec: N = mn - m - n + 1, the four side Euler characteristics v1..v4
// (v1 <= v2 from the genus-g side, v3 <= v4 from the genus-h side), and the
// assembled vector w with 2N zeros followed by n copies of m*v1, n copies of
// m*v2, m copies of n*v3 and m copies of n*v4.
struct AssociatedVectorData {
    long long N = 0;
    long long v1 = 0, v2 = 0, v3 = 0, v4 = 0;
    EulerVector w;
};

// Per-arm Euler characteristics (1 - n_i)/4, same order as the arms.
EulerVector euler_vector(const ThetaGraphSpec& theta);

// Minimal positive (K, L) with K*v = L*w entrywise, if any.
std::optional<std::pair<long long, long long>> vectors_commensurable(
    const EulerVector& v, const EulerVector& w);

AssociatedVectorData associated_racg_vector(const SurfaceAmalgamSpec& spec);

// Inverts the Euler-vector formula: arm n_i = 1 - 4*chi_i. Fails with
// NotRealizable when an entry is not of that shape, and propagates arm-count
// validation failures.
struct RealizeResult {
    std::optional<ThetaGraphSpec> theta;
    std::string error;  // "NotRealizable", "ArmCount", ... when absent
    bool ok() const { return theta.has_value(); }
};
RealizeResult realize_vector_as_theta(const EulerVector& w);

// Arm rescaling n_i' = 1 + K(n_i - 1): multiplies the Euler vector by K and
// preserves the linear degree.
ThetaGraphSpec scale_class(const ThetaGraphSpec& theta, long long K);

// Degree-m expansion of the hyperbolic part: linear degree becomes
// m(l-2)+2 and every hyperbolic arm is repeated m times. Throws
// std::domain_error (LinearDegreeTooSmall) when l < 2.
ThetaGraphSpec hyperbolic_degree_expand(const ThetaGraphSpec& theta, int m);

// Sufficient criterion only: Commensurable when the associated vector and
// the theta vector become commensurable after optionally expanding either
// side to align linear/hyperbolic degrees; otherwise Unknown (never "No" --
// the converse is open).
struct CommensurabilityVerdict {
    enum class Tag { Commensurable, Unknown };
    Tag tag = Tag::Unknown;
    long long K = 0, L = 0;     // vector witness, reduced
    int expand_spec_side = 1;   // expansion factor applied to the spec vector
    int expand_theta_side = 1;  // expansion factor applied to the theta
    std::string summary;
    bool commensurable() const { return tag == Tag::Commensurable; }
};
CommensurabilityVerdict commensurable_CW(const SurfaceAmalgamSpec& spec,
                                         const ThetaGraphSpec& theta);

}  // namespace amalgam
