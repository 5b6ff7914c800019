#include "amalgam/specs.hpp"

#include <algorithm>

namespace amalgam {

EulerVector EulerVector::sorted_desc() const {
    EulerVector out = *this;
    std::sort(out.quarters.begin(), out.quarters.end(), std::greater<long long>());
    return out;
}

std::vector<std::string> EulerVector::to_strings() const {
    std::vector<std::string> out;
    out.reserve(quarters.size());
    for (long long q : quarters) out.push_back(std::to_string(q) + "/4");
    return out;
}

std::string to_string(SpecError e) {
    switch (e) {
        case SpecError::GenusTooSmall: return "GenusTooSmall";
        case SpecError::BadSplit: return "BadSplit";
        case SpecError::ArmCount: return "ArmCount";
        case SpecError::NonPositiveArm: return "NonPositiveArm";
    }
    return "Unknown";
}

namespace {

void check_curve(const CurveSpec& c, int genus, std::vector<SpecError>& errors) {
    if (c.is_separating()) {
        if (c.g1 < 1 || c.g2 < 1 || c.g1 + c.g2 != genus)
            errors.push_back(SpecError::BadSplit);
    }
}

// Order the two sides of a separating split canonically (small genus first);
// the two sides of the curve are not ordered by the construction.
CurveSpec canonical_curve(CurveSpec c) {
    if (c.is_separating() && c.g1 > c.g2) std::swap(c.g1, c.g2);
    return c;
}

}  // namespace

ValidatedAmalgam validate_spec(const SurfaceAmalgamSpec& raw) {
    ValidatedAmalgam out;
    if (raw.g < 2 || raw.h < 2) out.errors.push_back(SpecError::GenusTooSmall);
    if (raw.m < 1 || raw.n < 1) out.errors.push_back(SpecError::NonPositiveArm);
    check_curve(raw.curve_a, raw.g, out.errors);
    check_curve(raw.curve_b, raw.h, out.errors);
    if (!out.errors.empty()) return out;

    SurfaceAmalgamSpec s = raw;
    s.curve_a = canonical_curve(s.curve_a);
    s.curve_b = canonical_curve(s.curve_b);
    if (s.m > s.n) {
        std::swap(s.g, s.h);
        std::swap(s.m, s.n);
        std::swap(s.curve_a, s.curve_b);
    }
    out.spec = s;
    return out;
}

ValidatedTheta validate_spec(const ThetaGraphSpec& raw) {
    ValidatedTheta out;
    if (raw.k() < 3) out.errors.push_back(SpecError::ArmCount);
    for (int a : raw.arms)
        if (a < 1) {
            out.errors.push_back(SpecError::NonPositiveArm);
            break;
        }
    if (!out.errors.empty()) return out;

    ThetaGraphSpec t = raw;
    std::sort(t.arms.begin(), t.arms.end());
    out.spec = t;
    return out;
}

}  // namespace amalgam
