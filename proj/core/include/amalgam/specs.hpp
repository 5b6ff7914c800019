#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace amalgam {

// Topological type of the chosen essential simple closed curve on a closed
// orientable surface of genus g. A separating curve splits the surface into
// sides of genus g1 and g2 with g1 + g2 = g and both sides nontrivial.
struct CurveSpec {
    enum class Kind { NonSeparating, Separating };
    Kind kind = Kind::NonSeparating;
    int g1 = 0;
    int g2 = 0;

    static CurveSpec non_separating() { return CurveSpec{}; }
    static CurveSpec separating(int a, int b) {
        return CurveSpec{Kind::Separating, a, b};
    }
    bool is_separating() const { return kind == Kind::Separating; }

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

// An amalgam of two closed hyperbolic surface groups over <a^m = b^n>,
// with winding degrees m on the genus-g side and n on the genus-h side.
// Normal form has m <= n (the amalgam is symmetric in its two factors).
struct SurfaceAmalgamSpec {
    int g = 2;
    int h = 2;
    int m = 1;
    int n = 1;
    CurveSpec curve_a;
    CurveSpec curve_b;

    bool coprime() const { return std::gcd(m, n) == 1; }

    friend bool operator==(const SurfaceAmalgamSpec&, const SurfaceAmalgamSpec&) = default;
};

// A generalized theta graph: two essential vertices of valence k joined by k
// arms, arm i subdivided by n_i extra vertices. Normal form has the arm
// values sorted ascending. The linear degree counts arms with n_i = 1; the
// hyperbolic degree is the rest.
struct ThetaGraphSpec {
    std::vector<int> arms;

    int k() const { return static_cast<int>(arms.size()); }
    int linear_degree() const {
        int l = 0;
        for (int a : arms)
            if (a == 1) ++l;
        return l;
    }
    int hyperbolic_degree() const { return k() - linear_degree(); }

    friend bool operator==(const ThetaGraphSpec&, const ThetaGraphSpec&) = default;
};

// Vector of per-arm Euler characteristics (1 - n_i)/4. Entries are exact
// quarter-integers stored as numerators over the fixed denominator 4, kept
// sorted non-increasing (zeros first, then negatives) in canonical form.
struct EulerVector {
    std::vector<long long> quarters;  // entry i is quarters[i] / 4

    std::size_t size() const { return quarters.size(); }
    long long sum_quarters() const {
        long long s = 0;
        for (long long q : quarters) s += q;
        return s;
    }
    EulerVector sorted_desc() const;
    std::vector<std::string> to_strings() const;  // "p/4" exact form

    friend bool operator==(const EulerVector&, const EulerVector&) = default;
};

enum class SpecError { GenusTooSmall, BadSplit, ArmCount, NonPositiveArm };

std::string to_string(SpecError e);

struct ValidatedAmalgam {
    std::optional<SurfaceAmalgamSpec> spec;
    std::vector<SpecError> errors;
    bool ok() const { return spec.has_value(); }
};

struct ValidatedTheta {
    std::optional<ThetaGraphSpec> spec;
    std::vector<SpecError> errors;
    bool ok() const { return spec.has_value(); }
};

// Normalizes (m <= n by swapping sides; arms sorted) and certifies all the
// structural invariants, or reports the complete list of violations.
ValidatedAmalgam validate_spec(const SurfaceAmalgamSpec& raw);
ValidatedTheta validate_spec(const ThetaGraphSpec& raw);

}  // namespace amalgam
