#pragma once

#include "quot/matrix.hpp"

namespace quot {

struct TangentReport {
    Ideal ideal;
    Assignment point;
    std::size_t jacobian_rank;
    std::size_t tangent_dim;  // #variables - jacobian_rank
    std::size_t dim;          // Krull dimension of the ideal
    bool singular;            // tangent_dim > dim

    std::string verdict() const { return singular ? "singular" : "smooth"; }
};

/// Zariski tangent diagnostics of V(I) at a point of it: the Jacobian rank is
/// taken on the given generators as written.
TangentReport tangent_report(const Ideal& I, const Assignment& point);

enum class ComponentKind { none, isolated, embedded };

std::string component_kind_name(ComponentKind k);

/// Saturation probe at the maximal ideal of the point: `none` when saturating
/// changes nothing, otherwise `embedded` when the point stays inside the
/// saturated locus and `isolated` when it drops out.
ComponentKind component_at(const Ideal& I, const Assignment& point);

}  // namespace quot
