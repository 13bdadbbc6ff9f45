#include "quot/tangent.hpp"

namespace quot {

TangentReport tangent_report(const Ideal& I, const Assignment& point) {
    if (I.gens().empty()) throw UsageError("tangent_report: ideal has no generators");
    JacobianRank j = jacobian_rank_at(I.gens(), point);
    std::size_t dim = krull_dim(I);
    return {I, point, j.rank, j.tangent_dim, dim, j.tangent_dim > dim};
}

std::string component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::none: return "none";
        case ComponentKind::isolated: return "isolated";
        case ComponentKind::embedded: return "embedded";
    }
    return "?";
}

ComponentKind component_at(const Ideal& I, const Assignment& point) {
    const Ring& ring = I.ring();
    std::vector<Polynomial> max_gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        auto it = point.find(ring->var(i));
        if (it == point.end()) throw MissingVariable(ring->var(i));
        max_gens.push_back(Polynomial::variable(ring, i) -
                           Polynomial::constant(ring, it->second));
    }
    Ideal sat = saturate(I, Ideal(ring, std::move(max_gens)));
    if (ideal_equal(sat, I)) return ComponentKind::none;
    for (const auto& g : sat.gens())
        if (!g.eval(point).is_zero()) return ComponentKind::isolated;
    return ComponentKind::embedded;
}

}  // namespace quot
