#include "ent/space.hpp"

#include <algorithm>

namespace ent {

std::string to_string(StructureClass c) {
    switch (c) {
    case StructureClass::Entourage: return "entourage";
    case StructureClass::SemiCoarse: return "semi-coarse";
    case StructureClass::QuasiCoarse: return "quasi-coarse";
    case StructureClass::Coarse: return "coarse";
    }
    return "?";
}

Space::Space(Entourage max_ent) : max_ent_(std::move(max_ent)) {
    if (!max_ent_.is_reflexive())
        throw SemanticError("a space's maximal entourage must contain the diagonal");
}

Space Space::discrete(const Carrier& carrier) {
    return Space(Entourage::diagonal(carrier));
}

Space Space::indiscrete(const Carrier& carrier) {
    return Space(Entourage::full(carrier));
}

bool Space::contains(const Entourage& e) const {
    return e.subset_of(max_ent_);
}

Space from_generators(const Carrier& carrier, const std::vector<Entourage>& gens) {
    Entourage m = Entourage::diagonal(carrier);
    for (const auto& g : gens) {
        if (g.carrier() != carrier)
            throw SemanticError("generator does not live on the space's carrier");
        m = unite(m, g);
    }
    return Space(std::move(m));
}

StructureClass classify(const Space& space) {
    const bool sym = space.max_ent().is_symmetric();
    const bool trans = space.max_ent().is_transitive();
    if (sym && trans) return StructureClass::Coarse;
    if (sym) return StructureClass::SemiCoarse;
    if (trans) return StructureClass::QuasiCoarse;
    return StructureClass::Entourage;
}

Space restrict_to(const Space& space, const std::vector<std::string>& labels) {
    PointSet y(space.carrier());
    for (const auto& l : labels) y.add(l);
    Carrier sub(y.to_labels());
    return Space(restrict_relation(space.max_ent(), y, sub));
}

BoundednessFlags boundedness(const Space& space, const PointSet& a) {
    if (a.carrier() != space.carrier())
        throw SemanticError("boundedness: subset does not live on the space's carrier");
    if (a.empty())
        throw SemanticError("boundedness is undefined for the empty set");
    BoundednessFlags flags;
    const auto& m = space.max_ent();
    bool all = true, some = false;
    for (std::size_t x : a.to_indices()) {
        bool sees_a = a.subset_of(image_point(m, x));
        all = all && sees_a;
        some = some || sees_a;
    }
    flags.b1 = some;
    flags.b2 = all;
    // On a principal structure A x A <= M is the same per-point condition;
    // B2 and B3 only part ways on infinite carriers.
    flags.b3 = all;
    return flags;
}

bool uniformly_bounded(const Space& space, const std::vector<PointSet>& family) {
    for (const auto& a : family) {
        if (a.carrier() != space.carrier())
            throw SemanticError("uniformly_bounded: member does not live on the space's carrier");
        if (a.empty()) continue;
        for (std::size_t x : a.to_indices())
            if (!a.subset_of(image_point(space.max_ent(), x))) return false;
    }
    return true;
}

ConnectivityReport connectivity(const Space& space) {
    ConnectivityReport report;
    const auto& m = space.max_ent();
    const std::size_t n = space.carrier().size();

    // An equivalence relation: M contains the diagonal and the closure of
    // M united with its inverse is symmetric and transitive.
    Entourage chain = transitive_closure(unite(m, inverse(m)));

    std::vector<std::vector<std::string>> components;
    std::vector<bool> assigned(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i]) continue;
        std::vector<std::string> block;
        for (std::size_t j = i; j < n; ++j) {
            if (chain.contains(i, j)) {
                block.push_back(space.carrier().label(j));
                assigned[j] = true;
            }
        }
        components.push_back(std::move(block));
    }

    report.components = std::move(components);
    report.connected = report.components.size() <= 1;
    report.strongly_connected = m == Entourage::full(space.carrier());
    // Reachability in M united with its inverse; at finite scale the witness
    // entourage is M itself, so this coincides with connectedness.
    report.uniformly_connected = report.connected;
    return report;
}

GeometryReport geometry(const Space& space) {
    GeometryReport report;
    std::size_t phi = 0;
    for (std::size_t x = 0; x < space.carrier().size(); ++x)
        phi = std::max(phi, image_point(space.max_ent(), x).count());
    report.phi = phi;
    return report;
}

} // namespace ent
