#include "ent/hyper.hpp"

namespace ent {

std::string subset_label(const Carrier& base, unsigned long long mask) {
    std::string label = "{";
    bool first = true;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) label += ',';
        label += base.label(i);
        first = false;
    }
    label += '}';
    return label;
}

Carrier powerset_carrier(const Carrier& base) {
    if (base.size() > kMaxHyperBasePoints)
        throw CapError("hyperstructure base exceeds " + std::to_string(kMaxHyperBasePoints) +
                       " points");
    const unsigned long long count = 1ull << base.size();
    std::vector<std::string> labels;
    labels.reserve(count);
    for (unsigned long long mask = 0; mask < count; ++mask)
        labels.push_back(subset_label(base, mask));
    return Carrier(labels);
}

Entourage hyper_entourage(const Entourage& e) {
    if (!e.is_reflexive())
        throw SemanticError("hyper_entourage requires an entourage containing the diagonal");
    const Carrier power = powerset_carrier(e.carrier());
    const std::size_t n = e.carrier().size();
    const unsigned long long count = 1ull << n;

    // E[A] per subset, as a base bitmask.
    std::vector<unsigned long long> img(count, 0);
    std::vector<unsigned long long> row(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (e.contains(x, y)) row[x] |= 1ull << y;
    for (unsigned long long a = 0; a < count; ++a)
        for (std::size_t x = 0; x < n; ++x)
            if (a >> x & 1) img[a] |= row[x];

    Entourage h(power);
    for (unsigned long long a = 0; a < count; ++a)
        for (unsigned long long b = 0; b < count; ++b)
            if ((b & ~img[a]) == 0) h.set(a, b);
    return h;
}

Space hyper_space(const Space& space) {
    return Space(hyper_entourage(space.max_ent()));
}

Space exp_space(const Space& space) {
    const Entourage h = hyper_entourage(space.max_ent());
    return Space(intersect(h, inverse(h)));
}

SpaceMap lift_map(const SpaceMap& f) {
    const Space hx = hyper_space(f.src());
    const Space hy = hyper_space(f.dst());
    const std::size_t n = f.src().carrier().size();
    const unsigned long long count = 1ull << n;
    std::vector<std::size_t> table(count, 0);
    for (unsigned long long a = 0; a < count; ++a) {
        unsigned long long image_mask = 0;
        for (std::size_t x = 0; x < n; ++x)
            if (a >> x & 1) image_mask |= 1ull << f.apply(x);
        table[a] = image_mask;
    }
    return {hx, hy, std::move(table)};
}

} // namespace ent
