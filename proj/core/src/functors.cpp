#include "ent/functors.hpp"

#include <algorithm>
#include <cctype>

namespace ent {

std::string to_string(FunctorTag tag) {
    switch (tag) {
    case FunctorTag::Sym: return "sym";
    case FunctorTag::USym: return "usym";
    case FunctorTag::W: return "w";
    case FunctorTag::WSemi: return "wsemi";
    case FunctorTag::J: return "j";
    }
    return "?";
}

FunctorTag functor_tag_from_string(const std::string& name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "sym") return FunctorTag::Sym;
    if (lower == "usym") return FunctorTag::USym;
    if (lower == "w") return FunctorTag::W;
    if (lower == "wsemi" || lower == "w.usym") return FunctorTag::WSemi;
    if (lower == "j") return FunctorTag::J;
    throw SemanticError("unknown functor tag '" + name + "' (expected sym, usym, w, wsemi or j)");
}

Space apply_functor(FunctorTag tag, const Space& space) {
    const Entourage& m = space.max_ent();
    switch (tag) {
    case FunctorTag::Sym: return Space(intersect(m, inverse(m)));
    case FunctorTag::USym: return Space(unite(m, inverse(m)));
    case FunctorTag::W: return Space(transitive_closure(m));
    case FunctorTag::WSemi: return Space(transitive_closure(unite(m, inverse(m))));
    case FunctorTag::J: return Space(inverse(m));
    }
    throw SemanticError("unreachable functor tag");
}

Space meet(const Space& a, const Space& b) {
    return Space(intersect(a.max_ent(), b.max_ent()));
}

Space join(const Space& a, const Space& b, StructureClass target) {
    Entourage m = unite(a.max_ent(), b.max_ent());
    switch (target) {
    case StructureClass::Entourage: break;
    case StructureClass::SemiCoarse: m = unite(m, inverse(m)); break;
    case StructureClass::QuasiCoarse: m = transitive_closure(m); break;
    case StructureClass::Coarse: m = transitive_closure(unite(m, inverse(m))); break;
    }
    return Space(std::move(m));
}

Space initial_structure(const Carrier& source, const std::vector<std::size_t>& table,
                        const Space& target) {
    if (table.size() != source.size())
        throw SemanticError("initial_structure: table is not total on the source carrier");
    for (std::size_t v : table)
        if (v >= target.carrier().size())
            throw SemanticError("initial_structure: table points outside the target carrier");
    Entourage m(source);
    for (std::size_t i = 0; i < source.size(); ++i)
        for (std::size_t j = 0; j < source.size(); ++j)
            if (target.max_ent().contains(table[i], table[j])) m.set(i, j);
    return Space(std::move(m));
}

ProductResult product(const std::vector<Space>& factors) {
    if (factors.empty())
        throw SemanticError("product of an empty family is not supported");
    std::size_t total = 1;
    for (const auto& s : factors) {
        if (s.carrier().size() == 0)
            throw SemanticError("product with an empty factor carrier");
        if (total > kMaxCarrierPoints / s.carrier().size())
            throw CapError("product carrier exceeds the point cap");
        total *= s.carrier().size();
    }

    const std::size_t k = factors.size();
    std::vector<std::size_t> strides(k, 1);
    for (std::size_t i = k; i-- > 1;) strides[i - 1] = strides[i] * factors[i].carrier().size();

    std::vector<std::string> labels(total);
    std::vector<std::vector<std::size_t>> coords(total, std::vector<std::size_t>(k));
    for (std::size_t p = 0; p < total; ++p) {
        std::string label = "(";
        std::size_t rest = p;
        for (std::size_t i = 0; i < k; ++i) {
            coords[p][i] = rest / strides[i];
            rest %= strides[i];
            if (i) label += ',';
            label += factors[i].carrier().label(coords[p][i]);
        }
        label += ')';
        labels[p] = std::move(label);
    }
    Carrier carrier(labels);

    Entourage m(carrier);
    for (std::size_t p = 0; p < total; ++p) {
        for (std::size_t q = 0; q < total; ++q) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i)
                ok = factors[i].max_ent().contains(coords[p][i], coords[q][i]);
            if (ok) m.set(p, q);
        }
    }
    Space space(std::move(m));

    std::vector<SpaceMap> projections;
    projections.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> t(total);
        for (std::size_t p = 0; p < total; ++p) t[p] = coords[p][i];
        projections.emplace_back(space, factors[i], std::move(t));
    }
    return {std::move(space), std::move(projections)};
}

CoproductResult coproduct(const std::vector<Space>& summands) {
    if (summands.empty())
        throw SemanticError("coproduct of an empty family is not supported");
    std::size_t total = 0;
    for (const auto& s : summands) total += s.carrier().size();
    if (total > kMaxCarrierPoints)
        throw CapError("coproduct carrier exceeds the point cap");

    std::vector<std::string> labels;
    labels.reserve(total);
    std::vector<std::size_t> offset(summands.size(), 0);
    for (std::size_t kk = 0; kk < summands.size(); ++kk) {
        offset[kk] = labels.size();
        for (const auto& l : summands[kk].carrier().labels())
            labels.push_back(std::to_string(kk) + ":" + l);
    }
    Carrier carrier(labels);

    Entourage m = Entourage::diagonal(carrier);
    for (std::size_t kk = 0; kk < summands.size(); ++kk) {
        const auto& mk = summands[kk].max_ent();
        for (auto [i, j] : mk.pairs()) m.set(offset[kk] + i, offset[kk] + j);
    }
    Space space(std::move(m));

    std::vector<SpaceMap> injections;
    injections.reserve(summands.size());
    for (std::size_t kk = 0; kk < summands.size(); ++kk) {
        std::vector<std::size_t> t(summands[kk].carrier().size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = offset[kk] + i;
        injections.emplace_back(summands[kk], space, std::move(t));
    }
    return {std::move(space), std::move(injections)};
}

QuotientResult quotient_space(const Space& x, const Carrier& codomain,
                              const std::vector<std::size_t>& q, StructureClass target) {
    if (q.size() != x.carrier().size())
        throw SemanticError("quotient: map is not total on the carrier");
    std::vector<bool> hit(codomain.size(), false);
    for (std::size_t v : q) {
        if (v >= codomain.size())
            throw SemanticError("quotient: map points outside the codomain");
        hit[v] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
        throw SemanticError("quotient: map is not surjective onto the codomain");

    Entourage m(codomain);
    for (auto [i, j] : x.max_ent().pairs()) m.set(q[i], q[j]);
    switch (target) {
    case StructureClass::Entourage:
    case StructureClass::SemiCoarse:
        break;
    case StructureClass::QuasiCoarse:
        m = transitive_closure(m);
        break;
    case StructureClass::Coarse:
        m = transitive_closure(unite(m, inverse(m)));
        break;
    }
    Space space(std::move(m));
    SpaceMap projection(x, space, q);
    return {std::move(space), std::move(projection)};
}

QuotientResult quotient_by_partition(const Space& x,
                                     const std::vector<std::vector<std::string>>& blocks,
                                     StructureClass target) {
    const std::size_t n = x.carrier().size();
    std::vector<std::size_t> block_of(n, blocks.size());
    std::vector<std::size_t> least(blocks.size(), n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw SemanticError("quotient: empty partition block");
        for (const auto& l : blocks[b]) {
            std::size_t i = x.carrier().index(l);
            if (block_of[i] != blocks.size())
                throw SemanticError("quotient: point '" + l + "' appears in two blocks");
            block_of[i] = b;
            least[b] = std::min(least[b], i);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (block_of[i] == blocks.size())
            throw SemanticError("quotient: point '" + x.carrier().label(i) +
                                "' is not covered by the partition");

    // Classes ordered (and labelled) by least member.
    std::vector<std::size_t> order(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) order[b] = b;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return least[a] < least[b]; });
    std::vector<std::size_t> rank(blocks.size());
    std::vector<std::string> labels(blocks.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
        labels[r] = x.carrier().label(least[order[r]]);
    }
    std::vector<std::size_t> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = rank[block_of[i]];
    return quotient_space(x, Carrier(labels), q, target);
}

bool is_weakly_soft(const Space& x, const std::vector<std::size_t>& q) {
    if (q.size() != x.carrier().size())
        throw SemanticError("is_weakly_soft: map is not total on the carrier");
    Entourage rq(x.carrier());
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (q[i] == q[j]) rq.set(i, j);
    const Entourage& m = x.max_ent();
    Entourage lhs = compose(compose(m, rq), m);
    Entourage rhs = compose(compose(rq, m), rq);
    return lhs.subset_of(rhs);
}

} // namespace ent
