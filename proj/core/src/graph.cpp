#include "ent/graph.hpp"

#include <algorithm>
#include <deque>

namespace ent {

DiGraph::DiGraph(Carrier vertices_in, Entourage edges_in)
    : vertices(std::move(vertices_in)), edges(std::move(edges_in)) {
    if (edges.carrier() != vertices)
        throw SemanticError("graph edges do not live on the vertex carrier");
}

WeightTable path_weight(const DiGraph& g) {
    const std::size_t n = g.vertices.size();
    std::vector<ExtRat> values(n * n, ExtRat::infinity());
    std::vector<long long> dist(n);
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<std::size_t> queue{src};
        dist[src] = 0;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w = 0; w < n; ++w) {
                if (g.edges.contains(v, w) && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t w = 0; w < n; ++w)
            if (dist[w] >= 0) values[src * n + w] = ExtRat(dist[w]);
    }
    return {g.vertices, std::move(values)};
}

WeightedSpace graphic_structure(const DiGraph& g) {
    return structure_from_weight(path_weight(g));
}

GraphHomReport is_graph_homomorphism(const std::vector<std::size_t>& f, const DiGraph& g1,
                                     const DiGraph& g2) {
    if (f.size() != g1.vertices.size())
        throw SemanticError("vertex map is not total");
    for (std::size_t v : f)
        if (v >= g2.vertices.size())
            throw SemanticError("vertex map points outside the target graph");

    GraphHomReport report;
    report.is_hom = true;
    for (auto [x, y] : g1.edges.pairs())
        if (f[x] != f[y] && !g2.edges.contains(f[x], f[y])) {
            report.is_hom = false;
            break;
        }
    if (!report.is_hom) return report;

    const WeightTable d1 = path_weight(g1);
    const WeightTable d2 = path_weight(g2);
    report.non_expanding = true;
    for (std::size_t x = 0; x < f.size(); ++x)
        for (std::size_t y = 0; y < f.size(); ++y)
            if (!(d2.at(f[x], f[y]) <= d1.at(x, y))) report.non_expanding = false;

    const WeightedSpace s1 = graphic_structure(g1);
    const WeightedSpace s2 = graphic_structure(g2);
    report.bornologous = profile(SpaceMap(s1.space, s2.space, f)).bornologous;
    return report;
}

DiGraph graphic_realization(const Space& space) {
    const StructureClass cls = classify(space);
    if (cls != StructureClass::QuasiCoarse && cls != StructureClass::Coarse)
        throw SemanticError("graphic_realization: the space is not quasi-coarse");
    if (!connectivity(space).connected)
        throw SemanticError("graphic_realization: the space is not connected");
    Entourage edges = space.max_ent();
    for (std::size_t i = 0; i < space.carrier().size(); ++i) edges.set(i, i, false);
    return {space.carrier(), std::move(edges)};
}

DiGraph cayley(const MagmaTable& m, const PointSet& sigma, Side side) {
    if (sigma.carrier() != m.carrier())
        throw SemanticError("generating set does not live on the magma's carrier");
    const AlgebraProfile p = classify_magma(m);
    if (!p.unitary || !p.associative)
        throw SemanticError("cayley requires a monoid");
    Entourage edges(m.carrier());
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t s : sigma.to_indices())
            edges.set(x, side == Side::Left ? m.op(x, s) : m.op(s, x));
    return {m.carrier(), std::move(edges)};
}

WeightTable word_weight(const MagmaTable& m, const PointSet& sigma, Side side) {
    return path_weight(cayley(m, sigma, side));
}

GenInvarianceReport gen_invariance(const MagmaTable& m, const PointSet& sigma,
                                   const PointSet& delta) {
    const std::size_t e = m.identity_or_throw();
    const WeightTable d_sigma = word_weight(m, sigma, Side::Left);
    const WeightTable d_delta = word_weight(m, delta, Side::Left);

    for (std::size_t g = 0; g < m.size(); ++g) {
        if (d_sigma.at(e, g).is_inf())
            throw SemanticError("gen_invariance: the first set does not generate the monoid");
        if (d_delta.at(e, g).is_inf())
            throw SemanticError("gen_invariance: the second set does not generate the monoid");
    }

    GenInvarianceReport report;
    for (std::size_t s : sigma.to_indices())
        report.k = std::max(report.k, d_delta.at(e, s).value().numerator());
    for (std::size_t d : delta.to_indices())
        report.l = std::max(report.l, d_sigma.at(e, d).value().numerator());

    report.lipschitz = true;
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y) {
            if (!(d_delta.at(x, y) <= report.k * d_sigma.at(x, y))) report.lipschitz = false;
            if (!(d_sigma.at(x, y) <= report.l * d_delta.at(x, y))) report.lipschitz = false;
        }

    report.equal_structures =
        structure_from_weight(d_sigma).space == structure_from_weight(d_delta).space;
    return report;
}

} // namespace ent
