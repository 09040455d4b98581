#ifndef ENT_GRAPH_HPP
#define ENT_GRAPH_HPP

#include <string>
#include <vector>

#include "ent/magma.hpp"
#include "ent/weight.hpp"

namespace ent {

/// A directed graph on a finite carrier; loops permitted, none required.
struct DiGraph {
    DiGraph(Carrier vertices, Entourage edges);

    Carrier vertices;
    Entourage edges;
};

/// Shortest directed edge-path lengths, by breadth-first search from every
/// vertex; 0 on the diagonal, infinite when unreachable.
WeightTable path_weight(const DiGraph& g);

/// The graphic quasi-coarse structure: the metric structure of the path
/// weight.
WeightedSpace graphic_structure(const DiGraph& g);

struct GraphHomReport {
    bool is_hom = false;
    bool non_expanding = false; // path distances do not grow (when is_hom)
    bool bornologous = false;   // between the graphic structures (when is_hom)
};

GraphHomReport is_graph_homomorphism(const std::vector<std::size_t>& f, const DiGraph& g1,
                                     const DiGraph& g2);

/// A graph whose graphic structure reproduces the space: the off-diagonal
/// part of the maximal entourage. Connected quasi-coarse spaces only.
DiGraph graphic_realization(const Space& space);

/// Left Cayley digraph: an edge (x, x sigma) per generator; right swaps the
/// operation order. Monoids only.
DiGraph cayley(const MagmaTable& m, const PointSet& sigma, Side side);

/// Word extended quasi-metric of the generating set: path lengths in the
/// Cayley digraph.
WeightTable word_weight(const MagmaTable& m, const PointSet& sigma, Side side);

struct GenInvarianceReport {
    bool equal_structures = false;
    long long k = 0; // max word length of a sigma generator in delta letters
    long long l = 0; // max word length of a delta generator in sigma letters
    bool lipschitz = false; // d_delta <= k d_sigma and d_sigma <= l d_delta
};

/// Compares the word structures of two generating sets and the Lipschitz
/// constants between the word metrics; both sets must generate.
GenInvarianceReport gen_invariance(const MagmaTable& m, const PointSet& sigma,
                                   const PointSet& delta);

} // namespace ent

#endif
