#ifndef ENT_FUNCTORS_HPP
#define ENT_FUNCTORS_HPP

#include <string>
#include <vector>

#include "ent/space_map.hpp"

namespace ent {

/// The object parts of the functor tower. On principal form:
///   Sym   -> M with its inverse intersected (largest symmetric substructure)
///   USym  -> M united with its inverse (smallest symmetric superstructure)
///   W     -> transitive closure of M (smallest quasi-coarse superstructure)
///   WSemi -> W after USym (smallest coarse superstructure)
///   J     -> the inverse structure
enum class FunctorTag { Sym, USym, W, WSemi, J };

std::string to_string(FunctorTag tag);
FunctorTag functor_tag_from_string(const std::string& name);

Space apply_functor(FunctorTag tag, const Space& space);

/// Lattice meet: intersection of the principal ideals.
Space meet(const Space& a, const Space& b);

/// Finest structure of the requested class containing both inputs.
Space join(const Space& a, const Space& b, StructureClass target);

/// Initial structure along a function into a space: the preimage of the
/// target's maximal entourage. Makes the function bornologous and
/// effectively proper.
Space initial_structure(const Carrier& source, const std::vector<std::size_t>& table,
                        const Space& target);

struct ProductResult {
    Space space;
    std::vector<SpaceMap> projections;
};

/// Product space on the cartesian product carrier; membership is
/// componentwise. Tuple labels are "(a,b,...)" with the leftmost factor
/// most significant in the point order.
ProductResult product(const std::vector<Space>& factors);

struct CoproductResult {
    Space space;
    std::vector<SpaceMap> injections;
};

/// Coproduct on the disjoint union; the maximal entourage is the diagonal
/// united with the injected copies of the factors' maxima. Labels are
/// "<k>:<label>".
CoproductResult coproduct(const std::vector<Space>& summands);

struct QuotientResult {
    Space space;
    SpaceMap projection;
};

/// Quotient along a surjection q. For the Entourage/SemiCoarse classes the
/// image of the maximal entourage is already principal; for QuasiCoarse and
/// Coarse the W- resp. WSemi-closure is taken.
QuotientResult quotient_space(const Space& x, const Carrier& codomain,
                              const std::vector<std::size_t>& q, StructureClass target);

/// Quotient along a partition of the carrier; each class is labelled by its
/// least-index member.
QuotientResult quotient_by_partition(const Space& x,
                                     const std::vector<std::vector<std::string>>& blocks,
                                     StructureClass target);

/// Weak softness of q on principal form: M o R_q o M <= R_q o M o R_q.
/// Exactly when the naive image structure of a quasi-coarse space is
/// already quasi-coarse.
bool is_weakly_soft(const Space& x, const std::vector<std::size_t>& q);

} // namespace ent

#endif
