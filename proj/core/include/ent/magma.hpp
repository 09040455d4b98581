#ifndef ENT_MAGMA_HPP
#define ENT_MAGMA_HPP

#include <optional>
#include <string>
#include <vector>

#include "ent/space_map.hpp"

namespace ent {

enum class Side { Left, Right };

std::string to_string(Side side);
Side side_from_string(const std::string& name);

/// A finite magma given by its total multiplication table. The identity,
/// when one exists, is located at construction.
class MagmaTable {
public:
    MagmaTable(Carrier elements, std::vector<std::size_t> op);

    const Carrier& carrier() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t op(std::size_t i, std::size_t j) const { return op_[i * size() + j]; }
    std::string mul(const std::string& a, const std::string& b) const;

    std::optional<std::size_t> identity() const { return identity_; }
    /// Identity index; SemanticError when the magma is not unitary.
    std::size_t identity_or_throw() const;

private:
    Carrier elements_;
    std::vector<std::size_t> op_;
    std::optional<std::size_t> identity_;
};

struct AlgebraProfile {
    bool unitary = false;
    bool associative = false;
    bool loop = false; // Latin square with identity
    bool group = false;
    bool abelian = false;
    bool right_ip = false; // (g h) h^rho = g
    bool left_ip = false;  // g^lambda (g h) = h
    bool two_sided_inverses = false;
};

AlgebraProfile classify_magma(const MagmaTable& t);

struct LoopInverses {
    std::vector<std::size_t> lambda; // lambda[g] . g = e
    std::vector<std::size_t> rho;    // g . rho[g] = e
};

LoopInverses loop_inverses(const MagmaTable& t);

/// The union U of a principal ideal on a magma; the ideal itself is the
/// family of all subsets of U.
struct IdealSet {
    MagmaTable magma;
    PointSet u;
};

struct IdealFlags {
    bool magmatic = false;     // U closed under products of its elements
    bool monoid_ideal = false; // the same closure, reported separately
    bool left_loop = false;    // U^lambda inside U
    bool right_loop = false;   // U^rho inside U
    bool loop_ideal = false;
    bool group_ideal = false;
};

/// Ideal-kind predicates of U; requires the identity to belong to U.
IdealFlags classify_ideal(const MagmaTable& t, const PointSet& u);

/// The left (right) magmatic entourage structure of the principal ideal U:
/// diagonal united with all pairs (x, x k) (resp. (x, k x)) for k in U.
Space side_structure(const MagmaTable& t, const PointSet& u, Side side);

/// One target entourage absorbs the pushforward of every map in the family.
bool equi_bornologous(const std::vector<SpaceMap>& maps);

struct IdealRecovery {
    PointSet u;                          // max_ent[e]
    bool submagma_closed = false;        // U U inside U (observed, not implied in general)
    bool containment = false;            // side structure of U sits inside the space
    std::optional<bool> loop_equality;   // IP loop with two-sided inverses, symmetric space
    std::optional<bool> monoid_closure;  // monoid, transitive space: U U inside U
    std::optional<bool> group_equality;  // group, coarse space
};

/// Recovers the principal ideal U = max_ent[e] of a space whose left shifts
/// are equi-bornologous, and evaluates the recovery guarantees that apply
/// to the magma's classification.
IdealRecovery recover_ideal(const Space& space, const MagmaTable& t);

struct HomIdealProfile {
    bool forward_ideal = false;          // f(U_M) inside U_N
    bool bornologous_left = false;
    bool bornologous_right = false;
    bool forward_equivalence = false;    // the three above agree
    std::optional<bool> preimage_ideal;      // f^{-1}(U_N) inside U_M (IP loops)
    std::optional<bool> effectively_proper_left;
    std::optional<bool> preimage_equivalence;
    std::optional<bool> inverses_preserved;  // f(x)^lambda = f(x^lambda), same for rho
    std::optional<bool> image_subloop;
    std::optional<bool> two_sided_inherited;
};

/// Ideal-transport profile of a homomorphism between unitary magmas;
/// refuses non-homomorphisms.
HomIdealProfile hom_profile(const std::vector<std::size_t>& f, const MagmaTable& m,
                            const MagmaTable& n, const PointSet& u_m, const PointSet& u_n);

/// Small table catalog referenced by tests and docs.
namespace catalog {

MagmaTable cyclic(std::size_t n);
MagmaTable z3();
MagmaTable z4();
MagmaTable z6();
/// Symmetric group on three letters; elements labelled by one-line notation.
MagmaTable s3();
/// Two-element idempotent monoid {e, a} with a a = a.
MagmaTable idempotent2();
/// Lexicographically-first nonassociative loop of order 5 (no inverse
/// property; no order-5 loop is both nonassociative and IP).
MagmaTable loop5();
/// Steiner loop of the affine plane AG(2,3): order 10, commutative,
/// nonassociative, inverse property, two-sided inverses.
MagmaTable steiner10();

const std::vector<std::pair<std::string, MagmaTable>>& all();

} // namespace catalog

} // namespace ent

#endif
