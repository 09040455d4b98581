#ifndef ENT_SPACE_HPP
#define ENT_SPACE_HPP

#include <string>
#include <vector>

#include "ent/entourage.hpp"

namespace ent {

enum class StructureClass { Entourage, SemiCoarse, QuasiCoarse, Coarse };

std::string to_string(StructureClass c);

/// An entourage structure on a finite carrier, in canonical principal form:
/// the structure is the set of all subrelations of its maximal entourage M.
/// M always contains the diagonal; symmetry/transitivity of M decide the
/// structure class.
class Space {
public:
    /// max_ent must contain the diagonal.
    explicit Space(Entourage max_ent);

    static Space discrete(const Carrier& carrier);
    static Space indiscrete(const Carrier& carrier);

    const Carrier& carrier() const { return max_ent_.carrier(); }
    const Entourage& max_ent() const { return max_ent_; }

    /// Membership law of the principal ideal: E belongs to the structure
    /// iff E is a subrelation of max_ent.
    bool contains(const Entourage& e) const;

    bool operator==(const Space& other) const { return max_ent_ == other.max_ent_; }
    bool operator!=(const Space& other) const { return !(*this == other); }

private:
    Entourage max_ent_;
};

/// The structure generated by a finite set of entourages: the principal
/// ideal below the union of the generators and the diagonal.
Space from_generators(const Carrier& carrier, const std::vector<Entourage>& gens);

StructureClass classify(const Space& space);

/// Substructure on a subset of the carrier (labels keep carrier order).
Space restrict_to(const Space& space, const std::vector<std::string>& labels);

struct BoundednessFlags {
    bool b1 = false; // some x in A sees all of A
    bool b2 = false; // every x in A sees all of A (per-point witnesses)
    bool b3 = false; // A x A is an entourage
};

/// Boundedness of a non-empty subset; the empty set is refused (the three
/// conditions all quantify over points of A and no convention is given).
BoundednessFlags boundedness(const Space& space, const PointSet& a);

bool uniformly_bounded(const Space& space, const std::vector<PointSet>& family);

struct ConnectivityReport {
    bool connected = false;
    bool strongly_connected = false;
    bool uniformly_connected = false;
    /// Equivalence classes of the chain relation, blocks ordered by least
    /// member, members in carrier order.
    std::vector<std::vector<std::string>> components;
};

ConnectivityReport connectivity(const Space& space);

struct GeometryReport {
    bool locally_finite = true; // always true at finite scale; kept for interface uniformity
    std::size_t phi = 0;        // bounded-geometry witness evaluated at max_ent
};

GeometryReport geometry(const Space& space);

} // namespace ent

#endif
