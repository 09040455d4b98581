#ifndef ENT_SPACE_MAP_HPP
#define ENT_SPACE_MAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "ent/space.hpp"

namespace ent {

/// A total function between the carriers of two spaces.
class SpaceMap {
public:
    SpaceMap(Space src, Space dst, std::vector<std::size_t> table);

    static SpaceMap identity(const Space& space);
    static SpaceMap constant(const Space& src, const Space& dst, const std::string& value);
    static SpaceMap from_labels(const Space& src, const Space& dst,
                                const std::vector<std::pair<std::string, std::string>>& assignments);

    const Space& src() const { return src_; }
    const Space& dst() const { return dst_; }
    const std::vector<std::size_t>& table() const { return table_; }

    std::size_t apply(std::size_t i) const { return table_[i]; }
    std::string apply(const std::string& label) const;

    PointSet image_set() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }

private:
    Space src_;
    Space dst_;
    std::vector<std::size_t> table_;
};

/// outer after inner (usual function composition).
SpaceMap compose(const SpaceMap& outer, const SpaceMap& inner);

/// (f x f)(E) for E on the source carrier.
Entourage push_forward(const SpaceMap& f, const Entourage& e);
/// (f x f)^{-1}(E) for E on the target carrier.
Entourage pull_back(const SpaceMap& f, const Entourage& e);
/// R_f = pairs identified by f; an entourage on the source carrier.
Entourage fiber_relation(const SpaceMap& f);

struct MapProfile {
    bool bornologous = false;
    bool weakly_ubc = false;        // weakly uniformly bounded copreserving
    bool ubc = false;               // uniformly bounded copreserving
    bool effectively_proper = false;
    bool ls_injective = false;      // uniformly bounded fibers
    bool ls_surjective = false;     // image is large in Sym of the target
    bool asymorphism = false;
};

MapProfile profile(const SpaceMap& f);

enum class CloseMode { Plain, SymFunctor };

/// Closeness of two maps with the same source carrier and target space.
/// Plain closeness is an equivalence only on coarse targets; SymFunctor
/// closeness (after applying Sym to the target) always is.
bool are_close(const SpaceMap& f, const SpaceMap& g, CloseMode mode);

struct SymEquivalenceResult {
    bool yes = false;
    std::optional<SpaceMap> inverse; // Sym-coarse inverse witness when yes
    std::string failed_criterion;    // first failed flag when no
};

/// Decides whether f is a Sym-coarse equivalence between quasi-coarse
/// spaces via the large-scale surjective + bornologous + effectively proper
/// characterisation, and constructs a deterministic inverse witness.
SymEquivalenceResult sym_coarse_equivalence(const SpaceMap& f);

/// Definition-level search: do bornologous maps f, g exist in both
/// directions whose composites are Sym-close to the identities?
/// Guarded by an enumeration cap.
bool equivalence_oracle(const Space& x, const Space& y);

} // namespace ent

#endif
