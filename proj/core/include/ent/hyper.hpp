#ifndef ENT_HYPER_HPP
#define ENT_HYPER_HPP

#include <string>

#include "ent/space_map.hpp"

namespace ent {

/// Base carriers above this size would need relations past the point cap.
inline constexpr std::size_t kMaxHyperBasePoints = 12;

/// The powerset carrier of a small base carrier: one point per subset,
/// indexed by bitmask, labelled "{a,b}" in carrier order.
Carrier powerset_carrier(const Carrier& base);

std::string subset_label(const Carrier& base, unsigned long long mask);

/// H(E): (A,B) related when B sits inside E[A]. Requires a reflexive E.
Entourage hyper_entourage(const Entourage& e);

/// The entourage hyperstructure: principal maximum H(M).
Space hyper_space(const Space& space);

/// The semi-coarse hyperstructure: H(M) intersected with its inverse.
Space exp_space(const Space& space);

/// The pointwise-image extension of a map, between the hyperstructures.
SpaceMap lift_map(const SpaceMap& f);

} // namespace ent

#endif
