#ifndef ENT_TESTS_ORACLES_HPP
#define ENT_TESTS_ORACLES_HPP

// Brute-force oracles kept independent of the library's implementation
// paths: everything here recomputes from the definitions with plain loops
// or compact bitmask arithmetic.

#include <cstdint>
#include <vector>

#include "ent/graph.hpp"
#include "ent/space.hpp"
#include "ent/weight.hpp"

namespace oracle {

/// Triple-loop relation composition.
inline ent::Entourage compose(const ent::Entourage& e, const ent::Entourage& f) {
    const std::size_t n = e.carrier().size();
    ent::Entourage out(e.carrier());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z)
            for (std::size_t y = 0; y < n; ++y)
                if (e.contains(x, y) && f.contains(y, z)) out.set(x, z);
    return out;
}

/// Union of iterated compositions until the fixpoint.
inline ent::Entourage transitive_closure(const ent::Entourage& e) {
    ent::Entourage acc = e;
    ent::Entourage pow = e;
    for (;;) {
        pow = oracle::compose(pow, e);
        ent::Entourage next = unite(acc, pow);
        if (next == acc) return acc;
        acc = next;
    }
}

// Compact relations on up to 5 points: bit k*n+j of the mask is the pair
// (k, j). Used where exhaustive enumeration would drown in allocations.
using Mask = std::uint32_t;

inline Mask mask_compose(Mask e, Mask f, std::size_t n) {
    Mask out = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!(e >> (x * n + y) & 1)) continue;
            for (std::size_t z = 0; z < n; ++z)
                if (f >> (y * n + z) & 1) out |= Mask{1} << (x * n + z);
        }
    return out;
}

inline Mask mask_inverse(Mask e, std::size_t n) {
    Mask out = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (e >> (x * n + y) & 1) out |= Mask{1} << (y * n + x);
    return out;
}

inline Mask mask_diagonal(std::size_t n) {
    Mask d = 0;
    for (std::size_t x = 0; x < n; ++x) d |= Mask{1} << (x * n + x);
    return d;
}

inline ent::Entourage from_mask(const ent::Carrier& carrier, Mask m) {
    ent::Entourage e(carrier);
    const std::size_t n = carrier.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (m >> (x * n + y) & 1) e.set(x, y);
    return e;
}

inline Mask to_mask(const ent::Entourage& e) {
    Mask m = 0;
    const std::size_t n = e.carrier().size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (e.contains(x, y)) m |= Mask{1} << (x * n + y);
    return m;
}

struct ClosureVerdict {
    bool semi_coarse = false;
    bool quasi_coarse = false;
};

/// Re-checks the defining closure conditions subset-by-subset: every member
/// of the principal ideal must have its inverse in the ideal, and every
/// composition of two members must stay in the ideal.
inline ClosureVerdict closure_conditions(const ent::Space& space) {
    const std::size_t n = space.carrier().size();
    const Mask m = to_mask(space.max_ent());

    std::vector<int> bits;
    for (std::size_t b = 0; b < n * n; ++b)
        if (m >> b & 1) bits.push_back(static_cast<int>(b));
    if (bits.size() > 12)
        throw ent::CapError("closure oracle: maximum entourage has too many pairs");

    std::vector<Mask> members;
    members.reserve(std::size_t{1} << bits.size());
    for (Mask pick = 0; pick < (Mask{1} << bits.size()); ++pick) {
        Mask sub = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (pick >> i & 1) sub |= Mask{1} << bits[i];
        members.push_back(sub);
    }

    ClosureVerdict verdict;
    verdict.semi_coarse = true;
    for (Mask sub : members)
        if ((mask_inverse(sub, n) & ~m) != 0) verdict.semi_coarse = false;
    verdict.quasi_coarse = true;
    for (Mask a : members) {
        for (Mask b : members)
            if ((mask_compose(a, b, n) & ~m) != 0) {
                verdict.quasi_coarse = false;
                break;
            }
        if (!verdict.quasi_coarse) break;
    }
    return verdict;
}

/// All-pairs shortest paths by value iteration (Floyd-Warshall flavour),
/// independent of the BFS route.
inline ent::WeightTable floyd_warshall(const ent::DiGraph& g) {
    const std::size_t n = g.vertices.size();
    std::vector<ent::ExtRat> d(n * n, ent::ExtRat::infinity());
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = ent::ExtRat(0);
    for (auto [i, j] : g.edges.pairs())
        if (i != j) d[i * n + j] = ent::ExtRat(1);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const ent::ExtRat via = d[i * n + k] + d[k * n + j];
                if (via < d[i * n + j]) d[i * n + j] = via;
            }
    return {g.vertices, std::move(d)};
}

/// Number of set partitions of an n-set, by direct enumeration.
inline std::size_t count_partitions(std::size_t n) {
    // Restricted growth strings.
    std::vector<std::size_t> rgs(n, 0);
    std::size_t count = 0;
    for (;;) {
        ++count;
        std::size_t i = n;
        for (; i-- > 1;) {
            std::size_t max_prev = 0;
            for (std::size_t j = 0; j < i; ++j) max_prev = std::max(max_prev, rgs[j]);
            if (rgs[i] <= max_prev) {
                ++rgs[i];
                for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
                break;
            }
        }
        if (i == 0 || n <= 1) break;
    }
    return count;
}

} // namespace oracle

#endif
