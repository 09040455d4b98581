#ifndef ENT_ENTOURAGE_HPP
#define ENT_ENTOURAGE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ent/carrier.hpp"

namespace ent {

struct RelationFlags {
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
};

/// A relation on a finite carrier, stored as dense bit rows. Reflexivity and
/// symmetry are queried, never assumed.
class Entourage {
public:
    explicit Entourage(Carrier carrier);

    static Entourage diagonal(const Carrier& carrier);
    static Entourage full(const Carrier& carrier);
    static Entourage from_pairs(const Carrier& carrier,
                                const std::vector<std::pair<std::string, std::string>>& pairs);

    const Carrier& carrier() const { return carrier_; }
    std::size_t points() const { return carrier_.size(); }

    bool contains(std::size_t i, std::size_t j) const;
    bool contains(const std::string& a, const std::string& b) const;
    void set(std::size_t i, std::size_t j, bool value = true);
    void set(const std::string& a, const std::string& b, bool value = true);

    std::span<const std::uint64_t> row(std::size_t i) const;
    std::span<std::uint64_t> row(std::size_t i);
    std::size_t words_per_row() const { return words_; }

    std::size_t pair_count() const;
    /// Pairs in row-major carrier order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool subset_of(const Entourage& other) const;
    bool operator==(const Entourage& other) const;
    bool operator!=(const Entourage& other) const { return !(*this == other); }

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;

private:
    Carrier carrier_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;

    void check_same_carrier(const Entourage& other, const char* op) const;

    friend Entourage compose(const Entourage&, const Entourage&);
    friend Entourage inverse(const Entourage&);
    friend Entourage unite(const Entourage&, const Entourage&);
    friend Entourage intersect(const Entourage&, const Entourage&);
    friend Entourage restrict_relation(const Entourage&, const PointSet&, const Carrier&);
};

/// (U4) composition order: (x,z) in compose(E,F) iff (x,y) in E and (y,z) in F
/// for some y. Consequently image(compose(E,F), A) = image(F, image(E, A)).
Entourage compose(const Entourage& e, const Entourage& f);
Entourage inverse(const Entourage& e);
Entourage unite(const Entourage& e, const Entourage& f);
Entourage intersect(const Entourage& e, const Entourage& f);

PointSet image(const Entourage& e, const PointSet& a);
PointSet image_point(const Entourage& e, std::size_t x);

/// n-fold composition, n >= 1; n = 0 is an error (callers wanting the
/// diagonal must pass it explicitly).
Entourage power(const Entourage& e, std::size_t n);

RelationFlags classify_relation(const Entourage& e);

/// Least transitive relation containing e (union of all positive powers).
Entourage transitive_closure(const Entourage& e);

/// e restricted to the sub-carrier induced by y (labels keep carrier order).
Entourage restrict_relation(const Entourage& e, const PointSet& y, const Carrier& sub);

} // namespace ent

#endif
