#include "ent/entourage.hpp"

#include <bit>

namespace ent {

Entourage::Entourage(Carrier carrier)
    : carrier_(std::move(carrier)),
      words_((carrier_.size() + 63) / 64),
      bits_(carrier_.size() * words_, 0) {}

Entourage Entourage::diagonal(const Carrier& carrier) {
    Entourage e(carrier);
    for (std::size_t i = 0; i < carrier.size(); ++i) e.set(i, i);
    return e;
}

Entourage Entourage::full(const Carrier& carrier) {
    Entourage e(carrier);
    const std::size_t n = carrier.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.set(i, j);
    return e;
}

Entourage Entourage::from_pairs(const Carrier& carrier,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
    Entourage e(carrier);
    for (const auto& [a, b] : pairs) e.set(a, b);
    return e;
}

bool Entourage::contains(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
}

bool Entourage::contains(const std::string& a, const std::string& b) const {
    return contains(carrier_.index(a), carrier_.index(b));
}

void Entourage::set(std::size_t i, std::size_t j, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    if (value)
        bits_[i * words_ + j / 64] |= mask;
    else
        bits_[i * words_ + j / 64] &= ~mask;
}

void Entourage::set(const std::string& a, const std::string& b, bool value) {
    set(carrier_.index(a), carrier_.index(b), value);
}

std::span<const std::uint64_t> Entourage::row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
}

std::span<std::uint64_t> Entourage::row(std::size_t i) {
    return {bits_.data() + i * words_, words_};
}

std::size_t Entourage::pair_count() const {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> Entourage::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = carrier_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (contains(i, j)) out.emplace_back(i, j);
    return out;
}

void Entourage::check_same_carrier(const Entourage& other, const char* op) const {
    if (carrier_ != other.carrier_)
        throw SemanticError(std::string(op) + ": entourages live on different carriers");
}

bool Entourage::subset_of(const Entourage& other) const {
    check_same_carrier(other, "subset");
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~other.bits_[w]) return false;
    return true;
}

bool Entourage::operator==(const Entourage& other) const {
    return carrier_ == other.carrier_ && bits_ == other.bits_;
}

bool Entourage::is_reflexive() const {
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (!contains(i, i)) return false;
    return true;
}

bool Entourage::is_symmetric() const {
    const std::size_t n = carrier_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (contains(i, j) != contains(j, i)) return false;
    return true;
}

bool Entourage::is_transitive() const {
    return compose(*this, *this).subset_of(*this);
}

Entourage compose(const Entourage& e, const Entourage& f) {
    e.check_same_carrier(f, "compose");
    const std::size_t n = e.carrier_.size();
    Entourage out(e.carrier_);
    for (std::size_t x = 0; x < n; ++x) {
        auto dst = out.row(x);
        for (std::size_t y = 0; y < n; ++y) {
            if (!e.contains(x, y)) continue;
            auto fy = f.row(y);
            for (std::size_t w = 0; w < f.words_; ++w) dst[w] |= fy[w];
        }
    }
    return out;
}

Entourage inverse(const Entourage& e) {
    const std::size_t n = e.carrier_.size();
    Entourage out(e.carrier_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (e.contains(i, j)) out.set(j, i);
    return out;
}

Entourage unite(const Entourage& e, const Entourage& f) {
    e.check_same_carrier(f, "union");
    Entourage out = e;
    for (std::size_t w = 0; w < out.bits_.size(); ++w) out.bits_[w] |= f.bits_[w];
    return out;
}

Entourage intersect(const Entourage& e, const Entourage& f) {
    e.check_same_carrier(f, "intersection");
    Entourage out = e;
    for (std::size_t w = 0; w < out.bits_.size(); ++w) out.bits_[w] &= f.bits_[w];
    return out;
}

PointSet image(const Entourage& e, const PointSet& a) {
    if (e.carrier() != a.carrier())
        throw SemanticError("image: point set does not live on the entourage's carrier");
    PointSet out(e.carrier());
    for (std::size_t x = 0; x < e.points(); ++x) {
        if (!a.contains(x)) continue;
        auto r = e.row(x);
        for (std::size_t w = 0; w < r.size(); ++w) out.words()[w] |= r[w];
    }
    return out;
}

PointSet image_point(const Entourage& e, std::size_t x) {
    PointSet out(e.carrier());
    auto r = e.row(x);
    for (std::size_t w = 0; w < r.size(); ++w) out.words()[w] |= r[w];
    return out;
}

Entourage power(const Entourage& e, std::size_t n) {
    if (n == 0)
        throw SemanticError("power: exponent must be at least 1");
    Entourage acc = e;
    for (std::size_t k = 1; k < n; ++k) acc = compose(acc, e);
    return acc;
}

RelationFlags classify_relation(const Entourage& e) {
    return {e.is_reflexive(), e.is_symmetric(), e.is_transitive()};
}

Entourage transitive_closure(const Entourage& e) {
    // Warshall over bit rows.
    Entourage out = e;
    const std::size_t n = out.points();
    for (std::size_t k = 0; k < n; ++k) {
        auto rk = out.row(k);
        std::vector<std::uint64_t> saved(rk.begin(), rk.end());
        for (std::size_t i = 0; i < n; ++i) {
            if (!out.contains(i, k)) continue;
            auto ri = out.row(i);
            for (std::size_t w = 0; w < saved.size(); ++w) ri[w] |= saved[w];
        }
    }
    return out;
}

Entourage restrict_relation(const Entourage& e, const PointSet& y, const Carrier& sub) {
    if (e.carrier() != y.carrier())
        throw SemanticError("restrict: point set does not live on the entourage's carrier");
    const auto idx = y.to_indices();
    Entourage out{sub};
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (e.contains(idx[i], idx[j])) out.set(i, j);
    return out;
}

} // namespace ent
