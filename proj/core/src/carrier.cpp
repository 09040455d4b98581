#include "ent/carrier.hpp"

#include <bit>

namespace ent {

Carrier::Carrier() {
    data_ = std::make_shared<Data>();
}

Carrier::Carrier(std::vector<std::string> labels) {
    if (labels.size() > kMaxCarrierPoints)
        throw CapError("carrier exceeds the " + std::to_string(kMaxCarrierPoints) +
                       "-point cap (" + std::to_string(labels.size()) + " points)");
    auto data = std::make_shared<Data>();
    data->index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = data->index.emplace(labels[i], i);
        if (!fresh)
            throw SemanticError("duplicate point label '" + labels[i] + "'");
    }
    data->labels = std::move(labels);
    data_ = std::move(data);
}

std::size_t Carrier::index(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end())
        throw SemanticError("unknown point label '" + label + "'");
    return it->second;
}

bool Carrier::has(const std::string& label) const {
    return data_->index.count(label) != 0;
}

bool Carrier::operator==(const Carrier& other) const {
    return data_ == other.data_ || data_->labels == other.data_->labels;
}

PointSet::PointSet(Carrier carrier)
    : carrier_(std::move(carrier)), bits_((carrier_.size() + 63) / 64, 0) {}

PointSet::PointSet(Carrier carrier, const std::vector<std::string>& labels)
    : PointSet(std::move(carrier)) {
    for (const auto& l : labels) add(l);
}

bool PointSet::contains(std::size_t i) const {
    return (bits_[i / 64] >> (i % 64)) & 1u;
}

bool PointSet::contains(const std::string& label) const {
    return contains(carrier_.index(label));
}

void PointSet::add(std::size_t i) {
    bits_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void PointSet::add(const std::string& label) {
    add(carrier_.index(label));
}

std::size_t PointSet::count() const {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::string> PointSet::to_labels() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (contains(i)) out.push_back(carrier_.label(i));
    return out;
}

std::vector<std::size_t> PointSet::to_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

bool PointSet::subset_of(const PointSet& other) const {
    if (carrier_ != other.carrier_)
        throw SemanticError("point sets live on different carriers");
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w] & ~other.bits_[w]) return false;
    return true;
}

bool PointSet::operator==(const PointSet& other) const {
    return carrier_ == other.carrier_ && bits_ == other.bits_;
}

} // namespace ent
