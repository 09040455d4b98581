#ifndef ENT_CARRIER_HPP
#define ENT_CARRIER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ent/errors.hpp"

namespace ent {

// Every relation here is boolean matrix algebra; desk-scale carriers are
// small, so the point count is hard-capped.
inline constexpr std::size_t kMaxCarrierPoints = 4096;

/// An ordered list of distinct point labels. Immutable and cheap to copy;
/// points are addressed by label externally and by index internally.
class Carrier {
public:
    Carrier();
    explicit Carrier(std::vector<std::string> labels);

    std::size_t size() const { return data_->labels.size(); }
    const std::string& label(std::size_t i) const { return data_->labels[i]; }
    const std::vector<std::string>& labels() const { return data_->labels; }

    /// Index of a label; SemanticError if unknown.
    std::size_t index(const std::string& label) const;
    bool has(const std::string& label) const;

    bool operator==(const Carrier& other) const;
    bool operator!=(const Carrier& other) const { return !(*this == other); }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

/// A subset of a carrier, stored as a bitmask.
class PointSet {
public:
    explicit PointSet(Carrier carrier);
    PointSet(Carrier carrier, const std::vector<std::string>& labels);

    const Carrier& carrier() const { return carrier_; }
    bool contains(std::size_t i) const;
    bool contains(const std::string& label) const;
    void add(std::size_t i);
    void add(const std::string& label);
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool is_full() const { return count() == carrier_.size(); }
    std::vector<std::string> to_labels() const;
    std::vector<std::size_t> to_indices() const;

    const std::vector<std::uint64_t>& words() const { return bits_; }
    std::vector<std::uint64_t>& words() { return bits_; }

    bool subset_of(const PointSet& other) const;
    bool operator==(const PointSet& other) const;

private:
    Carrier carrier_;
    std::vector<std::uint64_t> bits_;
};

} // namespace ent

#endif
