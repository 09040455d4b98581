#ifndef ENT_IO_HPP
#define ENT_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "ent/graph.hpp"
#include "ent/hyper.hpp"
#include "ent/functors.hpp"

namespace ent {

/// Named collections of the objects the text formats describe. Names are
/// unique per kind; map sources and targets are resolved against the loaded
/// spaces on demand.
class Workspace {
public:
    void load_file(const std::string& path);
    void load_text(const std::string& text, const std::string& filename);

    bool has_space(const std::string& name) const { return spaces_.count(name) != 0; }
    const Space& space(const std::string& name) const;
    const WeightTable& weight(const std::string& name) const;
    const DiGraph& graph(const std::string& name) const;
    const MagmaTable& magma(const std::string& name) const;
    /// Ideal subset attached to a magma block, as a point set on its carrier.
    PointSet ideal(const std::string& magma_name, const std::string& ideal_name) const;
    /// Resolves the named map against the loaded spaces.
    SpaceMap map(const std::string& name) const;

    std::string first_space() const;
    std::string first_map() const;
    std::string first_magma() const;
    std::string first_graph() const;
    std::string first_weight() const;

    struct RawMap {
        std::string src;
        std::string dst;
        std::vector<std::pair<std::string, std::string>> assignments;
    };
    const RawMap& raw_map(const std::string& name) const;

private:
    std::map<std::string, Space> spaces_;
    std::map<std::string, WeightTable> weights_;
    std::map<std::string, DiGraph> graphs_;
    std::map<std::string, MagmaTable> magmas_;
    std::map<std::string, std::map<std::string, std::vector<std::string>>> ideals_;
    std::map<std::string, RawMap> maps_;
    std::vector<std::string> space_order_, map_order_, magma_order_, graph_order_, weight_order_;
};

std::string serialize_space(const std::string& name, const Space& space);
std::string serialize_graph(const std::string& name, const DiGraph& graph);
std::string serialize_weight(const std::string& name, const WeightTable& weight);
std::string serialize_map(const std::string& name, const std::string& src,
                          const std::string& dst, const SpaceMap& map);

/// DOT digraph of a relation, nodes in carrier order.
std::string dot_relation(const std::string& name, const Carrier& carrier, const Entourage& rel);
std::string dot_graph(const std::string& name, const DiGraph& graph);

/// "lo:hi" with integer endpoints.
std::pair<long long, long long> parse_window(const std::string& text);
/// "p", "-p", "p/q" or "inf".
ExtRat parse_ext_rat(const std::string& text);

} // namespace ent

#endif
