#include "ent/space_map.hpp"

#include <algorithm>

namespace ent {

SpaceMap::SpaceMap(Space src, Space dst, std::vector<std::size_t> table)
    : src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)) {
    if (table_.size() != src_.carrier().size())
        throw SemanticError("map table is not total on the source carrier");
    for (std::size_t v : table_)
        if (v >= dst_.carrier().size())
            throw SemanticError("map table points outside the target carrier");
}

SpaceMap SpaceMap::identity(const Space& space) {
    std::vector<std::size_t> t(space.carrier().size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return {space, space, std::move(t)};
}

SpaceMap SpaceMap::constant(const Space& src, const Space& dst, const std::string& value) {
    std::vector<std::size_t> t(src.carrier().size(), dst.carrier().index(value));
    return {src, dst, std::move(t)};
}

SpaceMap SpaceMap::from_labels(const Space& src, const Space& dst,
                               const std::vector<std::pair<std::string, std::string>>& assignments) {
    std::vector<std::size_t> t(src.carrier().size(), src.carrier().size());
    std::vector<bool> seen(src.carrier().size(), false);
    for (const auto& [a, b] : assignments) {
        std::size_t i = src.carrier().index(a);
        if (seen[i])
            throw SemanticError("point '" + a + "' is assigned twice");
        seen[i] = true;
        t[i] = dst.carrier().index(b);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw SemanticError("point '" + src.carrier().label(i) + "' has no assignment");
    return {src, dst, std::move(t)};
}

std::string SpaceMap::apply(const std::string& label) const {
    return dst_.carrier().label(table_[src_.carrier().index(label)]);
}

PointSet SpaceMap::image_set() const {
    PointSet out(dst_.carrier());
    for (std::size_t v : table_) out.add(v);
    return out;
}

bool SpaceMap::is_injective() const {
    std::vector<bool> hit(dst_.carrier().size(), false);
    for (std::size_t v : table_) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool SpaceMap::is_surjective() const {
    return image_set().is_full();
}

SpaceMap compose(const SpaceMap& outer, const SpaceMap& inner) {
    if (inner.dst().carrier() != outer.src().carrier())
        throw SemanticError("compose: inner target and outer source carriers differ");
    std::vector<std::size_t> t(inner.table().size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = outer.apply(inner.apply(i));
    return {inner.src(), outer.dst(), std::move(t)};
}

Entourage push_forward(const SpaceMap& f, const Entourage& e) {
    if (e.carrier() != f.src().carrier())
        throw SemanticError("push_forward: entourage does not live on the source carrier");
    Entourage out(f.dst().carrier());
    const std::size_t n = e.points();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (e.contains(i, j)) out.set(f.apply(i), f.apply(j));
    return out;
}

Entourage pull_back(const SpaceMap& f, const Entourage& e) {
    if (e.carrier() != f.dst().carrier())
        throw SemanticError("pull_back: entourage does not live on the target carrier");
    Entourage out(f.src().carrier());
    const std::size_t n = f.src().carrier().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (e.contains(f.apply(i), f.apply(j))) out.set(i, j);
    return out;
}

Entourage fiber_relation(const SpaceMap& f) {
    Entourage out(f.src().carrier());
    const std::size_t n = f.src().carrier().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f.apply(i) == f.apply(j)) out.set(i, j);
    return out;
}

MapProfile profile(const SpaceMap& f) {
    MapProfile p;
    const Entourage& mx = f.src().max_ent();
    const Entourage& my = f.dst().max_ent();
    const Entourage fwd = push_forward(f, mx);

    p.bornologous = fwd.subset_of(my);
    p.effectively_proper = pull_back(f, my).subset_of(mx);
    p.ls_injective = fiber_relation(f).subset_of(mx);

    // Image-restricted conditions, decided on the principal generators.
    const PointSet img = f.image_set();
    Entourage my_on_image(f.dst().carrier());
    for (std::size_t i : img.to_indices())
        for (std::size_t j : img.to_indices())
            if (my.contains(i, j)) my_on_image.set(i, j);
    p.weakly_ubc = my_on_image.subset_of(fwd);

    p.ubc = true;
    for (std::size_t x = 0; x < f.src().carrier().size() && p.ubc; ++x) {
        PointSet lhs = image_point(my, f.apply(x)); // M_Y[f(x)]
        PointSet rhs(f.dst().carrier());            // f(M_X[x])
        for (std::size_t y : image_point(mx, x).to_indices()) rhs.add(f.apply(y));
        for (std::size_t w = 0; w < lhs.words().size(); ++w) {
            if ((lhs.words()[w] & img.words()[w]) & ~rhs.words()[w]) {
                p.ubc = false;
                break;
            }
        }
    }

    const Entourage sym_my = intersect(my, inverse(my));
    p.ls_surjective = image(sym_my, img).is_full();

    p.asymorphism = p.bornologous && p.effectively_proper && f.is_bijective();
    return p;
}

bool are_close(const SpaceMap& f, const SpaceMap& g, CloseMode mode) {
    if (f.src().carrier() != g.src().carrier())
        throw SemanticError("are_close: maps have different source carriers");
    if (f.dst() != g.dst())
        throw SemanticError("are_close: maps have different target spaces");
    const Entourage& my = f.dst().max_ent();
    const Entourage bound =
        mode == CloseMode::Plain ? my : intersect(my, inverse(my));
    for (std::size_t x = 0; x < f.table().size(); ++x)
        if (!bound.contains(f.apply(x), g.apply(x))) return false;
    return true;
}

SymEquivalenceResult sym_coarse_equivalence(const SpaceMap& f) {
    const StructureClass cx = classify(f.src());
    const StructureClass cy = classify(f.dst());
    if (cx != StructureClass::QuasiCoarse && cx != StructureClass::Coarse)
        throw SemanticError("sym_coarse_equivalence: source is not quasi-coarse");
    if (cy != StructureClass::QuasiCoarse && cy != StructureClass::Coarse)
        throw SemanticError("sym_coarse_equivalence: target is not quasi-coarse");

    SymEquivalenceResult result;
    const MapProfile p = profile(f);
    if (!p.ls_surjective) {
        result.failed_criterion = "large-scale surjective";
        return result;
    }
    if (!p.bornologous) {
        result.failed_criterion = "bornologous";
        return result;
    }
    if (!p.effectively_proper) {
        result.failed_criterion = "effectively proper";
        return result;
    }

    // Construct the inverse witness: least-index preimage where one exists,
    // otherwise the least-index point whose image is Sym-near y.
    const Entourage sym_my = intersect(f.dst().max_ent(), inverse(f.dst().max_ent()));
    const std::size_t nx = f.src().carrier().size();
    const std::size_t ny = f.dst().carrier().size();
    std::vector<std::size_t> g(ny, nx);
    for (std::size_t y = 0; y < ny; ++y) {
        for (std::size_t x = 0; x < nx; ++x) {
            if (f.apply(x) == y) {
                g[y] = x;
                break;
            }
        }
        if (g[y] != nx) continue;
        for (std::size_t x = 0; x < nx; ++x) {
            if (sym_my.contains(y, f.apply(x))) {
                g[y] = x;
                break;
            }
        }
        if (g[y] == nx)
            throw SemanticError("sym_coarse_equivalence: no witness for point '" +
                                f.dst().carrier().label(y) + "' despite large-scale surjectivity");
    }
    result.yes = true;
    result.inverse = SpaceMap(f.dst(), f.src(), std::move(g));
    return result;
}

namespace {

// Enumerate all total maps src -> dst as index tables.
bool next_table(std::vector<std::size_t>& t, std::size_t base) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

} // namespace

bool equivalence_oracle(const Space& x, const Space& y) {
    const std::size_t nx = x.carrier().size();
    const std::size_t ny = y.carrier().size();
    double forward = 1, backward = 1;
    for (std::size_t i = 0; i < nx; ++i) forward *= static_cast<double>(ny);
    for (std::size_t i = 0; i < ny; ++i) backward *= static_cast<double>(nx);
    if (forward * backward > 1e6)
        throw CapError("equivalence_oracle: too many map pairs to enumerate");

    std::vector<SpaceMap> fs, gs;
    if (nx == 0 || ny == 0) {
        if (nx != ny) return false;
        return true; // both empty: the empty maps witness equivalence
    }
    std::vector<std::size_t> t(nx, 0);
    do {
        SpaceMap f(x, y, t);
        if (profile(f).bornologous) fs.push_back(std::move(f));
    } while (next_table(t, ny));
    t.assign(ny, 0);
    do {
        SpaceMap g(y, x, t);
        if (profile(g).bornologous) gs.push_back(std::move(g));
    } while (next_table(t, nx));

    const SpaceMap idx = SpaceMap::identity(x);
    const SpaceMap idy = SpaceMap::identity(y);
    for (const auto& f : fs)
        for (const auto& g : gs)
            if (are_close(compose(g, f), idx, CloseMode::SymFunctor) &&
                are_close(compose(f, g), idy, CloseMode::SymFunctor))
                return true;
    return false;
}

} // namespace ent
