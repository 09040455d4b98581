#include "ent/magma.hpp"

#include <algorithm>
#include <array>

namespace ent {

std::string to_string(Side side) {
    return side == Side::Left ? "left" : "right";
}

Side side_from_string(const std::string& name) {
    if (name == "left") return Side::Left;
    if (name == "right") return Side::Right;
    throw SemanticError("unknown side '" + name + "' (expected left or right)");
}

MagmaTable::MagmaTable(Carrier elements, std::vector<std::size_t> op_table)
    : elements_(std::move(elements)), op_(std::move(op_table)) {
    const std::size_t n = elements_.size();
    if (op_.size() != n * n)
        throw SemanticError("multiplication table has the wrong shape");
    for (std::size_t v : op_)
        if (v >= n)
            throw SemanticError("multiplication table entry out of range");
    for (std::size_t e = 0; e < n; ++e) {
        bool neutral = true;
        for (std::size_t g = 0; g < n && neutral; ++g)
            neutral = op(e, g) == g && op(g, e) == g;
        if (neutral) {
            identity_ = e;
            break;
        }
    }
}

std::string MagmaTable::mul(const std::string& a, const std::string& b) const {
    return elements_.label(op(elements_.index(a), elements_.index(b)));
}

std::size_t MagmaTable::identity_or_throw() const {
    if (!identity_)
        throw SemanticError("magma has no neutral element");
    return *identity_;
}

namespace {

bool is_latin(const MagmaTable& t) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> row(n, false), col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (row[t.op(i, j)]) return false;
            row[t.op(i, j)] = true;
            if (col[t.op(j, i)]) return false;
            col[t.op(j, i)] = true;
        }
    }
    return true;
}

} // namespace

AlgebraProfile classify_magma(const MagmaTable& t) {
    AlgebraProfile p;
    const std::size_t n = t.size();
    p.unitary = t.identity().has_value();

    p.associative = true;
    for (std::size_t a = 0; a < n && p.associative; ++a)
        for (std::size_t b = 0; b < n && p.associative; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t.op(t.op(a, b), c) != t.op(a, t.op(b, c))) {
                    p.associative = false;
                    break;
                }

    p.abelian = true;
    for (std::size_t a = 0; a < n && p.abelian; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (t.op(a, b) != t.op(b, a)) {
                p.abelian = false;
                break;
            }

    p.loop = p.unitary && is_latin(t);
    p.group = p.loop && p.associative;

    if (p.loop) {
        const LoopInverses inv = loop_inverses(t);
        p.right_ip = true;
        p.left_ip = true;
        p.two_sided_inverses = true;
        for (std::size_t g = 0; g < n; ++g) {
            if (inv.lambda[g] != inv.rho[g]) p.two_sided_inverses = false;
            for (std::size_t h = 0; h < n; ++h) {
                if (t.op(t.op(g, h), inv.rho[h]) != g) p.right_ip = false;
                if (t.op(inv.lambda[g], t.op(g, h)) != h) p.left_ip = false;
            }
        }
    }
    return p;
}

LoopInverses loop_inverses(const MagmaTable& t) {
    const std::size_t e = t.identity_or_throw();
    if (!is_latin(t))
        throw SemanticError("loop_inverses requires a loop (Latin square with identity)");
    const std::size_t n = t.size();
    LoopInverses inv;
    inv.lambda.assign(n, 0);
    inv.rho.assign(n, 0);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t x = 0; x < n; ++x) {
            if (t.op(g, x) == e) inv.rho[g] = x;
            if (t.op(x, g) == e) inv.lambda[g] = x;
        }
    }
    return inv;
}

IdealFlags classify_ideal(const MagmaTable& t, const PointSet& u) {
    if (u.carrier() != t.carrier())
        throw SemanticError("ideal subset does not live on the magma's carrier");
    const std::size_t e = t.identity_or_throw();
    if (!u.contains(e))
        throw SemanticError("an ideal must contain the neutral element");

    IdealFlags flags;
    const auto members = u.to_indices();
    bool closed = true;
    for (std::size_t x : members)
        for (std::size_t y : members)
            if (!u.contains(t.op(x, y))) closed = false;
    flags.magmatic = closed;
    flags.monoid_ideal = closed;

    const AlgebraProfile p = classify_magma(t);
    if (p.loop) {
        const LoopInverses inv = loop_inverses(t);
        flags.left_loop = true;
        flags.right_loop = true;
        for (std::size_t x : members) {
            if (!u.contains(inv.lambda[x])) flags.left_loop = false;
            if (!u.contains(inv.rho[x])) flags.right_loop = false;
        }
        flags.loop_ideal = flags.left_loop && flags.right_loop;
    }
    flags.group_ideal = p.group && flags.magmatic && flags.loop_ideal;
    return flags;
}

Space side_structure(const MagmaTable& t, const PointSet& u, Side side) {
    if (u.carrier() != t.carrier())
        throw SemanticError("ideal subset does not live on the magma's carrier");
    const std::size_t e = t.identity_or_throw();
    if (!u.contains(e))
        throw SemanticError("an ideal must contain the neutral element");

    Entourage m = Entourage::diagonal(t.carrier());
    const std::size_t n = t.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t k : u.to_indices())
            m.set(x, side == Side::Left ? t.op(x, k) : t.op(k, x));
    return Space(std::move(m));
}

bool equi_bornologous(const std::vector<SpaceMap>& maps) {
    if (maps.empty())
        throw SemanticError("equi_bornologous needs at least one map");
    const Space& src = maps.front().src();
    const Space& dst = maps.front().dst();
    Entourage all(dst.carrier());
    for (const auto& f : maps) {
        if (f.src() != src || f.dst() != dst)
            throw SemanticError("equi_bornologous: maps must share source and target spaces");
        all = unite(all, push_forward(f, src.max_ent()));
    }
    return all.subset_of(dst.max_ent());
}

namespace {

std::vector<SpaceMap> left_shifts(const Space& space, const MagmaTable& t) {
    std::vector<SpaceMap> shifts;
    const std::size_t n = t.size();
    shifts.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::size_t> table(n);
        for (std::size_t y = 0; y < n; ++y) table[y] = t.op(x, y);
        shifts.emplace_back(space, space, std::move(table));
    }
    return shifts;
}

} // namespace

IdealRecovery recover_ideal(const Space& space, const MagmaTable& t) {
    if (space.carrier() != t.carrier())
        throw SemanticError("recover_ideal: space and magma carriers differ");
    const std::size_t e = t.identity_or_throw();
    if (!equi_bornologous(left_shifts(space, t)))
        throw SemanticError("recover_ideal: the left shifts are not equi-bornologous");

    IdealRecovery rec{PointSet(space.carrier())};
    rec.u = image_point(space.max_ent(), e);

    const auto members = rec.u.to_indices();
    rec.submagma_closed = true;
    for (std::size_t x : members)
        for (std::size_t y : members)
            if (!rec.u.contains(t.op(x, y))) rec.submagma_closed = false;

    const Space induced = side_structure(t, rec.u, Side::Left);
    rec.containment = induced.max_ent().subset_of(space.max_ent());

    const AlgebraProfile p = classify_magma(t);
    const StructureClass cls = classify(space);
    const bool symmetric = cls == StructureClass::SemiCoarse || cls == StructureClass::Coarse;
    const bool transitive = cls == StructureClass::QuasiCoarse || cls == StructureClass::Coarse;

    if (p.loop && p.left_ip && p.right_ip && p.two_sided_inverses && symmetric)
        rec.loop_equality = induced.max_ent() == space.max_ent();
    if (p.unitary && p.associative && transitive)
        rec.monoid_closure = rec.submagma_closed;
    if (p.group && cls == StructureClass::Coarse)
        rec.group_equality = induced.max_ent() == space.max_ent();
    return rec;
}

namespace {

bool subset_image(const std::vector<std::size_t>& f, const PointSet& u_m, const PointSet& u_n) {
    for (std::size_t x : u_m.to_indices())
        if (!u_n.contains(f[x])) return false;
    return true;
}

} // namespace

HomIdealProfile hom_profile(const std::vector<std::size_t>& f, const MagmaTable& m,
                            const MagmaTable& n, const PointSet& u_m, const PointSet& u_n) {
    const std::size_t em = m.identity_or_throw();
    const std::size_t en = n.identity_or_throw();
    if (f.size() != m.size())
        throw SemanticError("hom_profile: map is not total on the source magma");
    for (std::size_t v : f)
        if (v >= n.size())
            throw SemanticError("hom_profile: map points outside the target magma");
    if (f[em] != en)
        throw SemanticError("hom_profile: map does not send the neutral element to the neutral element");
    for (std::size_t g = 0; g < m.size(); ++g)
        for (std::size_t h = 0; h < m.size(); ++h)
            if (f[m.op(g, h)] != n.op(f[g], f[h]))
                throw SemanticError("hom_profile: map is not a homomorphism at (" +
                                    m.carrier().label(g) + "," + m.carrier().label(h) + ")");
    if (!u_m.contains(em) || !u_n.contains(en))
        throw SemanticError("hom_profile: ideals must contain the neutral elements");

    HomIdealProfile prof;
    prof.forward_ideal = subset_image(f, u_m, u_n);

    const Space src_l = side_structure(m, u_m, Side::Left);
    const Space dst_l = side_structure(n, u_n, Side::Left);
    const Space src_r = side_structure(m, u_m, Side::Right);
    const Space dst_r = side_structure(n, u_n, Side::Right);
    const SpaceMap f_l(src_l, dst_l, f);
    const SpaceMap f_r(src_r, dst_r, f);
    prof.bornologous_left = profile(f_l).bornologous;
    prof.bornologous_right = profile(f_r).bornologous;
    prof.forward_equivalence = prof.bornologous_left == prof.forward_ideal &&
                               prof.bornologous_right == prof.forward_ideal;

    const AlgebraProfile pm = classify_magma(m);
    const AlgebraProfile pn = classify_magma(n);
    if (pm.loop && pn.loop) {
        const LoopInverses im = loop_inverses(m);
        const LoopInverses in = loop_inverses(n);
        bool inverses = true;
        for (std::size_t x = 0; x < m.size(); ++x)
            if (f[im.lambda[x]] != in.lambda[f[x]] || f[im.rho[x]] != in.rho[f[x]])
                inverses = false;
        prof.inverses_preserved = inverses;

        // f(M) is a subloop: closed under the operation and under the
        // solutions of a x = b and y a = b.
        PointSet img(n.carrier());
        for (std::size_t v : f) img.add(v);
        bool subloop = img.contains(en);
        for (std::size_t a : img.to_indices()) {
            for (std::size_t b : img.to_indices()) {
                if (!img.contains(n.op(a, b))) subloop = false;
                for (std::size_t x = 0; x < n.size(); ++x) {
                    if (n.op(a, x) == b && !img.contains(x)) subloop = false;
                    if (n.op(x, a) == b && !img.contains(x)) subloop = false;
                }
            }
        }
        prof.image_subloop = subloop;

        if (pm.two_sided_inverses) {
            bool inherited = true;
            for (std::size_t v : img.to_indices())
                if (in.lambda[v] != in.rho[v]) inherited = false;
            prof.two_sided_inherited = inherited;
        }

        if (pm.left_ip && pm.right_ip && pn.left_ip && pn.right_ip && pm.two_sided_inverses) {
            PointSet preimage(m.carrier());
            for (std::size_t x = 0; x < m.size(); ++x)
                if (u_n.contains(f[x])) preimage.add(x);
            prof.preimage_ideal = preimage.subset_of(u_m);
            prof.effectively_proper_left = profile(f_l).effectively_proper;
            prof.preimage_equivalence = *prof.preimage_ideal == *prof.effectively_proper_left;
        }
    }
    return prof;
}

namespace catalog {

MagmaTable cyclic(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::size_t> op(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) op[i * n + j] = (i + j) % n;
    return {Carrier(labels), std::move(op)};
}

MagmaTable z3() { return cyclic(3); }
MagmaTable z4() { return cyclic(4); }
MagmaTable z6() { return cyclic(6); }

MagmaTable s3() {
    // One-line notation, composition (p q)(x) = p[q[x]].
    const std::vector<std::array<std::size_t, 3>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<std::string> labels;
    for (const auto& p : perms)
        labels.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    auto find = [&](const std::array<std::size_t, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw SemanticError("unreachable: permutation not found");
    };
    const std::size_t n = perms.size();
    std::vector<std::size_t> op(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::array<std::size_t, 3> composed{};
            for (std::size_t x = 0; x < 3; ++x) composed[x] = perms[i][perms[j][x]];
            op[i * n + j] = find(composed);
        }
    return {Carrier(labels), std::move(op)};
}

MagmaTable idempotent2() {
    return {Carrier({"e", "a"}), {0, 1, 1, 1}};
}

MagmaTable loop5() {
    // First nonassociative loop of order 5 in lexicographic row order.
    return {Carrier({"e", "a", "b", "c", "d"}),
            {0, 1, 2, 3, 4,
             1, 0, 3, 4, 2,
             2, 3, 4, 0, 1,
             3, 4, 1, 2, 0,
             4, 2, 0, 1, 3}};
}

MagmaTable steiner10() {
    // Points of AG(2,3) plus a unit; the product of two distinct points is
    // the third point of their line, every point squares to the unit.
    std::vector<std::string> labels = {"e"};
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            labels.push_back("p" + std::to_string(x) + std::to_string(y));
    const std::size_t n = 10;
    auto pid = [](std::size_t x, std::size_t y) { return 1 + x * 3 + y; };
    std::vector<std::size_t> op(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        op[i] = i;                 // e . i
        op[i * n] = i;             // i . e
    }
    for (std::size_t x1 = 0; x1 < 3; ++x1)
        for (std::size_t y1 = 0; y1 < 3; ++y1)
            for (std::size_t x2 = 0; x2 < 3; ++x2)
                for (std::size_t y2 = 0; y2 < 3; ++y2) {
                    const std::size_t i = pid(x1, y1), j = pid(x2, y2);
                    if (i == j)
                        op[i * n + j] = 0;
                    else
                        op[i * n + j] = pid((6 - x1 - x2) % 3, (6 - y1 - y2) % 3);
                }
    return {Carrier(labels), std::move(op)};
}

const std::vector<std::pair<std::string, MagmaTable>>& all() {
    static const std::vector<std::pair<std::string, MagmaTable>> tables = {
        {"z3", z3()},         {"z4", z4()},   {"z6", z6()},
        {"s3", s3()},         {"idem2", idempotent2()},
        {"loop5", loop5()},   {"steiner10", steiner10()},
    };
    return tables;
}

} // namespace catalog

} // namespace ent
