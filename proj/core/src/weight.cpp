#include "ent/weight.hpp"

#include <algorithm>
#include <cstdlib>

namespace ent {

std::string to_string(const Rat& v) {
    if (v.denominator() == 1) return std::to_string(v.numerator());
    return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

std::string to_string(const ExtRat& v) {
    if (v.is_inf()) return "inf";
    return to_string(v.value());
}

WeightTable::WeightTable(Carrier carrier, std::vector<ExtRat> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
    const std::size_t n = carrier_.size();
    if (values_.size() != n * n)
        throw SemanticError("weight table has the wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
        if (at(i, i) != ExtRat(0))
            throw SemanticError("weight is not semi-positive-definite: d(" +
                                carrier_.label(i) + "," + carrier_.label(i) + ") != 0");
        for (std::size_t j = 0; j < n; ++j) {
            const ExtRat& v = at(i, j);
            if (!v.is_inf() && v.value() < Rat(0))
                throw SemanticError("negative weight at (" + carrier_.label(i) + "," +
                                    carrier_.label(j) + ")");
        }
    }
}

WeightFlags classify_weight(const WeightTable& w) {
    WeightFlags flags;
    const std::size_t n = w.carrier().size();
    flags.symmetric = true;
    flags.triangle = true;
    flags.separated = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const ExtRat& d = w.at(i, j);
            if (d.is_inf()) flags.extended = true;
            if (i != j && d == ExtRat(0)) flags.separated = false;
            if (w.at(j, i) != d) flags.symmetric = false;
            for (std::size_t k = 0; k < n; ++k)
                if (!(d <= w.at(i, k) + w.at(k, j))) flags.triangle = false;
        }
    }
    return flags;
}

Chain::Chain(Carrier carrier, std::vector<Entourage> levels)
    : carrier_(std::move(carrier)), levels_(std::move(levels)) {
    if (levels_.empty())
        throw SemanticError("a chain needs at least the diagonal level");
    for (const auto& e : levels_)
        if (e.carrier() != carrier_)
            throw SemanticError("chain level does not live on the chain's carrier");
    if (levels_.front() != Entourage::diagonal(carrier_))
        throw SemanticError("a chain must start at the diagonal");
    for (std::size_t i = 0; i + 1 < levels_.size(); ++i)
        if (!levels_[i].subset_of(levels_[i + 1]))
            throw SemanticError("chain levels must be monotone by inclusion");
}

WeightedSpace structure_from_weight(const WeightTable& w) {
    const std::size_t n = w.carrier().size();
    std::vector<Rat> values;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!w.at(i, j).is_inf()) values.push_back(w.at(i, j).value());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<Entourage> levels;
    levels.push_back(Entourage::diagonal(w.carrier()));
    for (const Rat& r : values) {
        Entourage level(w.carrier());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (w.at(i, j) <= ExtRat(r)) level.set(i, j);
        if (level != levels.back()) levels.push_back(std::move(level));
    }

    Entourage max(w.carrier());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!w.at(i, j).is_inf()) max.set(i, j);

    return {Space(std::move(max)), Chain(w.carrier(), std::move(levels))};
}

WeightTable weight_from_chain(const Chain& c) {
    const std::size_t n = c.carrier().size();
    std::vector<ExtRat> values(n * n, ExtRat::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t level = 0; level < c.length(); ++level) {
                if (c.levels()[level].contains(i, j)) {
                    values[i * n + j] = ExtRat(static_cast<long long>(level));
                    break;
                }
            }
        }
    }
    return {c.carrier(), std::move(values)};
}

Chain subadditive_chain(const Space& space) {
    const StructureClass cls = classify(space);
    if (cls != StructureClass::QuasiCoarse && cls != StructureClass::Coarse)
        throw SemanticError("subadditive_chain requires a quasi-coarse space");
    std::vector<Entourage> levels;
    levels.push_back(Entourage::diagonal(space.carrier()));
    if (space.max_ent() != levels.front()) levels.push_back(space.max_ent());
    return {space.carrier(), std::move(levels)};
}

ChainFlags classify_chain(const Chain& c) {
    ChainFlags flags;
    const auto& f = c.levels();
    const std::size_t k = f.size();

    auto exists_containing = [&](const Entourage& e) {
        for (std::size_t t = 0; t < k; ++t)
            if (e.subset_of(f[t])) return true;
        return false;
    };

    flags.weakly_upper_multiplicative = true;
    flags.upper_multiplicative = true;
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t s = 0; s < k; ++s) {
            if (!exists_containing(unite(f[r], f[s])))
                flags.weakly_upper_multiplicative = false;
            if (!exists_containing(compose(f[r], f[s])))
                flags.upper_multiplicative = false;
        }
    }
    flags.upper_symmetric = true;
    for (std::size_t r = 0; r < k; ++r)
        if (!exists_containing(inverse(f[r]))) flags.upper_symmetric = false;

    flags.semi_ballean = flags.weakly_upper_multiplicative && flags.upper_symmetric;
    flags.quasi_ballean = flags.upper_multiplicative;
    flags.ballean = flags.semi_ballean && flags.quasi_ballean;
    return flags;
}

std::string to_string(BuiltinFamily f) {
    switch (f) {
    case BuiltinFamily::QuasiSymZ: return "quasi_sym_Z";
    case BuiltinFamily::CubicSkew: return "cubic_skew";
    case BuiltinFamily::MinSemi: return "min_semi";
    case BuiltinFamily::DropQuasi: return "drop_quasi";
    case BuiltinFamily::ZsqSemi: return "zsq_semi";
    case BuiltinFamily::ZsqD1: return "zsq_d1";
    case BuiltinFamily::ZsqD2: return "zsq_d2";
    }
    return "?";
}

BuiltinFamily family_from_string(const std::string& name) {
    if (name == "quasi_sym_Z") return BuiltinFamily::QuasiSymZ;
    if (name == "cubic_skew") return BuiltinFamily::CubicSkew;
    if (name == "min_semi") return BuiltinFamily::MinSemi;
    if (name == "drop_quasi") return BuiltinFamily::DropQuasi;
    if (name == "zsq_semi") return BuiltinFamily::ZsqSemi;
    if (name == "zsq_d1") return BuiltinFamily::ZsqD1;
    if (name == "zsq_d2") return BuiltinFamily::ZsqD2;
    throw SemanticError("unknown weight family '" + name + "'");
}

namespace {

bool is_planar(BuiltinFamily f) {
    return f == BuiltinFamily::ZsqSemi || f == BuiltinFamily::ZsqD1 ||
           f == BuiltinFamily::ZsqD2;
}

long long cube(long long x) { return x * x * x; }

ExtRat line_value(BuiltinFamily f, long long m, long long n) {
    switch (f) {
    case BuiltinFamily::QuasiSymZ:
        return m <= n ? ExtRat(n - m) : ExtRat(2 * (m - n));
    case BuiltinFamily::CubicSkew:
        // euclidean distance plus the climb of h(x) = x^3, when positive
        return n >= m ? ExtRat((n - m) + (cube(n) - cube(m))) : ExtRat(m - n);
    case BuiltinFamily::MinSemi:
        return m == n ? ExtRat(0) : ExtRat(std::min(m, n));
    case BuiltinFamily::DropQuasi:
        return n > m ? ExtRat(0) : ExtRat(m - n);
    default:
        throw SemanticError("not a line family");
    }
}

ExtRat plane_value(BuiltinFamily f, long long x, long long y, long long z, long long w) {
    switch (f) {
    case BuiltinFamily::ZsqSemi:
        if (y == w) return ExtRat(std::llabs(x - z));
        if (x == z) return ExtRat(std::llabs(y - w));
        return ExtRat::infinity();
    case BuiltinFamily::ZsqD1:
        return y == w ? ExtRat(std::llabs(x - z)) : ExtRat::infinity();
    case BuiltinFamily::ZsqD2:
        return x == z ? ExtRat(std::llabs(y - w)) : ExtRat::infinity();
    default:
        throw SemanticError("not a plane family");
    }
}

} // namespace

WeightTable evaluate_family(const WeightFamily& family) {
    if (family.lo > family.hi)
        throw SemanticError("empty window " + std::to_string(family.lo) + ":" +
                            std::to_string(family.hi));
    if ((family.formula == BuiltinFamily::MinSemi ||
         family.formula == BuiltinFamily::DropQuasi) &&
        family.lo < 0)
        throw SemanticError(to_string(family.formula) +
                            " is defined on the naturals; window must start at 0 or later");

    const long long width = family.hi - family.lo + 1;
    if (!is_planar(family.formula)) {
        std::vector<std::string> labels;
        labels.reserve(static_cast<std::size_t>(width));
        for (long long i = family.lo; i <= family.hi; ++i)
            labels.push_back(std::to_string(i));
        Carrier carrier(labels);
        std::vector<ExtRat> values;
        values.reserve(static_cast<std::size_t>(width * width));
        for (long long m = family.lo; m <= family.hi; ++m)
            for (long long n = family.lo; n <= family.hi; ++n)
                values.push_back(line_value(family.formula, m, n));
        return {std::move(carrier), std::move(values)};
    }

    if (width > 64)
        throw CapError("plane window too large");
    std::vector<std::string> labels;
    std::vector<std::pair<long long, long long>> points;
    for (long long x = family.lo; x <= family.hi; ++x) {
        for (long long y = family.lo; y <= family.hi; ++y) {
            labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
            points.emplace_back(x, y);
        }
    }
    Carrier carrier(labels);
    std::vector<ExtRat> values;
    values.reserve(points.size() * points.size());
    for (const auto& [x, y] : points)
        for (const auto& [z, w] : points)
            values.push_back(plane_value(family.formula, x, y, z, w));
    return {std::move(carrier), std::move(values)};
}

ProbeVerdict probe_inverse_bound(const WeightFamily& family, const Rat& radius, const Rat& s_max) {
    if (radius < Rat(0))
        throw SemanticError("probe radius must be nonnegative");
    if (s_max < radius)
        throw SemanticError("probe bound cap must be at least the radius");

    const WeightTable w = evaluate_family(family);
    const std::size_t n = w.carrier().size();
    const ExtRat r(radius);
    const ExtRat cap(s_max);

    bool any_off_diagonal = false;
    ExtRat needed(0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(w.at(i, j) <= r)) continue;
            if (i != j) any_off_diagonal = true;
            if (w.at(j, i) > needed) needed = w.at(j, i);
        }
    }
    if (!any_off_diagonal)
        throw SemanticError("window contains no pair within radius " + to_string(radius));

    ProbeVerdict verdict;
    if (needed <= cap) {
        verdict.outcome = ProbeVerdict::Outcome::HoldsUpToBound;
        verdict.bound = needed;
        return verdict;
    }
    // Least witness in lexicographic carrier order.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(w.at(i, j) <= r)) continue;
            if (w.at(j, i) > cap) {
                verdict.outcome = ProbeVerdict::Outcome::Counterexample;
                verdict.witness_x = w.carrier().label(i);
                verdict.witness_y = w.carrier().label(j);
                verdict.witness_value = w.at(j, i);
                return verdict;
            }
        }
    }
    throw SemanticError("unreachable: bound exceeded without witness");
}

ExtRat b3_radius_scan(const WeightTable& w) {
    ExtRat needed(0);
    const std::size_t n = w.carrier().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (w.at(i, j) > needed) needed = w.at(i, j);
    return needed;
}

std::vector<B3Row> probe_b3_radius(const WeightFamily& family,
                                   const std::vector<std::pair<long long, long long>>& windows) {
    std::vector<B3Row> rows;
    rows.reserve(windows.size());
    for (const auto& [lo, hi] : windows) {
        WeightFamily f = family;
        f.lo = lo;
        f.hi = hi;
        rows.push_back({lo, hi, b3_radius_scan(evaluate_family(f))});
    }
    return rows;
}

} // namespace ent
