#ifndef ENT_WEIGHT_HPP
#define ENT_WEIGHT_HPP

#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "ent/space.hpp"

namespace ent {

using Rat = boost::rational<long long>;

/// A nonnegative rational extended with infinity. Weights use exact
/// arithmetic throughout; infinity absorbs addition.
class ExtRat {
public:
    ExtRat() : inf_(false), v_(0) {}
    ExtRat(long long n) : inf_(false), v_(n) {}
    ExtRat(Rat v) : inf_(false), v_(std::move(v)) {}
    static ExtRat infinity() {
        ExtRat r;
        r.inf_ = true;
        return r;
    }

    bool is_inf() const { return inf_; }
    const Rat& value() const { return v_; }

    bool operator==(const ExtRat& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const ExtRat& o) const { return !(*this == o); }
    bool operator<(const ExtRat& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
    bool operator>(const ExtRat& o) const { return o < *this; }
    bool operator>=(const ExtRat& o) const { return o <= *this; }

    ExtRat operator+(const ExtRat& o) const {
        if (inf_ || o.inf_) return infinity();
        return ExtRat(v_ + o.v_);
    }

    friend ExtRat operator*(long long k, const ExtRat& x) {
        if (x.inf_) return infinity();
        return ExtRat(Rat(k) * x.v_);
    }

private:
    bool inf_;
    Rat v_;
};

std::string to_string(const Rat& v);
std::string to_string(const ExtRat& v);

/// An extended semi-positive-definite map on a finite carrier:
/// d(x,x) = 0, all values nonnegative, infinity allowed.
class WeightTable {
public:
    WeightTable(Carrier carrier, std::vector<ExtRat> values);

    const Carrier& carrier() const { return carrier_; }
    const ExtRat& at(std::size_t i, std::size_t j) const {
        return values_[i * carrier_.size() + j];
    }
    const ExtRat& at(const std::string& a, const std::string& b) const {
        return at(carrier_.index(a), carrier_.index(b));
    }

private:
    Carrier carrier_;
    std::vector<ExtRat> values_;
};

struct WeightFlags {
    bool symmetric = false; // semi-pseudometric
    bool triangle = false;  // quasi-pseudometric
    bool separated = false; // zero distance only on the diagonal
    bool extended = false;  // some value is infinite
};

WeightFlags classify_weight(const WeightTable& w);

/// A monotone chain of entourages starting at the diagonal; the finite
/// shadow of a countable base.
class Chain {
public:
    Chain(Carrier carrier, std::vector<Entourage> levels);

    const Carrier& carrier() const { return carrier_; }
    const std::vector<Entourage>& levels() const { return levels_; }
    std::size_t length() const { return levels_.size(); }

private:
    Carrier carrier_;
    std::vector<Entourage> levels_;
};

struct WeightedSpace {
    Space space;
    Chain chain;
};

/// The metric entourage structure of a weight: closed balls, one chain
/// level per distinct finite value of d, maximal entourage = finite pairs.
WeightedSpace structure_from_weight(const WeightTable& w);

/// d(x,y) = least chain index n with y in F_n[x], infinity if none.
WeightTable weight_from_chain(const Chain& c);

/// A subadditive chain presenting a quasi-coarse space; on principal form
/// the diagonal followed by the maximal entourage suffices.
Chain subadditive_chain(const Space& space);

struct ChainFlags {
    bool weakly_upper_multiplicative = false;
    bool upper_multiplicative = false;
    bool upper_symmetric = false;
    bool semi_ballean = false;
    bool quasi_ballean = false;
    bool ballean = false;
};

/// Ball-structure predicates of the chain, balls read as B(x,n) = F_n[x],
/// with existential radii searched within the chain.
ChainFlags classify_chain(const Chain& c);

enum class BuiltinFamily {
    QuasiSymZ, // forward gap n-m, backward gap doubled
    CubicSkew, // euclidean skewed by h(x) = x^3
    MinSemi,   // min{m,n} off the diagonal (naturals)
    DropQuasi, // 0 downhill, m-n uphill (naturals)
    ZsqSemi,   // Z^2 taxicab along a shared row or column, else infinite
    ZsqD1,     // Z^2 along rows only
    ZsqD2,     // Z^2 along columns only
};

std::string to_string(BuiltinFamily f);
BuiltinFamily family_from_string(const std::string& name);

/// A formula-defined weight family over a growing integer window; the
/// finite shadow of the infinite examples.
struct WeightFamily {
    BuiltinFamily formula;
    long long lo = 0;
    long long hi = 0;
};

WeightTable evaluate_family(const WeightFamily& family);

struct ProbeVerdict {
    enum class Outcome { HoldsUpToBound, Counterexample };
    Outcome outcome = Outcome::HoldsUpToBound;
    ExtRat bound;            // smallest S with the inverse of E_R inside E_S
    std::string witness_x;   // counterexample pair (x,y) in E_R ...
    std::string witness_y;
    ExtRat witness_value;    // ... with d(y,x) above the bound cap
};

/// Bounded falsification of symmetry-after-inversion: smallest S <= s_max
/// with inverse(E_R) inside E_S on the window, else a counterexample pair.
ProbeVerdict probe_inverse_bound(const WeightFamily& family, const Rat& radius, const Rat& s_max);

/// Least R with all pairs of the table within distance R (the B3 radius).
ExtRat b3_radius_scan(const WeightTable& w);

struct B3Row {
    long long lo = 0;
    long long hi = 0;
    ExtRat least_radius;
};

/// B3 radius per window: the finite shadow of B2-without-B3 growth.
std::vector<B3Row> probe_b3_radius(const WeightFamily& family,
                                   const std::vector<std::pair<long long, long long>>& windows);

} // namespace ent

#endif
