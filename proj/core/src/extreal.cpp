#include "dedekind/extreal.hpp"

#include <algorithm>
#include <vector>

#include "dedekind/error.hpp"

namespace dedekind {

using Kind = ExtReal::Kind;

ExtReal sup_add(const ExtReal& a, const ExtReal& b) {
    if (a.is_neg_inf() || b.is_neg_inf())
        return ExtReal::neg_inf(); // absorbing element
    if (a.is_pos_inf() || b.is_pos_inf())
        return ExtReal::pos_inf();
    return ExtReal(a.value() + b.value());
}

ExtReal inf_add(const ExtReal& a, const ExtReal& b) {
    if (a.is_pos_inf() || b.is_pos_inf())
        return ExtReal::pos_inf(); // absorbing element
    if (a.is_neg_inf() || b.is_neg_inf())
        return ExtReal::neg_inf();
    return ExtReal(a.value() + b.value());
}

ExtReal mode_add(ArithMode mode, const ExtReal& a, const ExtReal& b) {
    return mode == ArithMode::SupAdd ? sup_add(a, b) : inf_add(a, b);
}

ExtReal sup_diff(const ExtReal& a, const ExtReal& c) {
    if (c.is_neg_inf())
        return ExtReal::pos_inf(); // everything minus -inf
    if (a.is_pos_inf())
        return ExtReal::pos_inf();
    if (a.is_neg_inf())
        return ExtReal::neg_inf();
    if (c.is_pos_inf())
        return ExtReal::neg_inf();
    return ExtReal(a.value() - c.value());
}

ExtReal inf_diff(const ExtReal& b, const ExtReal& d) {
    if (d.is_pos_inf())
        return ExtReal::neg_inf(); // everything minus +inf
    if (b.is_neg_inf())
        return ExtReal::neg_inf();
    if (b.is_pos_inf())
        return ExtReal::pos_inf();
    if (d.is_neg_inf())
        return ExtReal::pos_inf();
    return ExtReal(b.value() - d.value());
}

ExtReal mode_diff(ArithMode mode, const ExtReal& a, const ExtReal& b) {
    return mode == ArithMode::SupAdd ? sup_diff(a, b) : inf_diff(a, b);
}

ExtReal neg(const ExtReal& x) {
    switch (x.kind()) {
    case Kind::NegInf: return ExtReal::pos_inf();
    case Kind::PosInf: return ExtReal::neg_inf();
    default: return ExtReal(-x.value());
    }
}

ExtReal scalar_mul(ArithMode, const Rational& s, const ExtReal& x) {
    if (s.is_negative())
        throw invalid_multiplier("scalar_mul: negative multiplier " + s.str());
    if (s.is_zero())
        return ExtReal(Rational(0)); // 0 * (+-inf) = 0 in both arithmetics
    if (!x.finite())
        return x;
    return ExtReal(s * x.value());
}

ExtReal fold_sup(std::span<const ExtReal> xs) {
    ExtReal acc = ExtReal::neg_inf();
    for (const ExtReal& x : xs)
        acc = std::max(acc, x);
    return acc;
}

ExtReal fold_inf(std::span<const ExtReal> xs) {
    ExtReal acc = ExtReal::pos_inf();
    for (const ExtReal& x : xs)
        acc = std::min(acc, x);
    return acc;
}

ExtReal from_downset(const DownSet& a) {
    switch (a.kind()) {
    case DownSet::Kind::Empty: return ExtReal::neg_inf();
    case DownSet::Kind::OpenBelow: return ExtReal(a.boundary());
    case DownSet::Kind::All: return ExtReal::pos_inf();
    case DownSet::Kind::ClosedBelow: break;
    }
    throw not_a_cut("from_downset: " + to_string(a) + " has a greatest element");
}

DownSet to_downset(const ExtReal& x) {
    switch (x.kind()) {
    case Kind::NegInf: return DownSet::empty();
    case Kind::PosInf: return DownSet::all();
    default: return DownSet::open_below(x.value());
    }
}

ExtReal from_upset(const UpSet& b) {
    switch (b.kind()) {
    case UpSet::Kind::All: return ExtReal::neg_inf();
    case UpSet::Kind::OpenAbove: return ExtReal(b.boundary());
    case UpSet::Kind::Empty: return ExtReal::pos_inf();
    case UpSet::Kind::ClosedAbove: break;
    }
    throw not_a_cut("from_upset: " + to_string(b) + " has a least element");
}

UpSet to_upset(const ExtReal& x) {
    switch (x.kind()) {
    case Kind::NegInf: return UpSet::all();
    case Kind::PosInf: return UpSet::empty();
    default: return UpSet::open_above(x.value());
    }
}

namespace {

// Finite minorants (SupAdd) or majorants (InfAdd) of x, up to `depth` of
// them for an infinite operand. Empty when no proper probe exists.
std::vector<Rational> proper_probes(ArithMode mode, const ExtReal& x, int depth) {
    std::vector<Rational> probes;
    if (x.finite()) {
        probes.push_back(x.value()); // attained
        return probes;
    }
    const bool unbounded_side = (mode == ArithMode::SupAdd) ? x.is_pos_inf()
                                                            : x.is_neg_inf();
    if (!unbounded_side)
        return probes; // no proper minorant of -inf / majorant of +inf
    for (int k = 1; k <= depth; ++k)
        probes.push_back(mode == ArithMode::SupAdd ? Rational(k) : Rational(-k));
    return probes;
}

ExtReal probe_fold(ArithMode mode, const std::vector<Rational>& us,
                   const std::vector<Rational>& xs) {
    if (us.empty() || xs.empty())
        return mode == ArithMode::SupAdd ? ExtReal::neg_inf()
                                         : ExtReal::pos_inf();
    std::vector<ExtReal> sums;
    sums.reserve(us.size() * xs.size());
    for (const Rational& u : us)
        for (const Rational& x : xs)
            sums.push_back(ExtReal(u + x));
    return mode == ArithMode::SupAdd ? fold_sup(sums) : fold_inf(sums);
}

} // namespace

ExtReal characterize_add_by_proper(ArithMode mode, const ExtReal& a,
                                   const ExtReal& b, int probe_depth) {
    if (probe_depth < 1)
        throw std::invalid_argument("characterize_add_by_proper: depth must be >= 1");
    const ExtReal at_depth = probe_fold(mode, proper_probes(mode, a, probe_depth),
                                        proper_probes(mode, b, probe_depth));
    const ExtReal deeper = probe_fold(mode, proper_probes(mode, a, probe_depth + 1),
                                      proper_probes(mode, b, probe_depth + 1));
    if (deeper == at_depth)
        return at_depth; // fold attained (or empty): exact already
    // still moving at greater depth: the fold runs away to the mode's
    // quasi-absorbing infinity
    return mode == ArithMode::SupAdd ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

std::string to_string(const ExtReal& x) {
    switch (x.kind()) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    default: return x.value().str();
    }
}

ExtReal parse_extreal(std::string_view text) {
    if (text == "-inf")
        return ExtReal::neg_inf();
    if (text == "+inf")
        return ExtReal::pos_inf();
    return ExtReal(Rational::parse(text));
}

} // namespace dedekind
