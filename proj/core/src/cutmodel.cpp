#include "dedekind/cutmodel.hpp"

#include <algorithm>
#include <optional>

#include "dedekind/error.hpp"

namespace dedekind {

namespace {

using DK = DownSet::Kind;
using UK = UpSet::Kind;

void require_lower(const DownSet& a, const char* who) {
    if (!a.is_lower_cut())
        throw not_a_cut(std::string(who) + ": operand " + to_string(a) +
                        " has a greatest element");
}

void require_upper(const UpSet& b, const char* who) {
    if (!b.is_upper_cut())
        throw not_a_cut(std::string(who) + ": operand " + to_string(b) +
                        " has a least element");
}

// Largest multiple of 1/denominator that is <= q.
Rational floor_to_grid(const Rational& q, long denom) {
    BigInt scaled_num = q.num() * denom;
    BigInt quot = scaled_num / q.den();
    if (scaled_num < 0 && quot * q.den() != scaled_num)
        --quot; // integer division truncates toward zero
    return Rational(quot, denom);
}

} // namespace

// ---- GridWindow ----

GridWindow::GridWindow(Rational bound, long denominator)
    : bound_(std::move(bound)), denominator_(denominator) {
    if (!(bound_ > Rational(0)))
        throw std::invalid_argument("grid window bound must be positive");
    if (denominator_ < 1)
        throw std::invalid_argument("grid window denominator must be >= 1");
}

std::vector<Rational> GridWindow::points_up_to(const Rational& limit) const {
    const Rational top = floor_to_grid(limit, denominator_);
    std::vector<Rational> out;
    for (Rational q = -top; q <= top; q += step())
        out.push_back(q);
    return out;
}

std::vector<Rational> GridWindow::points() const { return points_up_to(bound_); }

std::vector<Rational> GridWindow::shrunken_points() const {
    return points_up_to(bound_ * Rational(1, 2));
}

// ---- order and boolean algebra ----

bool subset(const DownSet& a, const DownSet& b) {
    if (a.kind() == DK::Empty || b.kind() == DK::All)
        return true;
    if (a.kind() == DK::All || b.kind() == DK::Empty)
        return false;
    // both bounded half-lines
    if (a.kind() == DK::ClosedBelow && b.kind() == DK::OpenBelow)
        return a.boundary() < b.boundary();
    return a.boundary() <= b.boundary();
}

bool subset(const UpSet& a, const UpSet& b) {
    if (a.kind() == UK::Empty || b.kind() == UK::All)
        return true;
    if (a.kind() == UK::All || b.kind() == UK::Empty)
        return false;
    if (a.kind() == UK::ClosedAbove && b.kind() == UK::OpenAbove)
        return a.boundary() > b.boundary();
    return a.boundary() >= b.boundary();
}

// Any two symbolic half-line sets are comparable, so union is the larger
// and intersection the smaller of the pair.
DownSet set_union(const DownSet& a, const DownSet& b) {
    return subset(a, b) ? b : a;
}
DownSet set_intersection(const DownSet& a, const DownSet& b) {
    return subset(a, b) ? a : b;
}
UpSet set_union(const UpSet& a, const UpSet& b) { return subset(a, b) ? b : a; }
UpSet set_intersection(const UpSet& a, const UpSet& b) {
    return subset(a, b) ? a : b;
}

UpSet complement(const DownSet& a) {
    switch (a.kind()) {
    case DK::Empty: return UpSet::all();
    case DK::OpenBelow: return UpSet::closed_above(a.boundary());
    case DK::ClosedBelow: return UpSet::open_above(a.boundary());
    case DK::All: return UpSet::empty();
    }
    return UpSet::empty();
}

DownSet complement(const UpSet& b) {
    switch (b.kind()) {
    case UK::Empty: return DownSet::all();
    case UK::OpenAbove: return DownSet::closed_below(b.boundary());
    case UK::ClosedAbove: return DownSet::open_below(b.boundary());
    case UK::All: return DownSet::empty();
    }
    return DownSet::empty();
}

UpSet negate(const DownSet& a) {
    switch (a.kind()) {
    case DK::Empty: return UpSet::empty();
    case DK::OpenBelow: return UpSet::open_above(-a.boundary());
    case DK::ClosedBelow: return UpSet::closed_above(-a.boundary());
    case DK::All: return UpSet::all();
    }
    return UpSet::empty();
}

DownSet negate(const UpSet& b) {
    switch (b.kind()) {
    case UK::Empty: return DownSet::empty();
    case UK::OpenAbove: return DownSet::open_below(-b.boundary());
    case UK::ClosedAbove: return DownSet::closed_below(-b.boundary());
    case UK::All: return DownSet::all();
    }
    return DownSet::empty();
}

DownSet interior_I(const DownSet& a) {
    if (a.kind() == DK::ClosedBelow)
        return DownSet::open_below(a.boundary());
    return a;
}

UpSet interior_J(const UpSet& b) {
    if (b.kind() == UK::ClosedAbove)
        return UpSet::open_above(b.boundary());
    return b;
}

// ---- cut validation ----

namespace {

// Any pair violating complementarity does so at one of these points.
std::vector<Rational> d1_candidates(const CutPair& c) {
    std::vector<Rational> qs{Rational(0)};
    const auto push_near = [&](const Rational& b) {
        qs.push_back(b - Rational(1));
        qs.push_back(b);
        qs.push_back(b + Rational(1));
    };
    if (c.lower.bounded())
        push_near(c.lower.boundary());
    if (c.upper.bounded())
        push_near(c.upper.boundary());
    if (c.lower.bounded() && c.upper.bounded())
        qs.push_back((c.lower.boundary() + c.upper.boundary()) * Rational(1, 2));
    return qs;
}

std::optional<std::string> check_d1(const CutPair& c) {
    if (complement(c.lower) == c.upper)
        return std::nullopt;
    for (const Rational& q : d1_candidates(c)) {
        const bool in_lower = c.lower.contains(q);
        const bool in_upper = c.upper.contains(q);
        if (in_lower == in_upper)
            return "(D1) fails at q = " + q.str() +
                   (in_lower ? " (in both halves)" : " (in neither half)");
    }
    return "(D1) fails: halves are not complementary"; // unreachable
}

std::optional<std::string> check_d2(const CutPair& c) {
    if (c.lower.kind() == DK::Empty || c.upper.kind() == UK::Empty)
        return std::nullopt;
    const auto witness = [](const Rational& p, const Rational& q) {
        return "(D2) fails: p = " + p.str() + " in the lower half, q = " +
               q.str() + " in the upper half, but p < q does not hold";
    };
    if (c.lower.kind() == DK::All) {
        const Rational q0 =
            c.upper.bounded() ? c.upper.boundary() + Rational(1) : Rational(0);
        return witness(q0 + Rational(1), q0);
    }
    if (c.upper.kind() == UK::All) {
        const Rational p0 = c.lower.boundary() - Rational(1);
        return witness(p0, p0 - Rational(1));
    }
    const Rational& a = c.lower.boundary();
    const Rational& b = c.upper.boundary();
    if (a < b)
        return std::nullopt;
    if (a == b) {
        const bool both_closed = c.lower.kind() == DK::ClosedBelow &&
                                 c.upper.kind() == UK::ClosedAbove;
        if (!both_closed)
            return std::nullopt;
        return witness(a, a);
    }
    // a > b: the halves overlap on an interval with rational interior points
    const Rational q0 = b + (a - b) * Rational(1, 3);
    const Rational p0 = b + (a - b) * Rational(2, 3);
    return witness(p0, q0);
}

std::optional<std::string> check_d3(const CutPair& c, CutVariant variant) {
    if (variant == CutVariant::DL) {
        if (c.lower.kind() == DK::ClosedBelow)
            return "(DL3) fails: lower half has greatest element " +
                   c.lower.boundary().str();
    } else {
        if (c.upper.kind() == UK::ClosedAbove)
            return "(DU3) fails: upper half has least element " +
                   c.upper.boundary().str();
    }
    return std::nullopt;
}

} // namespace

CutValidation validate_cut(const CutPair& cut, CutVariant variant) {
    for (auto check : {check_d1, check_d2}) {
        if (auto reason = check(cut))
            return {CutClass::Invalid, *reason};
    }
    if (auto reason = check_d3(cut, variant))
        return {CutClass::Invalid, *reason};
    const bool non_ordinary =
        cut.lower.kind() == DK::Empty || cut.lower.kind() == DK::All;
    return {non_ordinary ? CutClass::ValidNonOrdinary : CutClass::ValidOrdinary,
            ""};
}

// ---- Minkowski addition ----

DownSet minkowski_down(const DownSet& a, const DownSet& b) {
    require_lower(a, "minkowski_down");
    require_lower(b, "minkowski_down");
    if (a.kind() == DK::Empty || b.kind() == DK::Empty)
        return DownSet::empty(); // the empty set absorbs
    if (a.kind() == DK::All || b.kind() == DK::All)
        return DownSet::all();
    return DownSet::open_below(a.boundary() + b.boundary());
}

UpSet minkowski_up(const UpSet& a, const UpSet& b) {
    require_upper(a, "minkowski_up");
    require_upper(b, "minkowski_up");
    if (a.kind() == UK::Empty || b.kind() == UK::Empty)
        return UpSet::empty();
    if (a.kind() == UK::All || b.kind() == UK::All)
        return UpSet::all();
    return UpSet::open_above(a.boundary() + b.boundary());
}

// ---- correspondence between the two families ----

UpSet to_upper(const DownSet& a) {
    require_lower(a, "to_upper");
    return interior_J(complement(a));
}

DownSet to_lower(const UpSet& b) {
    require_upper(b, "to_lower");
    return interior_I(complement(b));
}

// ---- lattice folds ----

DownSet lattice_sup_down(std::span<const DownSet> family) {
    DownSet acc = DownSet::empty(); // least element
    for (const DownSet& a : family) {
        require_lower(a, "lattice_sup_down");
        acc = set_union(acc, a);
    }
    return acc;
}

DownSet lattice_inf_down(std::span<const DownSet> family) {
    DownSet acc = DownSet::all(); // greatest element
    for (const DownSet& a : family) {
        require_lower(a, "lattice_inf_down");
        acc = set_intersection(acc, a);
    }
    return interior_I(acc);
}

UpSet lattice_sup_up(std::span<const UpSet> family) {
    UpSet acc = UpSet::all(); // least element of the reversed order
    for (const UpSet& b : family) {
        require_upper(b, "lattice_sup_up");
        acc = set_intersection(acc, b);
    }
    return acc;
}

UpSet lattice_inf_up(std::span<const UpSet> family) {
    UpSet acc = UpSet::empty(); // greatest element of the reversed order
    for (const UpSet& b : family) {
        require_upper(b, "lattice_inf_up");
        acc = set_union(acc, b);
    }
    return interior_J(acc);
}

// ---- negatives and multiplication ----

DownSet star_down(const DownSet& a) {
    require_lower(a, "star_down");
    return interior_I(negate(complement(a)));
}

UpSet star_up(const UpSet& b) {
    require_upper(b, "star_up");
    return interior_J(negate(complement(b)));
}

DownSet mul_lower(const DownSet& s, const DownSet& a) {
    if (s.kind() != DK::OpenBelow || s.boundary().is_negative())
        throw invalid_multiplier(
            "mul_lower: multiplier must be open_below(s) with s >= 0, got " +
            to_string(s));
    require_lower(a, "mul_lower");
    if (s.boundary().is_zero())
        return DownSet::open_below(Rational(0)); // zero multiplier flattens
    switch (a.kind()) {
    case DK::Empty: return DownSet::empty();
    case DK::All: return DownSet::all();
    default: break;
    }
    if (!a.boundary().is_negative())
        return DownSet::open_below(s.boundary() * a.boundary());
    // operand below zero: route through the star extension
    return star_down(mul_lower(s, star_down(a)));
}

UpSet mul_upper(const UpSet& t, const UpSet& b) {
    if (t.kind() != UK::OpenAbove || t.boundary().is_negative())
        throw invalid_multiplier(
            "mul_upper: multiplier must be open_above(t) with t >= 0, got " +
            to_string(t));
    require_upper(b, "mul_upper");
    if (t.boundary().is_zero())
        return UpSet::open_above(Rational(0));
    switch (b.kind()) {
    case UK::Empty: return UpSet::empty();
    case UK::All: return star_up(mul_upper(t, star_up(b)));
    default: break;
    }
    if (!b.boundary().is_negative())
        return UpSet::open_above(t.boundary() * b.boundary());
    return star_up(mul_upper(t, star_up(b)));
}

// ---- grid oracles ----

bool grid_oracle_sum(const DownSet& a, const DownSet& b, const GridWindow& w) {
    require_lower(a, "grid_oracle_sum");
    require_lower(b, "grid_oracle_sum");
    const DownSet sum = minkowski_down(a, b);

    std::optional<Rational> best;
    for (const Rational& x : w.points()) {
        if (!a.contains(x))
            continue;
        for (const Rational& y : w.points()) {
            if (!b.contains(y))
                continue;
            const Rational s = x + y;
            if (!best || s > *best)
                best = s;
        }
    }
    const Rational slack = Rational(2, w.denominator());
    for (const Rational& q : w.shrunken_points()) {
        const bool witnessed = best && *best > q - slack;
        if (sum.contains(q) != witnessed)
            return false;
    }
    return true;
}

bool grid_oracle_sum(const UpSet& a, const UpSet& b, const GridWindow& w) {
    require_upper(a, "grid_oracle_sum");
    require_upper(b, "grid_oracle_sum");
    const UpSet sum = minkowski_up(a, b);

    std::optional<Rational> best;
    for (const Rational& x : w.points()) {
        if (!a.contains(x))
            continue;
        for (const Rational& y : w.points()) {
            if (!b.contains(y))
                continue;
            const Rational s = x + y;
            if (!best || s < *best)
                best = s;
        }
    }
    const Rational slack = Rational(2, w.denominator());
    for (const Rational& q : w.shrunken_points()) {
        const bool witnessed = best && *best < q + slack;
        if (sum.contains(q) != witnessed)
            return false;
    }
    return true;
}

bool grid_oracle_product(const DownSet& s, const DownSet& a, const GridWindow& w) {
    if (s.kind() != DK::OpenBelow || s.boundary().is_negative())
        throw invalid_multiplier("grid_oracle_product: inadmissible multiplier " +
                                 to_string(s));
    // Only the bounded nonnegative branch has a boundary to compare against.
    if (a.kind() != DK::OpenBelow || a.boundary().is_negative())
        throw not_a_cut("grid_oracle_product: operand " + to_string(a) +
                        " is outside the direct-definition branch");

    const DownSet product = mul_lower(s, a);

    // Sample the operand closures: for lower cuts the closure supremum of
    // the admissible products equals the supremum of the product set itself.
    std::optional<Rational> best;
    for (const Rational& x : w.points()) {
        if (x > s.boundary())
            continue;
        for (const Rational& y : w.points()) {
            if (y > a.boundary())
                continue;
            const Rational p = x * y;
            const bool admissible =
                (!x.is_negative() && !y.is_negative()) || p.is_negative();
            if (!admissible)
                continue;
            if (!best || p > *best)
                best = p;
        }
    }
    if (!best)
        return false; // nothing admissible sampled; nothing to certify

    return abs(*best - product.boundary()) <= Rational(2, w.denominator());
}

// ---- debug text ----

std::string to_string(const DownSet& a) {
    switch (a.kind()) {
    case DK::Empty: return "{}";
    case DK::OpenBelow: return "(<, " + a.boundary().str() + ")";
    case DK::ClosedBelow: return "(<=, " + a.boundary().str() + ")";
    case DK::All: return "QQ";
    }
    return "{}";
}

std::string to_string(const UpSet& b) {
    switch (b.kind()) {
    case UK::Empty: return "{}";
    case UK::OpenAbove: return "(>, " + b.boundary().str() + ")";
    case UK::ClosedAbove: return "(>=, " + b.boundary().str() + ")";
    case UK::All: return "QQ";
    }
    return "{}";
}

} // namespace dedekind
