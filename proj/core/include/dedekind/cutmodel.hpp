#pragma once

#include <span>
#include <string>
#include <vector>

#include "dedekind/rational.hpp"

namespace dedekind {

/// A downward-closed subset of the rationals. Four variants cover every
/// finitely representable such set: the empty set, an open half-line
/// {p | p < b}, a closed half-line {p | p <= b}, and all of Q.
///
/// The variants without a greatest element (Empty, OpenBelow, All) are
/// exactly the lower halves of Dedekind cuts; is_lower_cut() tests that.
class DownSet {
  public:
    enum class Kind { Empty, OpenBelow, ClosedBelow, All };

    DownSet() : kind_(Kind::Empty) {}

    static DownSet empty() { return DownSet(Kind::Empty, Rational()); }
    static DownSet all() { return DownSet(Kind::All, Rational()); }
    static DownSet open_below(Rational b) {
        return DownSet(Kind::OpenBelow, std::move(b));
    }
    static DownSet closed_below(Rational b) {
        return DownSet(Kind::ClosedBelow, std::move(b));
    }

    Kind kind() const { return kind_; }
    bool bounded() const {
        return kind_ == Kind::OpenBelow || kind_ == Kind::ClosedBelow;
    }
    /// Meaningful only for the bounded variants.
    const Rational& boundary() const { return boundary_; }

    bool contains(const Rational& q) const {
        switch (kind_) {
        case Kind::Empty: return false;
        case Kind::OpenBelow: return q < boundary_;
        case Kind::ClosedBelow: return q <= boundary_;
        case Kind::All: return true;
        }
        return false;
    }

    /// Member of the lower-cut family (no greatest element).
    bool is_lower_cut() const { return kind_ != Kind::ClosedBelow; }

    friend bool operator==(const DownSet&, const DownSet&) = default;

  private:
    DownSet(Kind k, Rational b) : kind_(k), boundary_(std::move(b)) {}

    Kind kind_;
    Rational boundary_; // zero for Empty/All so default == is value equality
};

/// Upward-closed counterpart of DownSet.
class UpSet {
  public:
    enum class Kind { Empty, OpenAbove, ClosedAbove, All };

    UpSet() : kind_(Kind::Empty) {}

    static UpSet empty() { return UpSet(Kind::Empty, Rational()); }
    static UpSet all() { return UpSet(Kind::All, Rational()); }
    static UpSet open_above(Rational b) {
        return UpSet(Kind::OpenAbove, std::move(b));
    }
    static UpSet closed_above(Rational b) {
        return UpSet(Kind::ClosedAbove, std::move(b));
    }

    Kind kind() const { return kind_; }
    bool bounded() const {
        return kind_ == Kind::OpenAbove || kind_ == Kind::ClosedAbove;
    }
    const Rational& boundary() const { return boundary_; }

    bool contains(const Rational& q) const {
        switch (kind_) {
        case Kind::Empty: return false;
        case Kind::OpenAbove: return q > boundary_;
        case Kind::ClosedAbove: return q >= boundary_;
        case Kind::All: return true;
        }
        return false;
    }

    /// Member of the upper-cut family (no least element).
    bool is_upper_cut() const { return kind_ != Kind::ClosedAbove; }

    friend bool operator==(const UpSet&, const UpSet&) = default;

  private:
    UpSet(Kind k, Rational b) : kind_(k), boundary_(std::move(b)) {}

    Kind kind_;
    Rational boundary_;
};

struct CutPair {
    DownSet lower;
    UpSet upper;
};

/// Which one-sidedness condition the pair is validated against: the lower
/// half must lack a greatest element (DL) or the upper half a least one (DU).
enum class CutVariant { DL, DU };

enum class CutClass { ValidOrdinary, ValidNonOrdinary, Invalid };

struct CutValidation {
    CutClass cls;
    std::string reason; // empty unless Invalid
    bool valid() const { return cls != CutClass::Invalid; }
};

/// The finite sample grid {k/denominator : |k/denominator| <= bound}.
/// Oracles compare set memberships on the half-width window |q| <= bound/2
/// so that boundary effects of window truncation cannot produce false
/// mismatches.
class GridWindow {
  public:
    GridWindow(Rational bound, long denominator);

    const Rational& bound() const { return bound_; }
    long denominator() const { return denominator_; }
    Rational step() const { return Rational(1, denominator_); }

    std::vector<Rational> points() const;
    std::vector<Rational> shrunken_points() const;

  private:
    std::vector<Rational> points_up_to(const Rational& limit) const;

    Rational bound_;
    long denominator_;
};

// ---- order and boolean algebra on the symbolic sets ----

bool subset(const DownSet& a, const DownSet& b);
bool subset(const UpSet& a, const UpSet& b);

DownSet set_union(const DownSet& a, const DownSet& b);
DownSet set_intersection(const DownSet& a, const DownSet& b);
UpSet set_union(const UpSet& a, const UpSet& b);
UpSet set_intersection(const UpSet& a, const UpSet& b);

UpSet complement(const DownSet& a);
DownSet complement(const UpSet& b);

/// Element-wise multiplication by -1; swaps the two families.
UpSet negate(const DownSet& a);
DownSet negate(const UpSet& b);

/// Interior operator on downward-closed sets: drops the greatest element
/// if there is one, otherwise the identity.
DownSet interior_I(const DownSet& a);
/// Dual interior operator: drops the least element of an upward-closed set.
UpSet interior_J(const UpSet& b);

CutValidation validate_cut(const CutPair& cut, CutVariant variant);

/// Minkowski sum on lower cuts; the empty set absorbs.
/// Throws not_a_cut unless both operands are lower cuts.
DownSet minkowski_down(const DownSet& a, const DownSet& b);
UpSet minkowski_up(const UpSet& a, const UpSet& b);

/// The cut correspondence: to_upper(A) = J(Q \ A), to_lower(B) = I(Q \ B).
/// Mutually inverse on the cut families.
UpSet to_upper(const DownSet& a);
DownSet to_lower(const UpSet& b);

/// Complete-lattice folds on finite families of cuts. For lower cuts the
/// supremum is the union and the infimum the interior of the intersection;
/// empty families give the least (resp. greatest) element.
DownSet lattice_sup_down(std::span<const DownSet> family);
DownSet lattice_inf_down(std::span<const DownSet> family);
UpSet lattice_sup_up(std::span<const UpSet> family);
UpSet lattice_inf_up(std::span<const UpSet> family);

/// Additive-inverse construction A* = I(-(Q \ A)); inverse only for
/// ordinary cuts, but defined (and useful) for the extremes as well.
DownSet star_down(const DownSet& a);
UpSet star_up(const UpSet& b);

/// Product of a nonnegative lower-cut multiplier S = open_below(s), s >= 0,
/// with any lower cut. Nonnegative operands use the sign-restricted product
/// set directly; operands below zero go through the star extension
/// S*A = (S*(A*))*. Throws invalid_multiplier for inadmissible S.
DownSet mul_lower(const DownSet& s, const DownSet& a);
UpSet mul_upper(const UpSet& t, const UpSet& b);

/// Brute-force check of the Minkowski sum against pairwise grid sums:
/// membership of every shrunken-window point must match the existence of
/// grid members with a + a' > q - 2/denominator (the slack is exact when
/// boundaries lie on the grid; see grid_oracle notes in the tests).
bool grid_oracle_sum(const DownSet& a, const DownSet& b, const GridWindow& w);
bool grid_oracle_sum(const UpSet& a, const UpSet& b, const GridWindow& w);

/// Brute-force check of mul_lower on the bounded direct-definition branch
/// (multiplier open_below(s >= 0), operand open_below(a >= 0)): the supremum
/// of admissible grid products (operand closures sampled on the window) must
/// land within 2/denominator of the computed boundary.
bool grid_oracle_product(const DownSet& s, const DownSet& a, const GridWindow& w);

std::string to_string(const DownSet& a);
std::string to_string(const UpSet& b);

} // namespace dedekind
