#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>

#include "dedekind/cutmodel.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// Selects which of the two cut-induced arithmetics an operation uses.
/// SupAdd is the lower-cut arithmetic (-inf absorbs), InfAdd the upper-cut
/// one (+inf absorbs). Order, negation and lattice folds are shared.
enum class ArithMode { SupAdd, InfAdd };

/// Extended real number: -inf, a rational, or +inf, totally ordered.
class ExtReal {
  public:
    enum class Kind { NegInf, Fin, PosInf };

    ExtReal() : kind_(Kind::Fin) {}
    ExtReal(Rational q) : kind_(Kind::Fin), value_(std::move(q)) {}
    ExtReal(int n) : kind_(Kind::Fin), value_(n) {}

    static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }
    static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Fin; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    /// Meaningful only for finite values.
    const Rational& value() const { return value_; }

    friend bool operator==(const ExtReal&, const ExtReal&) = default;
    friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
        const auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : k == Kind::Fin ? 1 : 2; };
        if (rank(a.kind_) != rank(b.kind_))
            return rank(a.kind_) <=> rank(b.kind_);
        if (a.kind_ == Kind::Fin)
            return a.value_ <=> b.value_;
        return std::strong_ordering::equal;
    }

  private:
    explicit ExtReal(Kind k) : kind_(k) {}

    Kind kind_;
    Rational value_; // zero for the infinities so default == is value equality
};

/// Lower-cut addition: -inf absorbs, (+inf) + (-inf) = -inf.
ExtReal sup_add(const ExtReal& a, const ExtReal& b);
/// Upper-cut addition: +inf absorbs, (+inf) + (-inf) = +inf.
ExtReal inf_add(const ExtReal& a, const ExtReal& b);
ExtReal mode_add(ArithMode mode, const ExtReal& a, const ExtReal& b);

/// Lower pseudodifference, the residual sup{u | sup_add(c, u) <= a}.
/// Total; in particular (-inf) - (-inf) = +inf and (+inf) - (+inf) = +inf.
ExtReal sup_diff(const ExtReal& a, const ExtReal& c);
/// Upper pseudodifference, the residual inf{x | b <= inf_add(d, x)}.
/// Total; in particular (+inf) - (+inf) = -inf and (-inf) - (-inf) = -inf.
ExtReal inf_diff(const ExtReal& b, const ExtReal& d);
ExtReal mode_diff(ArithMode mode, const ExtReal& a, const ExtReal& b);

/// Reverse-order isomorphism between the two arithmetics; an involution.
ExtReal neg(const ExtReal& x);

/// Multiplication by a nonnegative rational scalar. s = 0 flattens
/// everything, including the infinities, to 0; s > 0 preserves sign.
/// Throws invalid_multiplier for s < 0.
ExtReal scalar_mul(ArithMode mode, const Rational& s, const ExtReal& x);

/// Lattice folds; empty input yields the least (-inf) resp. greatest (+inf)
/// element.
ExtReal fold_sup(std::span<const ExtReal> xs);
ExtReal fold_inf(std::span<const ExtReal> xs);

/// Order-preserving bijections with the cut model. Lower cuts: {} <-> -inf,
/// open_below(q) <-> q, QQ <-> +inf. Upper cuts identify the other way
/// around: QQ <-> -inf, open_above(q) <-> q, {} <-> +inf.
ExtReal from_downset(const DownSet& a);
DownSet to_downset(const ExtReal& x);
ExtReal from_upset(const UpSet& b);
UpSet to_upset(const ExtReal& x);

/// Recomputes mode_add(a, b) using only finite probes: the sup over finite
/// minorants of the operands (SupAdd) or the inf over finite majorants
/// (InfAdd). An operand without proper probes makes the fold empty; a probe
/// sequence still growing at the given depth classifies as the matching
/// infinity. Agrees with mode_add everywhere.
ExtReal characterize_add_by_proper(ArithMode mode, const ExtReal& a,
                                   const ExtReal& b, int probe_depth);

/// Canonical text: "-inf", "+inf", or the rational literal.
std::string to_string(const ExtReal& x);
ExtReal parse_extreal(std::string_view text);

} // namespace dedekind
