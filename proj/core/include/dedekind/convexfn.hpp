#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dedekind/extreal.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// Extended-real-valued function tabulated on a strictly increasing 1-D
/// rational grid.
class ExtFn {
  public:
    ExtFn() = default;
    ExtFn(std::vector<Rational> grid, std::vector<ExtReal> values);

    std::span<const Rational> grid() const { return grid_; }
    std::span<const ExtReal> values() const { return values_; }
    std::size_t size() const { return grid_.size(); }
    bool empty() const { return grid_.empty(); }

    std::optional<std::size_t> index_of(const Rational& x) const;
    bool has_point(const Rational& x) const { return index_of(x).has_value(); }
    /// Throws domain_mismatch if x is not a grid point.
    const ExtReal& at(const Rational& x) const;

    friend bool operator==(const ExtFn&, const ExtFn&) = default;

  private:
    std::vector<Rational> grid_;
    std::vector<ExtReal> values_;
};

struct JensenViolation {
    Rational x;
    Rational y;
    Rational alpha;
    ExtReal lhs; // f(alpha x + (1-alpha) y)
    ExtReal rhs; // alpha f(x) (+) (1-alpha) f(y)
};

struct JensenReport {
    bool holds = true;
    std::vector<JensenViolation> violations;
    std::size_t skipped = 0; // combinations whose midpoint left the grid
};

/// Jensen's inequality with the upper-cut (inf) addition, checked on every
/// grid-closed combination. This is the form equivalent to convexity of the
/// epigraph even for improper functions.
JensenReport jensen_inf_check(const ExtFn& f, std::span<const Rational> alphas);

/// Same test with the lower-cut (sup) addition; fails for some epigraph-
/// convex improper functions, which is the point of keeping both.
JensenReport jensen_sup_check(const ExtFn& f, std::span<const Rational> alphas);

struct EpiWitness {
    Rational x;
    Rational r;
    Rational y;
    Rational s;
    Rational alpha;
};

struct EpiReport {
    bool convex = true;
    std::optional<EpiWitness> witness;
    std::size_t skipped = 0;
};

/// Sampled convexity of the epigraph: for epigraph points (x, r), (y, s)
/// with r, s drawn from r_levels, the convex combination must stay in the
/// epigraph. Returns the first failing combination as witness.
EpiReport epi_convex_sampled(const ExtFn& f, std::span<const Rational> r_levels,
                             std::span<const Rational> alphas);

/// Value-wise inf-addition; grids must coincide.
ExtFn pointwise_inf_sum(const ExtFn& f1, const ExtFn& f2);

/// Infimal convolution over all grid splits x = x1 + x2. The output grid is
/// the set of pairwise sums; an output point with no admissible split gets
/// +inf (infimum over the empty set).
ExtFn inf_convolution(const ExtFn& f1, const ExtFn& f2);

/// Restriction to a subgrid; every requested point must exist.
ExtFn restrict_to(const ExtFn& f, std::span<const Rational> grid);

/// The three-piece improper function +inf (x < 0), 0 (x = 0), -inf (x > 0):
/// epigraph-convex, passes the inf-form of Jensen, fails the sup-form.
/// The grid must contain 0.
ExtFn counterexample_fn(std::vector<Rational> grid);

/// CSV with header "x,value", exact rationals, -inf/+inf tokens, LF endings.
void write_fn_csv(std::ostream& os, const ExtFn& f);
/// Throws parse_error carrying the 1-based line number on malformed input.
ExtFn read_fn_csv(std::istream& is);

} // namespace dedekind
