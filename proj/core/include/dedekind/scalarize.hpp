#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dedekind/convexfn.hpp"
#include "dedekind/extreal.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

using RatVec = std::vector<Rational>;

/// Polyhedral set in generator form: conv(points) + cone(rays). The set is
/// empty exactly when the point list is; ray vectors must be nonzero.
class PolyVal {
  public:
    PolyVal(std::size_t dim, std::vector<RatVec> points, std::vector<RatVec> rays);

    static PolyVal empty_set(std::size_t dim) { return PolyVal(dim, {}, {}); }

    std::size_t dim() const { return dim_; }
    const std::vector<RatVec>& points() const { return points_; }
    const std::vector<RatVec>& rays() const { return rays_; }
    bool is_empty() const { return points_.empty(); }

    friend bool operator==(const PolyVal&, const PolyVal&) = default;

  private:
    std::size_t dim_;
    std::vector<RatVec> points_;
    std::vector<RatVec> rays_;
};

/// inf{w.z | z in P}: +inf on the empty set, -inf when some ray descends
/// along w, otherwise the minimum over the generator points.
ExtReal support_inf(const PolyVal& p, const RatVec& w);

/// Set-valued function on a rational grid.
class SetFn {
  public:
    SetFn(std::vector<Rational> grid, std::vector<PolyVal> values);

    std::span<const Rational> grid() const { return grid_; }
    std::span<const PolyVal> values() const { return values_; }
    std::size_t dim() const;

  private:
    std::vector<Rational> grid_;
    std::vector<PolyVal> values_;
};

/// The scalar companion x -> inf{w.z | z in f(x)}; may be improper even for
/// well-behaved f, which is exactly what the extended arithmetic absorbs.
ExtFn scalarization(const SetFn& f, const RatVec& w);

/// Appends the cone's rays to every nonempty value (the generator form of
/// x -> closure(f(x) + C)).
SetFn extend_with_cone(const SetFn& f, const PolyVal& cone);

/// The two-dimensional example function: empty below 0, the vertical ray
/// cone at 0, the closed upper half-plane above 0. Grid must contain 0.
SetFn example_setfn(std::vector<Rational> grid);

struct PropernessReport {
    bool dom_nonempty;
    bool no_full_space_value;
};

/// dom check: some value is nonempty. Full-space check: a value whose rays
/// positively span the plane (exact for dim <= 2, a sufficient generator
/// criterion above that).
PropernessReport properness_report(const SetFn& f);

/// `points:[(a,b);...] rays:[(c,d);...]`
std::string to_string(const PolyVal& p);

} // namespace dedekind
