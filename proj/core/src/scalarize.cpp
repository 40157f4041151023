#include "dedekind/scalarize.hpp"

#include <algorithm>

#include "dedekind/error.hpp"

namespace dedekind {

namespace {

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& q) { return q.is_zero(); });
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

} // namespace

PolyVal::PolyVal(std::size_t dim, std::vector<RatVec> points,
                 std::vector<RatVec> rays)
    : dim_(dim), points_(std::move(points)), rays_(std::move(rays)) {
    for (const RatVec& p : points_)
        if (p.size() != dim_)
            throw domain_mismatch("polyhedral value: point of wrong dimension");
    for (const RatVec& r : rays_) {
        if (r.size() != dim_)
            throw domain_mismatch("polyhedral value: ray of wrong dimension");
        if (is_zero_vec(r))
            throw domain_mismatch("polyhedral value: zero ray");
    }
}

ExtReal support_inf(const PolyVal& p, const RatVec& w) {
    if (w.size() != p.dim())
        throw domain_mismatch("support_inf: direction of wrong dimension");
    if (p.is_empty())
        return ExtReal::pos_inf(); // infimum over the empty set
    for (const RatVec& r : p.rays())
        if (dot(w, r).is_negative())
            return ExtReal::neg_inf();
    Rational best = dot(w, p.points().front());
    for (const RatVec& q : p.points())
        best = std::min(best, dot(w, q));
    return ExtReal(best);
}

SetFn::SetFn(std::vector<Rational> grid, std::vector<PolyVal> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size())
        throw domain_mismatch("set-valued table: grid and value counts differ");
    for (std::size_t i = 1; i < grid_.size(); ++i)
        if (!(grid_[i - 1] < grid_[i]))
            throw domain_mismatch("set-valued table: grid must be strictly increasing");
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i].dim() != values_.front().dim())
            throw domain_mismatch("set-valued table: mixed dimensions");
}

std::size_t SetFn::dim() const {
    return values_.empty() ? 0 : values_.front().dim();
}

ExtFn scalarization(const SetFn& f, const RatVec& w) {
    std::vector<ExtReal> values;
    values.reserve(f.values().size());
    for (const PolyVal& p : f.values())
        values.push_back(support_inf(p, w));
    return ExtFn({f.grid().begin(), f.grid().end()}, std::move(values));
}

SetFn extend_with_cone(const SetFn& f, const PolyVal& cone) {
    std::vector<PolyVal> values;
    values.reserve(f.values().size());
    for (const PolyVal& p : f.values()) {
        if (p.is_empty()) {
            values.push_back(p);
            continue;
        }
        if (p.dim() != cone.dim())
            throw domain_mismatch("extend_with_cone: dimension mismatch");
        std::vector<RatVec> rays = p.rays();
        rays.insert(rays.end(), cone.rays().begin(), cone.rays().end());
        values.push_back(PolyVal(p.dim(), p.points(), std::move(rays)));
    }
    return SetFn({f.grid().begin(), f.grid().end()}, std::move(values));
}

SetFn example_setfn(std::vector<Rational> grid) {
    const Rational zero(0);
    if (std::find(grid.begin(), grid.end(), zero) == grid.end())
        throw std::invalid_argument("example_setfn: grid must contain 0");
    const RatVec origin{Rational(0), Rational(0)};
    const PolyVal vertical_cone(2, {origin}, {{Rational(0), Rational(1)}});
    const PolyVal upper_half_plane(2, {origin},
                                   {{Rational(1), Rational(0)},
                                    {Rational(-1), Rational(0)},
                                    {Rational(0), Rational(1)}});
    std::vector<PolyVal> values;
    values.reserve(grid.size());
    for (const Rational& x : grid) {
        if (x < zero)
            values.push_back(PolyVal::empty_set(2));
        else if (x == zero)
            values.push_back(vertical_cone);
        else
            values.push_back(upper_half_plane);
    }
    return SetFn(std::move(grid), std::move(values));
}

namespace {

// Does cone(rays) positively span the whole space? Exact in dimension <= 2:
// the dual cone is {0} iff every candidate direction (rays, axes and, in the
// plane, ray perpendiculars, with both signs) sees some ray descend.
bool rays_span_everything(std::size_t dim, const std::vector<RatVec>& rays) {
    if (rays.empty())
        return dim == 0;
    std::vector<RatVec> candidates;
    for (std::size_t i = 0; i < dim; ++i) {
        RatVec axis(dim, Rational(0));
        axis[i] = Rational(1);
        candidates.push_back(axis);
    }
    candidates.insert(candidates.end(), rays.begin(), rays.end());
    if (dim == 2)
        for (const RatVec& r : rays)
            candidates.push_back({-r[1], r[0]});
    for (const RatVec& c : candidates) {
        for (int sign : {1, -1}) {
            RatVec w(dim);
            for (std::size_t i = 0; i < dim; ++i)
                w[i] = sign == 1 ? c[i] : -c[i];
            if (is_zero_vec(w))
                continue;
            const bool in_dual =
                std::none_of(rays.begin(), rays.end(), [&](const RatVec& r) {
                    return dot(w, r).is_negative();
                });
            if (in_dual)
                return false; // nonzero direction bounds the cone
        }
    }
    return true;
}

} // namespace

PropernessReport properness_report(const SetFn& f) {
    bool dom_nonempty = false;
    bool no_full_space = true;
    for (const PolyVal& p : f.values()) {
        if (!p.is_empty())
            dom_nonempty = true;
        if (!p.is_empty() && rays_span_everything(p.dim(), p.rays()))
            no_full_space = false;
    }
    return {dom_nonempty, no_full_space};
}

std::string to_string(const PolyVal& p) {
    const auto vec = [](const RatVec& v) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                out += ",";
            out += v[i].str();
        }
        return out + ")";
    };
    const auto list = [&](const std::vector<RatVec>& vs) {
        std::string out = "[";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i)
                out += ";";
            out += vec(vs[i]);
        }
        return out + "]";
    };
    return "points:" + list(p.points()) + " rays:" + list(p.rays());
}

} // namespace dedekind
