#include "dedekind/convexfn.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "dedekind/error.hpp"

namespace dedekind {

ExtFn::ExtFn(std::vector<Rational> grid, std::vector<ExtReal> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size())
        throw domain_mismatch("function table: grid and value counts differ");
    for (std::size_t i = 1; i < grid_.size(); ++i)
        if (!(grid_[i - 1] < grid_[i]))
            throw domain_mismatch("function table: grid must be strictly increasing");
}

std::optional<std::size_t> ExtFn::index_of(const Rational& x) const {
    const auto it = std::lower_bound(grid_.begin(), grid_.end(), x);
    if (it == grid_.end() || !(*it == x))
        return std::nullopt;
    return static_cast<std::size_t>(it - grid_.begin());
}

const ExtReal& ExtFn::at(const Rational& x) const {
    const auto idx = index_of(x);
    if (!idx)
        throw domain_mismatch("function table: " + x.str() + " is not a grid point");
    return values_[*idx];
}

namespace {

void require_usable(const ExtFn& f, std::span<const Rational> alphas) {
    if (f.empty())
        throw std::invalid_argument("convexity check on an empty domain");
    for (const Rational& a : alphas)
        if (!(a > Rational(0) && a < Rational(1)))
            throw std::invalid_argument("alpha must lie strictly between 0 and 1");
}

JensenReport jensen_check(const ExtFn& f, std::span<const Rational> alphas,
                          ArithMode mode) {
    require_usable(f, alphas);
    JensenReport report;
    for (const Rational& x : f.grid()) {
        for (const Rational& y : f.grid()) {
            for (const Rational& alpha : alphas) {
                const Rational z = alpha * x + (Rational(1) - alpha) * y;
                const auto zi = f.index_of(z);
                if (!zi) {
                    ++report.skipped;
                    continue;
                }
                const ExtReal lhs = f.values()[*zi];
                const ExtReal rhs =
                    mode_add(mode, scalar_mul(mode, alpha, f.at(x)),
                             scalar_mul(mode, Rational(1) - alpha, f.at(y)));
                if (!(lhs <= rhs))
                    report.violations.push_back({x, y, alpha, lhs, rhs});
            }
        }
    }
    report.holds = report.violations.empty();
    return report;
}

} // namespace

JensenReport jensen_inf_check(const ExtFn& f, std::span<const Rational> alphas) {
    return jensen_check(f, alphas, ArithMode::InfAdd);
}

JensenReport jensen_sup_check(const ExtFn& f, std::span<const Rational> alphas) {
    return jensen_check(f, alphas, ArithMode::SupAdd);
}

EpiReport epi_convex_sampled(const ExtFn& f, std::span<const Rational> r_levels,
                             std::span<const Rational> alphas) {
    require_usable(f, alphas);

    // sampled epigraph: grid points paired with the admissible levels
    std::vector<std::pair<Rational, Rational>> epi;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (const Rational& r : r_levels)
            if (f.values()[i] <= ExtReal(r))
                epi.emplace_back(f.grid()[i], r);

    EpiReport report;
    for (const auto& [x, r] : epi) {
        for (const auto& [y, s] : epi) {
            for (const Rational& alpha : alphas) {
                const Rational one_minus = Rational(1) - alpha;
                const Rational z = alpha * x + one_minus * y;
                const auto zi = f.index_of(z);
                if (!zi) {
                    ++report.skipped;
                    continue;
                }
                const Rational t = alpha * r + one_minus * s;
                if (!(f.values()[*zi] <= ExtReal(t))) {
                    report.convex = false;
                    report.witness = EpiWitness{x, r, y, s, alpha};
                    return report;
                }
            }
        }
    }
    return report;
}

ExtFn pointwise_inf_sum(const ExtFn& f1, const ExtFn& f2) {
    if (!std::ranges::equal(f1.grid(), f2.grid()))
        throw domain_mismatch("pointwise sum: grids differ");
    std::vector<ExtReal> values;
    values.reserve(f1.size());
    for (std::size_t i = 0; i < f1.size(); ++i)
        values.push_back(inf_add(f1.values()[i], f2.values()[i]));
    return ExtFn({f1.grid().begin(), f1.grid().end()}, std::move(values));
}

ExtFn inf_convolution(const ExtFn& f1, const ExtFn& f2) {
    // inf over the empty split set is +inf, so start every sum point there
    std::map<Rational, ExtReal> out;
    for (const Rational& x1 : f1.grid())
        for (const Rational& x2 : f2.grid())
            out.emplace(x1 + x2, ExtReal::pos_inf());
    for (const Rational& x1 : f1.grid()) {
        for (const Rational& x2 : f2.grid()) {
            const ExtReal term = inf_add(f1.at(x1), f2.at(x2));
            auto& slot = out.at(x1 + x2);
            slot = std::min(slot, term);
        }
    }
    std::vector<Rational> grid;
    std::vector<ExtReal> values;
    grid.reserve(out.size());
    values.reserve(out.size());
    for (auto& [x, v] : out) {
        grid.push_back(x);
        values.push_back(v);
    }
    return ExtFn(std::move(grid), std::move(values));
}

ExtFn restrict_to(const ExtFn& f, std::span<const Rational> grid) {
    std::vector<ExtReal> values;
    values.reserve(grid.size());
    for (const Rational& x : grid)
        values.push_back(f.at(x));
    return ExtFn({grid.begin(), grid.end()}, std::move(values));
}

ExtFn counterexample_fn(std::vector<Rational> grid) {
    const Rational zero(0);
    if (std::find(grid.begin(), grid.end(), zero) == grid.end())
        throw std::invalid_argument("counterexample_fn: grid must contain 0");
    std::vector<ExtReal> values;
    values.reserve(grid.size());
    for (const Rational& x : grid) {
        if (x < zero)
            values.push_back(ExtReal::pos_inf());
        else if (x == zero)
            values.push_back(ExtReal(Rational(0)));
        else
            values.push_back(ExtReal::neg_inf());
    }
    return ExtFn(std::move(grid), std::move(values));
}

void write_fn_csv(std::ostream& os, const ExtFn& f) {
    os << "x,value\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        os << f.grid()[i].str() << ',' << to_string(f.values()[i]) << '\n';
}

ExtFn read_fn_csv(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line))
        throw parse_error("empty input, expected 'x,value' header", 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "x,value")
        throw parse_error("expected 'x,value' header, got '" + line + "'", lineno);

    std::vector<Rational> grid;
    std::vector<ExtReal> values;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw parse_error("expected 'x,value' row", lineno);
        try {
            grid.push_back(Rational::parse(line.substr(0, comma)));
            values.push_back(parse_extreal(line.substr(comma + 1)));
        } catch (const invalid_rational& e) {
            throw parse_error(e.what(), lineno);
        }
        if (grid.size() > 1 && !(grid[grid.size() - 2] < grid.back()))
            throw parse_error("grid points must be strictly increasing", lineno);
    }
    return ExtFn(std::move(grid), std::move(values));
}

} // namespace dedekind
