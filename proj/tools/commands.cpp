#include "commands.hpp"

#include <array>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "dedekind/convexfn.hpp"
#include "dedekind/cutmodel.hpp"
#include "dedekind/error.hpp"
#include "dedekind/expr.hpp"
#include "dedekind/extreal.hpp"
#include "dedekind/scalarize.hpp"

namespace dedekind::cli {

namespace {

// ---- tables ----

std::string infty_token(const ExtReal& x) {
    return "(" + to_string(x) + ")";
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

std::string table_line(const std::string& label, const std::string& left,
                       const std::string& right) {
    return pad(label, 14) + pad(left, 32) + right + "\n";
}

} // namespace

std::string tables_text() {
    const ExtReal pinf = ExtReal::pos_inf();
    const ExtReal ninf = ExtReal::neg_inf();

    const auto infty_row = [&](const char* op, const ExtReal& a, const ExtReal& b,
                               ExtReal (*lop)(const ExtReal&, const ExtReal&),
                               ExtReal (*uop)(const ExtReal&, const ExtReal&)) {
        const auto side = [&](ExtReal (*f)(const ExtReal&, const ExtReal&)) {
            return infty_token(a) + " " + op + " " + infty_token(b) + " = " +
                   to_string(f(a, b));
        };
        return std::pair{side(lop), side(uop)};
    };
    const auto mixed_row = [&](const char* op, const ExtReal& a, const ExtReal& b,
                               ExtReal (*lop)(const ExtReal&, const ExtReal&),
                               ExtReal (*uop)(const ExtReal&, const ExtReal&)) {
        const auto side = [&](ExtReal (*f)(const ExtReal&, const ExtReal&)) {
            return to_string(a) + " " + op + " " + to_string(b) + " = " +
                   to_string(f(a, b));
        };
        return std::pair{side(lop), side(uop)};
    };

    std::string out;
    out += table_line("", "sup (L-case)", "inf (U-case)");
    auto [ls, us] = infty_row("+", pinf, ninf, sup_add, inf_add);
    out += table_line("sum:", ls, us);
    const std::array<std::pair<ExtReal, ExtReal>, 4> diff_args{
        {{pinf, pinf}, {pinf, ninf}, {ninf, pinf}, {ninf, ninf}}};
    bool first = true;
    for (const auto& [a, b] : diff_args) {
        auto [l, u] = infty_row("-", a, b, sup_diff, inf_diff);
        out += table_line(first ? "differences:" : "", l, u);
        first = false;
    }
    const ExtReal five(Rational(5));
    first = true;
    for (const auto& [op, a, b] :
         std::vector<std::tuple<const char*, ExtReal, ExtReal>>{
             {"+", five, pinf}, {"-", five, pinf}, {"-", five, ninf}}) {
        auto [l, u] = op[0] == '+' ? mixed_row(op, a, b, sup_add, inf_add)
                                   : mixed_row(op, a, b, sup_diff, inf_diff);
        out += table_line(first ? "mixed:" : "", l, u);
        first = false;
    }
    return out;
}

// ---- oracle law suite ----

namespace {

struct Rng {
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t raw() { return engine(); }
    long range(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::mt19937_64 engine;
};

struct LawContext {
    Rng rng;
    Rational bound;
    long denom;
    long max_step; // largest k with |k/denom| <= bound/2
    bool inject_fault;
    std::uint64_t digest = 1469598103934665603ull; // FNV-1a offset basis

    long range(long lo, long hi) { return rng.range(lo, hi); }

    void absorb(const std::string& s) {
        for (unsigned char c : s) {
            digest ^= c;
            digest *= 1099511628211ull;
        }
    }

    Rational grid_boundary() {
        const Rational q(range(-max_step, max_step), denom);
        absorb(q.str());
        return q;
    }
    Rational nonneg_grid_boundary() {
        const Rational q(range(0, max_step), denom);
        absorb(q.str());
        return q;
    }
    DownSet lower_cut() {
        switch (range(0, 5)) {
        case 0: return DownSet::empty();
        case 1: return DownSet::all();
        default: return DownSet::open_below(grid_boundary());
        }
    }
    UpSet upper_cut() {
        switch (range(0, 5)) {
        case 0: return UpSet::empty();
        case 1: return UpSet::all();
        default: return UpSet::open_above(grid_boundary());
        }
    }
    DownSet down_any() { // all four variants
        switch (range(0, 3)) {
        case 0: return DownSet::empty();
        case 1: return DownSet::all();
        case 2: return DownSet::open_below(grid_boundary());
        default: return DownSet::closed_below(grid_boundary());
        }
    }
    UpSet up_any() {
        switch (range(0, 3)) {
        case 0: return UpSet::empty();
        case 1: return UpSet::all();
        case 2: return UpSet::open_above(grid_boundary());
        default: return UpSet::closed_above(grid_boundary());
        }
    }
    Rational rational() {
        const Rational q(range(-60, 60), range(1, 12));
        absorb(q.str());
        return q;
    }
    ExtReal ext_real() {
        switch (range(0, 5)) {
        case 0: return ExtReal::neg_inf();
        case 1: return ExtReal::pos_inf();
        default: return ExtReal(rational());
        }
    }
};

using LawBody = std::function<std::optional<std::string>(LawContext&)>;

struct Law {
    std::string name;
    LawBody check; // one instance; witness text on failure
};

std::optional<std::string> fail_text(const std::string& text) { return text; }

std::vector<Law> law_suite() {
    std::vector<Law> laws;

    laws.push_back({"minkowski-grid-sum-lower", [](LawContext& c) -> std::optional<std::string> {
        const DownSet a = c.lower_cut(), b = c.lower_cut();
        if (!grid_oracle_sum(a, b, GridWindow(c.bound, c.denom)))
            return fail_text("grid mismatch for " + to_string(a) + " + " + to_string(b));
        return std::nullopt;
    }});

    laws.push_back({"minkowski-grid-sum-upper", [](LawContext& c) -> std::optional<std::string> {
        const UpSet a = c.upper_cut(), b = c.upper_cut();
        if (!grid_oracle_sum(a, b, GridWindow(c.bound, c.denom)))
            return fail_text("grid mismatch for " + to_string(a) + " + " + to_string(b));
        return std::nullopt;
    }});

    laws.push_back({"product-grid-oracle", [](LawContext& c) -> std::optional<std::string> {
        const DownSet s = DownSet::open_below(c.nonneg_grid_boundary());
        DownSet a = DownSet::open_below(c.nonneg_grid_boundary());
        if (s.boundary().is_zero() && a.boundary().is_zero())
            a = DownSet::open_below(Rational(1, c.denom)); // no admissible products at (0, 0)
        if (!grid_oracle_product(s, a, GridWindow(c.bound * Rational(2), c.denom)))
            return fail_text("product mismatch for " + to_string(s) + " * " + to_string(a));
        return std::nullopt;
    }});

    laws.push_back({"interior-operator-laws", [](LawContext& c) -> std::optional<std::string> {
        const DownSet s = c.down_any(), t = c.down_any();
        const auto describe = [&] { return to_string(s) + ", " + to_string(t); };
        if (interior_I(DownSet::all()) != DownSet::all())
            return fail_text("I(QQ) != QQ");
        if (!subset(interior_I(s), s))
            return fail_text("I not intensive at " + describe());
        if (interior_I(interior_I(s)) != interior_I(s))
            return fail_text("I not idempotent at " + describe());
        if (interior_I(set_intersection(s, t)) !=
            set_intersection(interior_I(s), interior_I(t)))
            return fail_text("I does not preserve intersection at " + describe());
        const UpSet u = c.up_any(), v = c.up_any();
        if (!subset(interior_J(u), u))
            return fail_text("J not intensive at " + to_string(u));
        if (interior_J(set_intersection(u, v)) !=
            set_intersection(interior_J(u), interior_J(v)))
            return fail_text("J does not preserve intersection at " + to_string(u) +
                             ", " + to_string(v));
        return std::nullopt;
    }});

    laws.push_back({"cut-correspondence-roundtrip", [](LawContext& c) -> std::optional<std::string> {
        const DownSet a = c.lower_cut();
        if (to_lower(to_upper(a)) != a)
            return fail_text("lower round trip broke at " + to_string(a));
        const UpSet b = c.upper_cut();
        if (to_upper(to_lower(b)) != b)
            return fail_text("upper round trip broke at " + to_string(b));
        return std::nullopt;
    }});

    laws.push_back({"minkowski-monoid-lower", [](LawContext& c) -> std::optional<std::string> {
        const DownSet a = c.lower_cut(), b = c.lower_cut(), d = c.lower_cut();
        const auto describe = [&] {
            return to_string(a) + ", " + to_string(b) + ", " + to_string(d);
        };
        if (minkowski_down(minkowski_down(a, b), d) !=
            minkowski_down(a, minkowski_down(b, d)))
            return fail_text("associativity broke at " + describe());
        if (minkowski_down(a, b) != minkowski_down(b, a))
            return fail_text("commutativity broke at " + describe());
        const DownSet claimed_neutral =
            DownSet::open_below(Rational(c.inject_fault ? 1 : 0));
        if (minkowski_down(a, claimed_neutral) != a)
            return fail_text("neutral element broke at " + to_string(a) +
                             " with claimed neutral " + to_string(claimed_neutral));
        if (minkowski_down(a, DownSet::empty()) != DownSet::empty())
            return fail_text("absorbing element broke at " + to_string(a));
        return std::nullopt;
    }});

    laws.push_back({"order-compatibility", [](LawContext& c) -> std::optional<std::string> {
        const DownSet a = c.lower_cut();
        const DownSet bigger = set_union(a, c.lower_cut());
        const DownSet d = c.lower_cut();
        if (!subset(minkowski_down(a, d), minkowski_down(bigger, d)))
            return fail_text("monotonicity broke at " + to_string(a) + " <= " +
                             to_string(bigger) + ", + " + to_string(d));
        return std::nullopt;
    }});

    laws.push_back({"negation-isomorphism", [](LawContext& c) -> std::optional<std::string> {
        const DownSet a = c.lower_cut(), b = c.lower_cut();
        if (negate(minkowski_down(a, b)) != minkowski_up(negate(a), negate(b)))
            return fail_text("additive homomorphism broke at " + to_string(a) +
                             ", " + to_string(b));
        // inclusion is preserved element-wise; the order reverses because the
        // upper-family order is reversed inclusion
        if (subset(a, b) != subset(negate(a), negate(b)))
            return fail_text("order reversal broke at " + to_string(a) + ", " +
                             to_string(b));
        return std::nullopt;
    }});

    laws.push_back({"extreal-monoid-both-modes", [](LawContext& c) -> std::optional<std::string> {
        const ExtReal a = c.ext_real(), b = c.ext_real(), d = c.ext_real();
        const auto describe = [&] {
            return to_string(a) + ", " + to_string(b) + ", " + to_string(d);
        };
        for (ArithMode mode : {ArithMode::SupAdd, ArithMode::InfAdd}) {
            if (mode_add(mode, mode_add(mode, a, b), d) !=
                mode_add(mode, a, mode_add(mode, b, d)))
                return fail_text("associativity broke at " + describe());
            if (mode_add(mode, a, b) != mode_add(mode, b, a))
                return fail_text("commutativity broke at " + describe());
            if (mode_add(mode, a, ExtReal(Rational(0))) != a)
                return fail_text("neutral broke at " + to_string(a));
        }
        if (sup_add(ExtReal::neg_inf(), a) != ExtReal::neg_inf())
            return fail_text("-inf failed to absorb " + to_string(a));
        if (inf_add(ExtReal::pos_inf(), a) != ExtReal::pos_inf())
            return fail_text("+inf failed to absorb " + to_string(a));
        return std::nullopt;
    }});

    laws.push_back({"cut-addition-homomorphism", [](LawContext& c) -> std::optional<std::string> {
        const ExtReal a = c.ext_real(), b = c.ext_real();
        if (to_downset(sup_add(a, b)) !=
            minkowski_down(to_downset(a), to_downset(b)))
            return fail_text("lower identification broke at " + to_string(a) +
                             ", " + to_string(b));
        if (to_upset(inf_add(a, b)) != minkowski_up(to_upset(a), to_upset(b)))
            return fail_text("upper identification broke at " + to_string(a) +
                             ", " + to_string(b));
        return std::nullopt;
    }});

    laws.push_back({"residuation-adjunction", [](LawContext& c) -> std::optional<std::string> {
        const ExtReal a = c.ext_real(), d = c.ext_real();
        std::vector<ExtReal> probes{ExtReal::neg_inf(), ExtReal::pos_inf(),
                                    ExtReal(Rational(0)), c.ext_real(), c.ext_real()};
        if (a.finite() && d.finite())
            probes.push_back(ExtReal(a.value() - d.value()));
        for (const ExtReal& u : probes) {
            if ((sup_add(d, u) <= a) != (u <= sup_diff(a, d)))
                return fail_text("sup adjunction broke at a=" + to_string(a) +
                                 " c=" + to_string(d) + " u=" + to_string(u));
            if ((inf_diff(a, d) <= u) != (a <= inf_add(d, u)))
                return fail_text("inf adjunction broke at b=" + to_string(a) +
                                 " d=" + to_string(d) + " x=" + to_string(u));
        }
        return std::nullopt;
    }});

    laws.push_back({"conlinear-scaling-laws", [](LawContext& c) -> std::optional<std::string> {
        const Rational s = abs(c.rational()), t = abs(c.rational());
        const ExtReal a = c.ext_real(), b = c.ext_real();
        for (ArithMode mode : {ArithMode::SupAdd, ArithMode::InfAdd}) {
            if (scalar_mul(mode, s, mode_add(mode, a, b)) !=
                mode_add(mode, scalar_mul(mode, s, a), scalar_mul(mode, s, b)))
                return fail_text("distributivity broke at s=" + s.str() + " a=" +
                                 to_string(a) + " b=" + to_string(b));
            if (scalar_mul(mode, s * t, a) !=
                scalar_mul(mode, s, scalar_mul(mode, t, a)))
                return fail_text("scaling associativity broke at s=" + s.str() +
                                 " t=" + t.str() + " a=" + to_string(a));
            if (scalar_mul(mode, Rational(1), a) != a)
                return fail_text("unit scaling broke at " + to_string(a));
            if (scalar_mul(mode, Rational(0), a) != ExtReal(Rational(0)))
                return fail_text("zero scaling broke at " + to_string(a));
        }
        return std::nullopt;
    }});

    return laws;
}

} // namespace

OracleOutcome run_oracle(const OracleOptions& options) {
    std::ostringstream report;
    const Rational half_bound = options.bound * Rational(1, 2);
    const BigInt max_step_big = (half_bound.num() * options.denom) / half_bound.den();
    LawContext ctx{Rng(options.seed), options.bound, options.denom,
                   static_cast<long>(max_step_big), options.inject_fault};

    report << "oracle run: trials=" << options.trials << " seed=" << options.seed
           << " bound=" << options.bound << " denom=" << options.denom << "\n";
    bool ok = true;
    for (const Law& law : law_suite()) {
        unsigned passed = 0;
        std::optional<std::string> witness;
        for (unsigned i = 0; i < options.trials; ++i) {
            witness = law.check(ctx);
            if (witness) {
                ok = false;
                break;
            }
            ++passed;
        }
        if (witness)
            report << "FAIL " << law.name << " after " << passed
                   << " instance(s): " << *witness << "\n";
        else
            report << "pass " << law.name << " (" << passed << " instances)\n";
    }
    report << (ok ? "all laws hold\n" : "law violations found\n");
    report << "instance digest: " << std::hex << std::setw(16) << std::setfill('0')
           << ctx.digest << "\n";
    return {ok, report.str()};
}

// ---- command plumbing ----

namespace {

std::vector<Rational> parse_grid_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw parse_error("grid spec must be lo:hi:step", 0);
    const Rational lo = Rational::parse(parts[0]);
    const Rational hi = Rational::parse(parts[1]);
    const Rational step = Rational::parse(parts[2]);
    if (!step.is_positive())
        throw parse_error("grid step must be positive", 0);
    std::vector<Rational> grid;
    for (Rational x = lo; x <= hi; x += step)
        grid.push_back(x);
    if (grid.empty())
        throw parse_error("grid spec produces no points", 0);
    return grid;
}

RatVec parse_direction(const std::string& spec) {
    RatVec w;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            w.push_back(Rational::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    w.push_back(Rational::parse(cur));
    return w;
}

ExtFn load_fn_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open '" + path + "'", 0);
    return read_fn_csv(in);
}

void store_fn_csv(const std::string& path, const ExtFn& f) {
    std::ofstream out(path, std::ios::binary); // LF endings everywhere
    if (!out)
        throw parse_error("cannot open '" + path + "' for writing", 0);
    write_fn_csv(out, f);
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"exact extended-real arithmetic built from Dedekind cuts"};
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    std::string mode_name;
    std::string expr_text;
    eval_cmd->add_option("--mode", mode_name, "arithmetic mode: sup or inf")
        ->required()
        ->check(CLI::IsMember({"sup", "inf"}));
    eval_cmd->add_option("expr", expr_text, "expression to evaluate")->required();

    auto* tables_cmd =
        app.add_subcommand("tables", "print the computed sum/difference tables");

    auto* oracle_cmd =
        app.add_subcommand("oracle", "run randomized law and grid-oracle checks");
    OracleOptions oracle_options;
    std::string bound_text = "4";
    oracle_cmd->add_option("--trials", oracle_options.trials, "instances per law");
    oracle_cmd->add_option("--seed", oracle_options.seed, "random seed");
    oracle_cmd->add_option("--bound", bound_text, "grid window bound (rational)");
    oracle_cmd->add_option("--denom", oracle_options.denom, "grid denominator");
    oracle_cmd->add_flag("--inject-fault", oracle_options.inject_fault)
        ->group(""); // test hook, hidden from help

    auto* infconv_cmd =
        app.add_subcommand("infconv", "infimal convolution of two CSV tables");
    std::string f1_path, f2_path, out_path;
    infconv_cmd->add_option("--f1", f1_path, "first function CSV")->required();
    infconv_cmd->add_option("--f2", f2_path, "second function CSV")->required();
    infconv_cmd->add_option("--out", out_path, "output CSV")->required();

    auto* scalarize_cmd = app.add_subcommand(
        "scalarize", "scalarize the plane-valued example along a direction");
    std::string w_text, grid_text = "-1:1:1", scalarize_out;
    scalarize_cmd->add_option("--w", w_text, "direction a,b")->required();
    scalarize_cmd->add_option("--grid", grid_text, "grid lo:hi:step");
    scalarize_cmd->add_option("--out", scalarize_out, "output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            const ArithMode mode =
                mode_name == "sup" ? ArithMode::SupAdd : ArithMode::InfAdd;
            const ExprPtr e = parse_expr(expr_text);
            std::cout << to_string(eval(*e, mode)) << "\n";
            return 0;
        }
        if (tables_cmd->parsed()) {
            std::cout << tables_text();
            return 0;
        }
        if (oracle_cmd->parsed()) {
            oracle_options.bound = Rational::parse(bound_text);
            if (!oracle_options.bound.is_positive() || oracle_options.denom < 1) {
                std::cerr << "oracle: window bound must be positive and the "
                             "denominator at least 1\n";
                return 2;
            }
            const OracleOutcome outcome = run_oracle(oracle_options);
            std::cout << outcome.report;
            return outcome.ok ? 0 : 1;
        }
        if (infconv_cmd->parsed()) {
            const ExtFn f1 = load_fn_csv(f1_path);
            const ExtFn f2 = load_fn_csv(f2_path);
            store_fn_csv(out_path, inf_convolution(f1, f2));
            return 0;
        }
        if (scalarize_cmd->parsed()) {
            const RatVec w = parse_direction(w_text);
            const SetFn f = example_setfn(parse_grid_spec(grid_text));
            store_fn_csv(scalarize_out, scalarization(f, w));
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "error";
        if (e.position)
            std::cerr << " (line " << e.position << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace dedekind::cli
