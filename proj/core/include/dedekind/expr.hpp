#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dedekind/extreal.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree over extended reals. `-` is always the pseudodifference
/// of the active arithmetic, never a group inverse; sign change is the
/// explicit `neg` node. Scale coefficients are nonnegative by construction.
struct Expr {
    struct Literal {
        ExtReal value;
    };
    struct Add {
        ExprPtr lhs, rhs;
    };
    struct Diff {
        ExprPtr lhs, rhs;
    };
    struct Scale {
        Rational coeff; // >= 0, parser-enforced
        ExprPtr operand;
    };
    struct Neg {
        ExprPtr operand;
    };
    struct Sup {
        std::vector<ExprPtr> items;
    };
    struct Inf {
        std::vector<ExprPtr> items;
    };

    std::variant<Literal, Add, Diff, Scale, Neg, Sup, Inf> node;
};

/// Grammar:
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*        -- left factor must be a
///                                              nonnegative rational literal
///   factor   := rational | '+inf' | '-inf' | 'neg' factor | '(' expr ')'
///             | ('sup'|'inf') '(' expr (',' expr)* ')'
///   rational := ['-'] digits ['/' digits]
/// Throws parse_error with the character position.
ExprPtr parse_expr(std::string_view text);

/// Canonical text; parse_expr(print_expr(e)) rebuilds the same tree.
std::string print_expr(const Expr& e);

/// Total in both modes: Add/Diff/Scale dispatch to the mode's addition,
/// pseudodifference and scalar multiplication, Sup/Inf to the lattice folds.
ExtReal eval(const Expr& e, ArithMode mode);

} // namespace dedekind
