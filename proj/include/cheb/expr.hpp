#pragma once

#include <memory>
#include <string>

#include "cheb/functions.hpp"

namespace cheb {

enum class ExprOp { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprOp op = ExprOp::Constant;
    double value = 0.0; // Constant payload
    std::string call;   // Call target: exp, sin, cos, sqrt, log
    ExprPtr lhs, rhs;   // children; Neg and Call use lhs only
    std::size_t offset = 0;
};

// Parsed expression in the single variable x. Grammar (EBNF):
//   expr   = term { ("+" | "-") term } ;
//   term   = unary { ("*" | "/") unary } ;
//   unary  = "-" unary | power ;
//   power  = atom [ "^" unary ] ;
//   atom   = number | "x" | "pi" | "e" | ident "(" expr ")" | "(" expr ")" ;
// so ^ binds tighter than unary minus and associates to the right.
// branch_cut_bearing is set when the tree contains sqrt, log, or a power
// with a non-integer-literal exponent.
struct ExprAst {
    ExprPtr root;
    std::string source;
    bool branch_cut_bearing = false;
    int depth = 0;
};

// Parse; throws parse_error with the byte offset on failure. The source must
// be non-empty, at most 4096 bytes, and the tree depth at most 64.
ExprAst parse_expr(const std::string& src);

// Complex evaluation with principal branches for sqrt, log, and non-integer
// powers. Division by exact zero and log/power of exact zero raise
// evaluation_error carrying the offending subexpression.
Complex eval_ast(const ExprAst& ast, Complex z);

// Minimal-parentheses rendering; parse(to_string(ast)) reproduces the tree.
std::string to_string(const ExprAst& ast);

// Structural equality ignoring source offsets.
bool same_tree(const ExprPtr& a, const ExprPtr& b);

// Wrap an expression as an analytic function. Singularities cannot be
// inferred from syntax, so the caller must supply rho_max and a radius rule
// (fixed or auto only for branch-cut-bearing expressions).
AnalyticFn make_expr_fn(const ExprAst& ast, double rho_max, RadiusRule rule);

} // namespace cheb
