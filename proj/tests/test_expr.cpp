#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <string>

#include "cheb/expr.hpp"
#include "cheb/functions.hpp"
#include "test_support.hpp"

using namespace cheb;
using test_support::make_rng;
using test_support::uniform;

TEST_CASE("parse shapes and precedence") {
    const ExprAst a = parse_expr("exp(x)");
    CHECK(a.root->op == ExprOp::Call);
    CHECK(a.root->call == "exp");
    CHECK(a.root->lhs->op == ExprOp::Variable);

    const ExprAst b = parse_expr("1/(x-2)");
    CHECK(b.root->op == ExprOp::Div);
    CHECK(b.root->rhs->op == ExprOp::Sub);

    // unary minus binds looser than ^
    const ExprAst c = parse_expr("-x^2");
    CHECK(c.root->op == ExprOp::Neg);
    CHECK(c.root->lhs->op == ExprOp::Pow);

    // ^ associates to the right
    const ExprAst d = parse_expr("x^2^3");
    CHECK(d.root->op == ExprOp::Pow);
    CHECK(d.root->rhs->op == ExprOp::Pow);

    // left associativity of -
    const ExprAst e = parse_expr("1-2-x");
    CHECK(e.root->op == ExprOp::Sub);
    CHECK(e.root->lhs->op == ExprOp::Sub);

    CHECK(parse_expr("pi").root->value == doctest::Approx(3.141592653589793));
}

TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse_expr(""), parse_error);
    CHECK_THROWS_AS(parse_expr("1+"), parse_error);
    CHECK_THROWS_AS(parse_expr("foo(x)"), parse_error);
    CHECK_THROWS_AS(parse_expr("exp x"), parse_error);
    CHECK_THROWS_AS(parse_expr("(x"), parse_error);
    CHECK_THROWS_AS(parse_expr("x)"), parse_error);
    CHECK_THROWS_AS(parse_expr("x @ 2"), parse_error);
    try {
        parse_expr("1/(y-2)");
        FAIL("expected parse_error");
    } catch (const parse_error& err) {
        CHECK(err.offset == 3);
    }
    const std::string deep(70, '(');
    CHECK_THROWS_AS(parse_expr(deep + "x" + std::string(70, ')')), parse_error);
    CHECK_THROWS_AS(parse_expr(std::string(5000, '1')), parse_error);
}

TEST_CASE("eval_ast values") {
    CHECK(eval_ast(parse_expr("exp(x)"), Complex(0, 0)).real() == doctest::Approx(1.0));
    CHECK(eval_ast(parse_expr("1/(x-2)"), Complex(0, 0)).real() == doctest::Approx(-0.5));
    CHECK(eval_ast(parse_expr("(x+1)/(x^2+1)"), Complex(1, 0)).real() == doctest::Approx(1.0));
    CHECK(eval_ast(parse_expr("-x^2"), Complex(3, 0)).real() == doctest::Approx(-9.0));
    CHECK(eval_ast(parse_expr("2^-2"), Complex(0, 0)).real() == doctest::Approx(0.25));
    CHECK(eval_ast(parse_expr("x^0"), Complex(0, 0)).real() == doctest::Approx(1.0));
}

TEST_CASE("eval_ast domain errors name the subexpression") {
    CHECK_THROWS_AS(eval_ast(parse_expr("1/(x-2)"), Complex(2, 0)), evaluation_error);
    CHECK_THROWS_AS(eval_ast(parse_expr("log(x)"), Complex(0, 0)), evaluation_error);
    CHECK_THROWS_AS(eval_ast(parse_expr("x^-1"), Complex(0, 0)), evaluation_error);
    try {
        eval_ast(parse_expr("1/(x-2)"), Complex(2, 0));
        FAIL("expected evaluation_error");
    } catch (const evaluation_error& err) {
        CHECK(std::string(err.what()).find("x-2") != std::string::npos);
    }
}

TEST_CASE("branch-cut flag") {
    CHECK_FALSE(parse_expr("x^3").branch_cut_bearing);
    CHECK_FALSE(parse_expr("x^-2").branch_cut_bearing);
    CHECK(parse_expr("x^2.5").branch_cut_bearing);
    CHECK(parse_expr("x^x").branch_cut_bearing);
    CHECK(parse_expr("sqrt(x+3)").branch_cut_bearing);
    CHECK(parse_expr("log(x+3)").branch_cut_bearing);
    CHECK_FALSE(parse_expr("exp(sin(cos(x)))").branch_cut_bearing);

    CHECK_THROWS_AS(make_expr_fn(parse_expr("sqrt(x+3)"), 2.0, EntireRadius{}),
                    precondition_error);
    CHECK_NOTHROW(make_expr_fn(parse_expr("sqrt(x+3)"), 2.0, FixedRadius{1.2}));
}

namespace {

ExprPtr random_tree(std::mt19937_64& rng, int depth, bool allow_cuts) {
    auto node = [](ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); };
    std::uniform_int_distribution<int> pick(0, depth <= 1 ? 1 : 8);
    switch (pick(rng)) {
    case 0: {
        std::uniform_real_distribution<double> val(-4.0, 4.0);
        return node({ExprOp::Constant, val(rng), {}, nullptr, nullptr, 0});
    }
    case 1: return node({ExprOp::Variable, 0.0, {}, nullptr, nullptr, 0});
    case 2:
        return node({ExprOp::Add, 0.0, {}, random_tree(rng, depth - 1, allow_cuts),
                     random_tree(rng, depth - 1, allow_cuts), 0});
    case 3:
        return node({ExprOp::Sub, 0.0, {}, random_tree(rng, depth - 1, allow_cuts),
                     random_tree(rng, depth - 1, allow_cuts), 0});
    case 4:
        return node({ExprOp::Mul, 0.0, {}, random_tree(rng, depth - 1, allow_cuts),
                     random_tree(rng, depth - 1, allow_cuts), 0});
    case 5:
        return node({ExprOp::Div, 0.0, {}, random_tree(rng, depth - 1, allow_cuts),
                     random_tree(rng, depth - 1, allow_cuts), 0});
    case 6: {
        const ExprPtr child = random_tree(rng, depth - 1, allow_cuts);
        if (child->op == ExprOp::Constant)
            return node({ExprOp::Constant, -child->value, {}, nullptr, nullptr, 0});
        return node({ExprOp::Neg, 0.0, {}, child, nullptr, 0});
    }
    case 7: {
        std::uniform_int_distribution<int> expo(-3, 3);
        const ExprPtr base = random_tree(rng, depth - 1, allow_cuts);
        const ExprPtr power = node(
            {ExprOp::Constant, static_cast<double>(expo(rng)), {}, nullptr, nullptr, 0});
        return node({ExprOp::Pow, 0.0, {}, base, power, 0});
    }
    default: {
        const char* names[] = {"exp", "sin", "cos", "sqrt", "log"};
        std::uniform_int_distribution<int> f(0, allow_cuts ? 4 : 2);
        return node({ExprOp::Call, 0.0, names[f(rng)],
                     random_tree(rng, depth - 1, allow_cuts), nullptr, 0});
    }
    }
}

} // namespace

TEST_CASE("print-parse idempotence on random trees") {
    auto rng = make_rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        ExprAst ast;
        ast.root = random_tree(rng, 5, true);
        const std::string text = to_string(ast);
        const ExprAst back = parse_expr(text);
        CHECK(same_tree(ast.root, back.root));
        CHECK(to_string(back) == text);
    }
}

TEST_CASE("expression evaluation agrees with the registry") {
    struct Pair {
        const char* expr;
        AnalyticFn fn;
    };
    const Pair pairs[] = {
        {"exp(x)", registry_lookup("exp")},
        {"1/(x-2)", registry_lookup("pole", {2.0})},
        {"(x+1)/(x^2+4)", registry_lookup("rational4")},
        {"exp(2*x)+cos(2*x+3)", registry_lookup("exp2cos")},
    };
    auto rng = make_rng(17);
    for (const auto& [text, fn] : pairs) {
        const ExprAst ast = parse_expr(text);
        for (int i = 0; i < 50; ++i) {
            const Complex z(uniform(rng, -1.2, 1.2), uniform(rng, -0.8, 0.8));
            const Complex a = eval_ast(ast, z);
            const Complex b = fn.eval(z);
            CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("Schwarz symmetry for cut-free random trees") {
    auto rng = make_rng(271828);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        ExprAst ast;
        ast.root = random_tree(rng, 4, false);
        ast.source = "generated";
        const Complex z(uniform(rng, -1.0, 1.0), uniform(rng, 0.1, 0.8));
        Complex a, b;
        try {
            a = eval_ast(ast, std::conj(z));
            b = std::conj(eval_ast(ast, z));
        } catch (const evaluation_error&) {
            continue; // division by an exact zero in a degenerate tree
        }
        if (!std::isfinite(a.real()) || !std::isfinite(b.real()) ||
            std::abs(b) > 1e12)
            continue;
        ++checked;
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
    CHECK(checked > 50);
}
