#include "cheb/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "cheb/errors.hpp"
#include "cheb/format.hpp"

namespace cheb {

namespace {

constexpr int kMaxParseDepth = 256;
constexpr int kMaxTreeDepth = 64;

ExprPtr make_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

bool is_integer_literal(const ExprPtr& node) {
    return node->op == ExprOp::Constant && std::isfinite(node->value) &&
           node->value == std::rint(node->value) && std::abs(node->value) <= 1e9;
}

bool known_function(const std::string& name) {
    return name == "exp" || name == "sin" || name == "cos" || name == "sqrt" || name == "log";
}

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw parse_error(msg + " at offset " + std::to_string(at), at);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    bool match(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    void guard(int depth) const {
        if (depth > kMaxParseDepth)
            fail("expression nests too deeply", pos);
    }

    ExprPtr parse_sum(int depth) {
        guard(depth);
        ExprPtr node = parse_term(depth + 1);
        for (;;) {
            skip_ws();
            const std::size_t at = pos;
            if (match('+'))
                node = make_node({ExprOp::Add, 0.0, {}, node, parse_term(depth + 1), at});
            else if (match('-'))
                node = make_node({ExprOp::Sub, 0.0, {}, node, parse_term(depth + 1), at});
            else
                return node;
        }
    }

    ExprPtr parse_term(int depth) {
        guard(depth);
        ExprPtr node = parse_unary(depth + 1);
        for (;;) {
            skip_ws();
            const std::size_t at = pos;
            if (match('*'))
                node = make_node({ExprOp::Mul, 0.0, {}, node, parse_unary(depth + 1), at});
            else if (match('/'))
                node = make_node({ExprOp::Div, 0.0, {}, node, parse_unary(depth + 1), at});
            else
                return node;
        }
    }

    ExprPtr parse_unary(int depth) {
        guard(depth);
        skip_ws();
        const std::size_t at = pos;
        if (match('-')) {
            ExprPtr child = parse_unary(depth + 1);
            if (child->op == ExprOp::Constant) // fold so -3 is an integer literal
                return make_node({ExprOp::Constant, -child->value, {}, nullptr, nullptr, at});
            return make_node({ExprOp::Neg, 0.0, {}, child, nullptr, at});
        }
        return parse_power(depth + 1);
    }

    ExprPtr parse_power(int depth) {
        guard(depth);
        ExprPtr base = parse_atom(depth + 1);
        skip_ws();
        const std::size_t at = pos;
        if (match('^')) {
            ExprPtr exponent = parse_unary(depth + 1); // right-associative
            return make_node({ExprOp::Pow, 0.0, {}, base, exponent, at});
        }
        return base;
    }

    ExprPtr parse_atom(int depth) {
        guard(depth);
        skip_ws();
        if (pos >= src.size())
            fail("unexpected end of expression", pos);
        const std::size_t at = pos;
        const char c = src[pos];

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src.c_str() + pos;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin)
                fail("malformed number", at);
            pos += static_cast<std::size_t>(end - begin);
            return make_node({ExprOp::Constant, v, {}, nullptr, nullptr, at});
        }
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_sum(depth + 1);
            if (!match(')'))
                fail("expected ')'", pos);
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos;
            while (end < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
                ++end;
            const std::string name = src.substr(pos, end - pos);
            pos = end;
            if (name == "x")
                return make_node({ExprOp::Variable, 0.0, {}, nullptr, nullptr, at});
            if (name == "pi")
                return make_node({ExprOp::Constant, std::numbers::pi, {}, nullptr, nullptr, at});
            if (name == "e")
                return make_node({ExprOp::Constant, std::numbers::e, {}, nullptr, nullptr, at});
            if (known_function(name)) {
                if (!match('('))
                    fail("function '" + name + "' requires an argument list", pos);
                ExprPtr arg = parse_sum(depth + 1);
                if (!match(')'))
                    fail("expected ')' after the argument of '" + name + "'", pos);
                return make_node({ExprOp::Call, 0.0, name, arg, nullptr, at});
            }
            fail("unknown identifier '" + name + "'", at);
        }
        fail(std::string("unexpected character '") + c + "'", at);
    }
};

int tree_depth(const ExprPtr& node) {
    if (!node)
        return 0;
    return 1 + std::max(tree_depth(node->lhs), tree_depth(node->rhs));
}

bool has_branch_cut(const ExprPtr& node) {
    if (!node)
        return false;
    if (node->op == ExprOp::Call && (node->call == "sqrt" || node->call == "log"))
        return true;
    if (node->op == ExprOp::Pow && !is_integer_literal(node->rhs))
        return true;
    return has_branch_cut(node->lhs) || has_branch_cut(node->rhs);
}

std::string print_node(const ExprPtr& node);

int precedence(const ExprPtr& node) {
    switch (node->op) {
    case ExprOp::Add:
    case ExprOp::Sub: return 1;
    case ExprOp::Mul:
    case ExprOp::Div: return 2;
    case ExprOp::Neg: return 3;
    case ExprOp::Pow: return 4;
    case ExprOp::Constant: return node->value < 0 ? 3 : 6;
    default: return 6;
    }
}

std::string wrap(const ExprPtr& node, bool parens) {
    const std::string s = print_node(node);
    return parens ? "(" + s + ")" : s;
}

std::string print_node(const ExprPtr& node) {
    switch (node->op) {
    case ExprOp::Constant: return format_double(node->value);
    case ExprOp::Variable: return "x";
    case ExprOp::Neg: return "-" + wrap(node->lhs, precedence(node->lhs) < 3);
    case ExprOp::Add:
        return wrap(node->lhs, precedence(node->lhs) < 1) + "+" +
               wrap(node->rhs, precedence(node->rhs) <= 1);
    case ExprOp::Sub:
        return wrap(node->lhs, precedence(node->lhs) < 1) + "-" +
               wrap(node->rhs, precedence(node->rhs) <= 1);
    case ExprOp::Mul:
        return wrap(node->lhs, precedence(node->lhs) < 2) + "*" +
               wrap(node->rhs, precedence(node->rhs) <= 2);
    case ExprOp::Div:
        return wrap(node->lhs, precedence(node->lhs) < 2) + "/" +
               wrap(node->rhs, precedence(node->rhs) <= 2);
    case ExprOp::Pow:
        return wrap(node->lhs, precedence(node->lhs) <= 4) + "^" +
               wrap(node->rhs, precedence(node->rhs) < 3);
    case ExprOp::Call: return node->call + "(" + print_node(node->lhs) + ")";
    }
    return {};
}

Complex ipow(Complex base, long long e) {
    Complex r = 1.0;
    while (e > 0) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

[[noreturn]] void eval_fail(const char* what, const ExprPtr& node) {
    throw evaluation_error(std::string(what) + " in '" + print_node(node) + "' at offset " +
                           std::to_string(node->offset));
}

Complex eval_node(const ExprPtr& node, Complex z) {
    switch (node->op) {
    case ExprOp::Constant: return node->value;
    case ExprOp::Variable: return z;
    case ExprOp::Neg: return -eval_node(node->lhs, z);
    case ExprOp::Add: return eval_node(node->lhs, z) + eval_node(node->rhs, z);
    case ExprOp::Sub: return eval_node(node->lhs, z) - eval_node(node->rhs, z);
    case ExprOp::Mul: return eval_node(node->lhs, z) * eval_node(node->rhs, z);
    case ExprOp::Div: {
        const Complex denom = eval_node(node->rhs, z);
        if (denom == Complex(0.0, 0.0))
            eval_fail("division by zero", node);
        return eval_node(node->lhs, z) / denom;
    }
    case ExprOp::Pow: {
        const Complex base = eval_node(node->lhs, z);
        if (is_integer_literal(node->rhs)) {
            const long long e = static_cast<long long>(std::rint(node->rhs->value));
            if (e >= 0)
                return ipow(base, e);
            if (base == Complex(0.0, 0.0))
                eval_fail("zero raised to a negative power", node);
            return 1.0 / ipow(base, -e);
        }
        if (base == Complex(0.0, 0.0))
            eval_fail("zero raised to a non-integer power", node);
        return std::exp(eval_node(node->rhs, z) * std::log(base));
    }
    case ExprOp::Call: {
        const Complex arg = eval_node(node->lhs, z);
        if (node->call == "exp")
            return std::exp(arg);
        if (node->call == "sin")
            return std::sin(arg);
        if (node->call == "cos")
            return std::cos(arg);
        if (node->call == "sqrt")
            return std::sqrt(arg);
        if (arg == Complex(0.0, 0.0))
            eval_fail("log of zero", node);
        return std::log(arg);
    }
    }
    eval_fail("malformed node", node);
}

} // namespace

ExprAst parse_expr(const std::string& src) {
    if (src.empty())
        throw parse_error("empty expression", 0);
    if (src.size() > 4096)
        throw parse_error("expression longer than 4096 bytes", 4096);
    Parser parser{src};
    ExprAst ast;
    ast.root = parser.parse_sum(0);
    parser.skip_ws();
    if (parser.pos != src.size())
        parser.fail("unexpected trailing input", parser.pos);
    ast.source = src;
    ast.depth = tree_depth(ast.root);
    if (ast.depth > kMaxTreeDepth)
        throw parse_error("expression tree deeper than 64 levels", 0);
    ast.branch_cut_bearing = has_branch_cut(ast.root);
    return ast;
}

Complex eval_ast(const ExprAst& ast, Complex z) {
    if (!ast.root)
        throw precondition_error("eval_ast: empty AST");
    return eval_node(ast.root, z);
}

std::string to_string(const ExprAst& ast) {
    if (!ast.root)
        throw precondition_error("to_string: empty AST");
    return print_node(ast.root);
}

bool same_tree(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b)
        return !a && !b;
    if (a->op != b->op || a->call != b->call)
        return false;
    if (a->op == ExprOp::Constant &&
        !(a->value == b->value || (std::isnan(a->value) && std::isnan(b->value))))
        return false;
    return same_tree(a->lhs, b->lhs) && same_tree(a->rhs, b->rhs);
}

AnalyticFn make_expr_fn(const ExprAst& ast, double rho_max, RadiusRule rule) {
    if (!ast.root)
        throw precondition_error("make_expr_fn: empty AST");
    if (!(rho_max > 1.0))
        throw precondition_error("make_expr_fn: rho_max must exceed 1");
    if (ast.branch_cut_bearing && !std::holds_alternative<FixedRadius>(rule) &&
        !std::holds_alternative<AutoRadius>(rule))
        throw precondition_error(
            "branch-cut-bearing expressions admit only fixed or auto radius rules");
    AnalyticFn fn;
    fn.name = "expr:" + ast.source;
    fn.eval = [ast](Complex z) { return eval_ast(ast, z); };
    fn.rho_max = rho_max;
    fn.radius_rule = rule;
    fn.node_class = std::isfinite(rho_max) ? NodeClass::PoleLike : NodeClass::EntireLike;
    return fn;
}

} // namespace cheb
