#include "frenet4/expr.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace frenet4 {

ParamEnv::ParamEnv() { vals_["pi"] = 3.14159265358979323846; }

void ParamEnv::bind(const std::string& name, double value) { vals_[name] = value; }

double ParamEnv::lookup(const std::string& name) const {
    auto it = vals_.find(name);
    if (it == vals_.end()) throw Error(errc::unbound_param, "unbound parameter '" + name + "'");
    return it->second;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::number: return a.number == b.number;
        case Expr::Kind::param: return a.name == b.name;
        case Expr::Kind::var: return true;
        case Expr::Kind::neg: return structurally_equal(*a.lhs, *b.lhs);
        case Expr::Kind::call:
            return a.fn == b.fn && structurally_equal(*a.lhs, *b.lhs);
        default:
            return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::size_t offset;
    double number = 0.0;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if ((ch >= '0' && ch <= '9') || ch == '.') {
            std::size_t j = i;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            if (j < s.size() && s[j] == '.') {
                ++j;
                while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            }
            if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
                if (k < s.size() && s[k] >= '0' && s[k] <= '9') {
                    while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
                    j = k;
                }
            }
            std::string lit = s.substr(i, j - i);
            if (lit == ".")
                throw SyntaxError(start, "number", "syntax error at offset " +
                                                       std::to_string(start) + ": expected number");
            out.push_back({Token::Kind::number, start, std::strtod(lit.c_str(), nullptr), lit});
            i = j;
            continue;
        }
        if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= 'A' && s[j] <= 'Z') ||
                                    (s[j] >= '0' && s[j] <= '9') || s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::ident, start, 0.0, s.substr(i, j - i)});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (ch) {
            case '+': k = Token::Kind::plus; break;
            case '-': k = Token::Kind::minus; break;
            case '*': k = Token::Kind::star; break;
            case '/': k = Token::Kind::slash; break;
            case '^': k = Token::Kind::caret; break;
            case '(': k = Token::Kind::lparen; break;
            case ')': k = Token::Kind::rparen; break;
            default:
                throw SyntaxError(start, "token", "syntax error at offset " +
                                                      std::to_string(start) +
                                                      ": unexpected character '" + ch + "'");
        }
        out.push_back({k, start, 0.0, std::string(1, ch)});
        ++i;
    }
    out.push_back({Token::Kind::end, s.size(), 0.0, ""});
    return out;
}

ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    ExprPtr run() {
        ExprPtr e = sum();
        expect(Token::Kind::end, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw SyntaxError(t.offset, expected,
                          "syntax error at offset " + std::to_string(t.offset) + ": expected " +
                              expected);
    }

    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) fail(what);
        advance();
    }

    ExprPtr sum() {
        ExprPtr e = product();
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            bool plus = advance().kind == Token::Kind::plus;
            ExprPtr r = product();
            e = make({plus ? Expr::Kind::add : Expr::Kind::sub, 0.0, "", Fn::sin, e, r});
        }
        return e;
    }

    ExprPtr product() {
        ExprPtr e = unary();
        while (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
            bool mul = advance().kind == Token::Kind::star;
            ExprPtr r = unary();
            e = make({mul ? Expr::Kind::mul : Expr::Kind::div, 0.0, "", Fn::sin, e, r});
        }
        return e;
    }

    ExprPtr unary() {
        if (peek().kind == Token::Kind::minus) {
            advance();
            ExprPtr e = unary();
            return make({Expr::Kind::neg, 0.0, "", Fn::sin, e, nullptr});
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (peek().kind == Token::Kind::caret) {
            advance();
            ExprPtr exponent = unary();  // right-associative; allows a negated exponent
            return make({Expr::Kind::pow, 0.0, "", Fn::sin, base, exponent});
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::number:
                advance();
                return make({Expr::Kind::number, t.number, "", Fn::sin, nullptr, nullptr});
            case Token::Kind::lparen: {
                advance();
                ExprPtr e = sum();
                expect(Token::Kind::rparen, "\")\"");
                return e;
            }
            case Token::Kind::ident: {
                advance();
                if (peek().kind == Token::Kind::lparen) {
                    Fn fn;
                    if (t.text == "sin") fn = Fn::sin;
                    else if (t.text == "cos") fn = Fn::cos;
                    else if (t.text == "exp") fn = Fn::exp;
                    else if (t.text == "ln") fn = Fn::ln;
                    else if (t.text == "sqrt") fn = Fn::sqrt;
                    else
                        throw SyntaxError(t.offset, "function name",
                                          "unknown function '" + t.text + "' at offset " +
                                              std::to_string(t.offset));
                    advance();
                    ExprPtr arg = sum();
                    expect(Token::Kind::rparen, "\")\"");
                    return make({Expr::Kind::call, 0.0, "", fn, arg, nullptr});
                }
                if (t.text == "t")
                    return make({Expr::Kind::var, 0.0, "", Fn::sin, nullptr, nullptr});
                return make({Expr::Kind::param, 0.0, t.text, Fn::sin, nullptr, nullptr});
            }
            default:
                fail("expression");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

const char* fn_name(Fn f) {
    switch (f) {
        case Fn::sin: return "sin";
        case Fn::cos: return "cos";
        case Fn::exp: return "exp";
        case Fn::ln: return "ln";
        case Fn::sqrt: return "sqrt";
    }
    return "?";
}

// Precedence levels for the printer: sum 1, product 2, unary 3, pow 4, atom 5.
int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 4;
        default: return 5;
    }
}

void print(const Expr& e, int min_prec, std::string& out) {
    bool parens = precedence(e) < min_prec;
    if (parens) out += '(';
    switch (e.kind) {
        case Expr::Kind::number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", e.number);
            out += buf;
            break;
        }
        case Expr::Kind::param: out += e.name; break;
        case Expr::Kind::var: out += 't'; break;
        case Expr::Kind::neg:
            out += '-';
            print(*e.lhs, 3, out);
            break;
        case Expr::Kind::add:
        case Expr::Kind::sub:
            print(*e.lhs, 1, out);
            out += e.kind == Expr::Kind::add ? '+' : '-';
            print(*e.rhs, 2, out);
            break;
        case Expr::Kind::mul:
        case Expr::Kind::div:
            print(*e.lhs, 2, out);
            out += e.kind == Expr::Kind::mul ? '*' : '/';
            print(*e.rhs, 3, out);
            break;
        case Expr::Kind::pow:
            print(*e.lhs, 5, out);
            out += '^';
            print(*e.rhs, 3, out);
            break;
        case Expr::Kind::call:
            out += fn_name(e.fn);
            out += '(';
            print(*e.lhs, 0, out);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

bool contains_var(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::var: return true;
        case Expr::Kind::number:
        case Expr::Kind::param: return false;
        case Expr::Kind::neg:
        case Expr::Kind::call: return contains_var(*e.lhs);
        default: return contains_var(*e.lhs) || contains_var(*e.rhs);
    }
}

double constant_exponent(const Expr& e, const ParamEnv& env) {
    if (contains_var(e))
        throw Error(errc::domain, "exponent of '^' must not depend on t");
    return eval_scalar(e, 0.0, env);
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string to_string(const Expr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

double eval_scalar(const Expr& e, double t, const ParamEnv& env) {
    switch (e.kind) {
        case Expr::Kind::number: return e.number;
        case Expr::Kind::param: return env.lookup(e.name);
        case Expr::Kind::var: return t;
        case Expr::Kind::neg: return -eval_scalar(*e.lhs, t, env);
        case Expr::Kind::add: return eval_scalar(*e.lhs, t, env) + eval_scalar(*e.rhs, t, env);
        case Expr::Kind::sub: return eval_scalar(*e.lhs, t, env) - eval_scalar(*e.rhs, t, env);
        case Expr::Kind::mul: return eval_scalar(*e.lhs, t, env) * eval_scalar(*e.rhs, t, env);
        case Expr::Kind::div: {
            double a = eval_scalar(*e.lhs, t, env);
            double b = eval_scalar(*e.rhs, t, env);
            if (b == 0.0) throw Error(errc::domain, "division by zero");
            return a / b;
        }
        case Expr::Kind::pow: {
            double base = eval_scalar(*e.lhs, t, env);
            double p = constant_exponent(*e.rhs, env);
            if (p != std::nearbyint(p) && base <= 0.0)
                throw Error(errc::domain, "non-integer power needs a positive base");
            if (base == 0.0 && p < 0.0) throw Error(errc::domain, "zero base with negative power");
            return std::pow(base, p);
        }
        case Expr::Kind::call: {
            double a = eval_scalar(*e.lhs, t, env);
            switch (e.fn) {
                case Fn::sin: return std::sin(a);
                case Fn::cos: return std::cos(a);
                case Fn::exp: return std::exp(a);
                case Fn::ln:
                    if (a <= 0.0) throw Error(errc::domain, "ln of non-positive value");
                    return std::log(a);
                case Fn::sqrt:
                    if (a < 0.0) throw Error(errc::domain, "sqrt of negative value");
                    return std::sqrt(a);
            }
            throw Error(errc::domain, "bad function");
        }
    }
    throw Error(errc::domain, "bad expression node");
}

static Jet eval_jet_rec(const Expr& e, const Jet& var, int order, const ParamEnv& env) {
    switch (e.kind) {
        case Expr::Kind::number: return Jet(order, e.number);
        case Expr::Kind::param: return Jet(order, env.lookup(e.name));
        case Expr::Kind::var: return var;
        case Expr::Kind::neg: return -eval_jet_rec(*e.lhs, var, order, env);
        case Expr::Kind::add:
            return eval_jet_rec(*e.lhs, var, order, env) + eval_jet_rec(*e.rhs, var, order, env);
        case Expr::Kind::sub:
            return eval_jet_rec(*e.lhs, var, order, env) - eval_jet_rec(*e.rhs, var, order, env);
        case Expr::Kind::mul:
            return eval_jet_rec(*e.lhs, var, order, env) * eval_jet_rec(*e.rhs, var, order, env);
        case Expr::Kind::div:
            return eval_jet_rec(*e.lhs, var, order, env) / eval_jet_rec(*e.rhs, var, order, env);
        case Expr::Kind::pow: {
            Jet base = eval_jet_rec(*e.lhs, var, order, env);
            double p = constant_exponent(*e.rhs, env);
            return pow(base, p);
        }
        case Expr::Kind::call: {
            Jet a = eval_jet_rec(*e.lhs, var, order, env);
            switch (e.fn) {
                case Fn::sin: return sin(a);
                case Fn::cos: return cos(a);
                case Fn::exp: return exp(a);
                case Fn::ln: return log(a);
                case Fn::sqrt: return sqrt(a);
            }
            throw Error(errc::domain, "bad function");
        }
    }
    throw Error(errc::domain, "bad expression node");
}

Jet eval_jet(const Expr& e, double t0, int order, const ParamEnv& env) {
    if (order < 0) throw Error(errc::domain, "jet order must be >= 0");
    // An order-0 variable jet cannot carry dt; evaluate one order up and drop it.
    if (order == 0) return eval_jet_rec(e, Jet::variable(t0, 1), 1, env).truncated(0);
    return eval_jet_rec(e, Jet::variable(t0, order), order, env);
}

}  // namespace frenet4
