// Copyright 2026 The genconchoid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <conchoid/expr.h>

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <system_error>

#include <conchoid/errors.h>
#include <conchoid/format.h>

namespace conchoid::expr {

namespace {

constexpr int maxNestingDepth = 256;

bool isDigit(char c) {
    return c >= '0' && c <= '9';
}

bool isIdentStart(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool isIdentChar(char c) {
    return isIdentStart(c) || isDigit(c);
}

bool isSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

constexpr std::array<std::pair<std::string_view, Function>, 8> functionNames = {{
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"ln", Function::Ln},
    {"log", Function::Log},
    {"exp", Function::Exp},
    {"sqrt", Function::Sqrt},
    {"abs", Function::Abs},
}};

// Recursive descent over the token stream.
class Parser {
public:
    Parser(std::vector<Token> tokens, bool allowVariable)
        : tokens_(std::move(tokens))
        , allowVariable_(allowVariable) {
    }

    Expr parseAll() {
        Expr e = parseExpr();
        if (peek().kind != TokenKind::End) {
            throw SyntaxError(peek().position, "unexpected '" + peek().text + "'");
        }
        return e;
    }

private:
    const Token& peek() const {
        return tokens_[pos_];
    }

    const Token& advance() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::End) {
            ++pos_;
        }
        return t;
    }

    void enter() {
        if (++depth_ > maxNestingDepth) {
            throw SyntaxError(peek().position, "expression is nested too deeply");
        }
    }

    void leave() {
        --depth_;
    }

    Expr parseExpr() {
        enter();
        Expr left = parseTerm();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const BinaryOp op = advance().kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Subtract;
            left = Expr::binary(op, std::move(left), parseTerm());
        }
        leave();
        return left;
    }

    Expr parseTerm() {
        Expr left = parseUnary();
        while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
            const BinaryOp op = advance().kind == TokenKind::Star ? BinaryOp::Multiply : BinaryOp::Divide;
            left = Expr::binary(op, std::move(left), parseUnary());
        }
        return left;
    }

    Expr parseUnary() {
        enter();
        Expr result = [this] {
            if (peek().kind == TokenKind::Minus) {
                advance();
                return Expr::unary(UnaryOp::Negate, parseUnary());
            }
            return parsePower();
        }();
        leave();
        return result;
    }

    Expr parsePower() {
        Expr base = parseAtom();
        if (peek().kind == TokenKind::Caret) {
            advance();
            return Expr::binary(BinaryOp::Power, std::move(base), parseUnary());
        }
        return base;
    }

    Expr parseAtom() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::Number: {
            advance();
            double value = 0;
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            return Expr::constant(value);
        }
        case TokenKind::Ident:
            return parseIdent();
        case TokenKind::LParen: {
            advance();
            Expr inner = parseExpr();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        case TokenKind::End:
            throw SyntaxError(t.position, "unexpected end of expression");
        default:
            throw SyntaxError(t.position, "unexpected '" + t.text + "'");
        }
    }

    Expr parseIdent() {
        const Token t = advance();
        if (t.text == "l") {
            if (!allowVariable_) {
                throw SyntaxError(t.position, "the variable 'l' is not allowed in a constant");
            }
            return Expr::variable();
        }
        if (t.text == "pi") {
            return Expr::constant(std::numbers::pi);
        }
        if (t.text == "e") {
            return Expr::constant(std::numbers::e);
        }
        const std::optional<Function> fn = functionFromName(t.text);
        if (!fn) {
            throw UnknownIdentifier(t.position, t.text);
        }
        expect(TokenKind::LParen, "'(' after function name");
        Expr arg = parseExpr();
        expect(TokenKind::RParen, "')'");
        return Expr::call(*fn, std::move(arg));
    }

    void expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) {
            throw SyntaxError(peek().position, std::string("expected ") + what);
        }
        advance();
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    bool allowVariable_;
};

Expr parseImpl(std::string_view text, bool allowVariable) {
    std::vector<Token> tokens = tokenize(text);
    if (tokens.size() == 1) {
        throw SyntaxError(0, "empty expression");
    }
    return Parser(std::move(tokens), allowVariable).parseAll();
}

double applyFunction(Function fn, double x) {
    switch (fn) {
    case Function::Sin:
        return std::sin(x);
    case Function::Cos:
        return std::cos(x);
    case Function::Tan:
        return std::tan(x);
    case Function::Ln:
    case Function::Log:
        return std::log(x);
    case Function::Exp:
        return std::exp(x);
    case Function::Sqrt:
        return std::sqrt(x);
    case Function::Abs:
        return std::abs(x);
    }
    return std::nan("");
}

std::string_view binarySymbol(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add:
        return "+";
    case BinaryOp::Subtract:
        return "-";
    case BinaryOp::Multiply:
        return "*";
    case BinaryOp::Divide:
        return "/";
    case BinaryOp::Power:
        return "^";
    }
    return "?";
}

void renderInto(const Expr& e, std::string& out) {
    struct Visitor {
        std::string& out;

        void operator()(const Const& c) const {
            const std::string text = shortestDecimal(c.value);
            if (std::signbit(c.value)) {
                out += "(" + text + ")";
            }
            else {
                out += text;
            }
        }
        void operator()(const Var&) const {
            out += 'l';
        }
        void operator()(const Unary& u) const {
            out += "(-";
            renderInto(u.child, out);
            out += ')';
        }
        void operator()(const Binary& b) const {
            out += '(';
            renderInto(b.left, out);
            out += ' ';
            out += binarySymbol(b.op);
            out += ' ';
            renderInto(b.right, out);
            out += ')';
        }
        void operator()(const Call& c) const {
            out += functionName(c.fn);
            out += '(';
            renderInto(c.arg, out);
            out += ')';
        }
    };
    std::visit(Visitor{out}, e.node().value);
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (isSpace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        auto single = [&](TokenKind kind) {
            tokens.push_back({kind, std::string(1, c), start});
            ++i;
        };
        switch (c) {
        case '+':
            single(TokenKind::Plus);
            continue;
        case '-':
            single(TokenKind::Minus);
            continue;
        case '*':
            single(TokenKind::Star);
            continue;
        case '/':
            single(TokenKind::Slash);
            continue;
        case '^':
            single(TokenKind::Caret);
            continue;
        case '(':
            single(TokenKind::LParen);
            continue;
        case ')':
            single(TokenKind::RParen);
            continue;
        default:
            break;
        }
        if (isDigit(c) || c == '.') {
            while (i < n && isDigit(text[i])) {
                ++i;
            }
            if (i < n && text[i] == '.') {
                ++i;
                while (i < n && isDigit(text[i])) {
                    ++i;
                }
            }
            // An exponent is only consumed when digits follow, so that "2e"
            // is not mistaken for a truncated literal.
            if (i < n && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < n && (text[j] == '+' || text[j] == '-')) {
                    ++j;
                }
                if (j < n && isDigit(text[j])) {
                    while (j < n && isDigit(text[j])) {
                        ++j;
                    }
                    i = j;
                }
            }
            const std::string_view literal = text.substr(start, i - start);
            double value = 0;
            const auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
            if (ec != std::errc() || ptr != literal.data() + literal.size() || !std::isfinite(value)) {
                throw SyntaxError(start, "invalid number '" + std::string(literal) + "'");
            }
            tokens.push_back({TokenKind::Number, std::string(literal), start});
            continue;
        }
        if (isIdentStart(c)) {
            while (i < n && isIdentChar(text[i])) {
                ++i;
            }
            tokens.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        throw SyntaxError(start, "unexpected character");
    }
    tokens.push_back({TokenKind::End, "", n});
    return tokens;
}

std::string_view functionName(Function fn) {
    for (const auto& [name, f] : functionNames) {
        if (f == fn) {
            return name;
        }
    }
    return "?";
}

std::optional<Function> functionFromName(std::string_view name) {
    for (const auto& [n, f] : functionNames) {
        if (n == name) {
            return f;
        }
    }
    return std::nullopt;
}

Expr Expr::constant(double value) {
    return Expr(std::make_shared<const Node>(Node{Const{value}}));
}

Expr Expr::variable() {
    return Expr(std::make_shared<const Node>(Node{Var{}}));
}

Expr Expr::unary(UnaryOp op, Expr child) {
    return Expr(std::make_shared<const Node>(Node{Unary{op, std::move(child)}}));
}

Expr Expr::binary(BinaryOp op, Expr left, Expr right) {
    return Expr(std::make_shared<const Node>(Node{Binary{op, std::move(left), std::move(right)}}));
}

Expr Expr::call(Function fn, Expr arg) {
    return Expr(std::make_shared<const Node>(Node{Call{fn, std::move(arg)}}));
}

bool Expr::dependsOnVariable() const {
    struct Visitor {
        bool operator()(const Const&) const {
            return false;
        }
        bool operator()(const Var&) const {
            return true;
        }
        bool operator()(const Unary& u) const {
            return u.child.dependsOnVariable();
        }
        bool operator()(const Binary& b) const {
            return b.left.dependsOnVariable() || b.right.dependsOnVariable();
        }
        bool operator()(const Call& c) const {
            return c.arg.dependsOnVariable();
        }
    };
    return std::visit(Visitor{}, node_->value);
}

Expr parse(std::string_view text) {
    return parseImpl(text, true);
}

double evaluate(const Expr& e, double l) {
    struct Visitor {
        double l;

        double operator()(const Const& c) const {
            return c.value;
        }
        double operator()(const Var&) const {
            return l;
        }
        double operator()(const Unary& u) const {
            return -evaluate(u.child, l);
        }
        double operator()(const Binary& b) const {
            const double x = evaluate(b.left, l);
            const double y = evaluate(b.right, l);
            switch (b.op) {
            case BinaryOp::Add:
                return x + y;
            case BinaryOp::Subtract:
                return x - y;
            case BinaryOp::Multiply:
                return x * y;
            case BinaryOp::Divide:
                return x / y;
            case BinaryOp::Power:
                return std::pow(x, y);
            }
            return std::nan("");
        }
        double operator()(const Call& c) const {
            return applyFunction(c.fn, evaluate(c.arg, l));
        }
    };
    return std::visit(Visitor{l}, e.node().value);
}

std::string render(const Expr& e) {
    std::string out;
    renderInto(e, out);
    return out;
}

double evaluateConstant(std::string_view text) {
    const Expr e = parseImpl(text, false);
    const double value = evaluate(e, 0.0);
    if (!std::isfinite(value)) {
        throw SyntaxError(0, "constant expression '" + std::string(text) + "' is not finite");
    }
    return value;
}

} // namespace conchoid::expr
