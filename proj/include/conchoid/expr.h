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

#ifndef CONCHOID_EXPR_H
#define CONCHOID_EXPR_H

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace conchoid::expr {

// The offset function language. Grammar:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?
//   atom  := number | 'l' | 'pi' | 'e' | fn '(' expr ')' | '(' expr ')'
//   fn    := sin | cos | tan | ln | log | exp | sqrt | abs
//
// '^' is right-associative and binds tighter than unary minus, so "-2^2"
// is -4. 'log' is the natural logarithm, same as 'ln'. Whitespace is
// ignored between tokens.

enum class TokenKind {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End
};

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;
};

/// Splits `text` into tokens, terminated by a `TokenKind::End` token.
/// Throws `SyntaxError` on characters outside the language or numbers that
/// do not parse as finite reals.
std::vector<Token> tokenize(std::string_view text);

enum class UnaryOp {
    Negate
};

enum class BinaryOp {
    Add,
    Subtract,
    Multiply,
    Divide,
    Power
};

enum class Function {
    Sin,
    Cos,
    Tan,
    Ln,
    Log,
    Exp,
    Sqrt,
    Abs
};

std::string_view functionName(Function fn);
std::optional<Function> functionFromName(std::string_view name);

struct Node;

/// Immutable expression tree. Subtrees are shared, so copies are cheap and
/// safe to hand to other threads.
class Expr {
public:
    static Expr constant(double value);
    static Expr variable();
    static Expr unary(UnaryOp op, Expr child);
    static Expr binary(BinaryOp op, Expr left, Expr right);
    static Expr call(Function fn, Expr arg);

    const Node& node() const {
        return *node_;
    }

    /// True if the variable `l` occurs anywhere in the tree.
    bool dependsOnVariable() const;

private:
    explicit Expr(std::shared_ptr<const Node> node)
        : node_(std::move(node)) {
    }

    std::shared_ptr<const Node> node_;
};

struct Const {
    double value;
};

struct Var {};

struct Unary {
    UnaryOp op;
    Expr child;
};

struct Binary {
    BinaryOp op;
    Expr left;
    Expr right;
};

struct Call {
    Function fn;
    Expr arg;
};

struct Node {
    std::variant<Const, Var, Unary, Binary, Call> value;
};

/// Parses an offset function. Throws `SyntaxError` on malformed input and
/// `UnknownIdentifier` for identifiers outside the language.
Expr parse(std::string_view text);

/// Evaluates the expression at `l`. Never throws: IEEE semantics apply, so
/// `ln(0)` is -inf and `1/0` is +inf.
double evaluate(const Expr& e, double l);

/// Fully parenthesized canonical text. Constants use the shortest decimal
/// representation that reads back to the same double.
std::string render(const Expr& e);

/// Parses a constant expression such as "9/8*pi" and evaluates it. Throws
/// `SyntaxError` if the text uses the variable `l` or if the result is not
/// finite.
double evaluateConstant(std::string_view text);

} // namespace conchoid::expr

#endif // CONCHOID_EXPR_H
