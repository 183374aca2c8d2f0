// Copyright 2026 The unisup Authors
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

#include "unisup/qasm.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace unisup {

QasmError::QasmError(std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

namespace {

std::string qasm_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::X:
            return "x";
        case GateKind::Z:
            return "z";
        case GateKind::Ry:
            return "ry";
        case GateKind::CNOT:
            return "cx";
        case GateKind::CZ:
            return "cz";
        default:
            throw std::invalid_argument("gate " + std::string(gate_kind_name(kind)) + " has no QASM spelling");
    }
}

std::optional<GateKind> kind_from_qasm(std::string_view name) {
    if (name == "h") return GateKind::H;
    if (name == "x") return GateKind::X;
    if (name == "z") return GateKind::Z;
    if (name == "ry") return GateKind::Ry;
    if (name == "cx") return GateKind::CNOT;
    if (name == "cz") return GateKind::CZ;
    return std::nullopt;
}

enum class TokenType { Ident, Number, String, Punct, End };

struct Token {
    TokenType type;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; k++) {
            if (src[i] == '\n') {
                line++;
                column = 1;
            } else {
                column++;
            }
            i++;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') {
                advance(1);
            }
            continue;
        }
        Token token{TokenType::Punct, "", line, column};
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = i;
            while (end < src.size() && (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_')) {
                end++;
            }
            token.type = TokenType::Ident;
            token.text = std::string(src.substr(start, end - start));
            advance(end - start);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = i;
            while (end < src.size() && (std::isdigit(static_cast<unsigned char>(src[end])) || src[end] == '.')) {
                end++;
            }
            if (end < src.size() && (src[end] == 'e' || src[end] == 'E')) {
                std::size_t exp = end + 1;
                if (exp < src.size() && (src[exp] == '+' || src[exp] == '-')) {
                    exp++;
                }
                if (exp < src.size() && std::isdigit(static_cast<unsigned char>(src[exp]))) {
                    end = exp;
                    while (end < src.size() && std::isdigit(static_cast<unsigned char>(src[end]))) {
                        end++;
                    }
                }
            }
            token.type = TokenType::Number;
            token.text = std::string(src.substr(start, end - start));
            advance(end - start);
        } else if (c == '"') {
            std::size_t end = src.find('"', i + 1);
            if (end == std::string_view::npos) {
                throw QasmError(line, column, "unterminated string");
            }
            token.type = TokenType::String;
            token.text = std::string(src.substr(start + 1, end - start - 1));
            advance(end + 1 - start);
        } else if (std::string_view("()[],;+-*/").find(c) != std::string_view::npos) {
            token.text = std::string(1, c);
            advance(1);
        } else {
            throw QasmError(line, column, std::string("unexpected character '") + c + "'");
        }
        tokens.push_back(std::move(token));
    }
    tokens.push_back({TokenType::End, "", line, column});
    return tokens;
}

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    }

    Circuit parse() {
        parse_header();
        std::optional<CircuitBuilder> builder;
        while (peek().type != TokenType::End) {
            const Token &head = peek();
            if (head.type != TokenType::Ident) {
                fail(head, "expected a statement, found '" + head.text + "'");
            }
            if (head.text == "include") {
                parse_include();
            } else if (head.text == "qreg") {
                if (builder) {
                    fail(head, "only one qreg is supported");
                }
                builder.emplace(parse_qreg(), Level::Lowered);
            } else if (auto kind = kind_from_qasm(head.text)) {
                if (!builder) {
                    fail(head, "gate before qreg declaration");
                }
                parse_gate(*kind, *builder);
            } else {
                fail(head, "gate outside subset: '" + head.text + "'");
            }
        }
        if (!builder) {
            fail(peek(), "missing qreg declaration");
        }
        return std::move(*builder).freeze();
    }

   private:
    const Token &peek() const {
        return tokens_[pos_];
    }

    const Token &next() {
        const Token &t = tokens_[pos_];
        if (t.type != TokenType::End) {
            pos_++;
        }
        return t;
    }

    [[noreturn]] static void fail(const Token &at, const std::string &message) {
        throw QasmError(at.line, at.column, message);
    }

    const Token &expect_punct(char c) {
        const Token &t = next();
        if (t.type != TokenType::Punct || t.text[0] != c) {
            fail(t, std::string("expected '") + c + "', found '" + t.text + "'");
        }
        return t;
    }

    const Token &expect(TokenType type, const char *what) {
        const Token &t = next();
        if (t.type != type) {
            fail(t, std::string("expected ") + what + ", found '" + t.text + "'");
        }
        return t;
    }

    std::uint64_t expect_integer() {
        const Token &t = expect(TokenType::Number, "an integer");
        std::uint64_t value = 0;
        auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || end != t.text.data() + t.text.size()) {
            fail(t, "expected an integer, found '" + t.text + "'");
        }
        return value;
    }

    void parse_header() {
        const Token &t = next();
        if (t.type != TokenType::Ident || t.text != "OPENQASM") {
            fail(t, "missing 'OPENQASM 2.0;' header");
        }
        const Token &version = expect(TokenType::Number, "a version number");
        if (version.text != "2.0" && version.text != "2") {
            fail(version, "unsupported OpenQASM version " + version.text);
        }
        expect_punct(';');
    }

    void parse_include() {
        next();
        const Token &file = expect(TokenType::String, "an include path");
        if (file.text != "qelib1.inc") {
            fail(file, "only qelib1.inc may be included");
        }
        expect_punct(';');
    }

    std::uint32_t parse_qreg() {
        next();
        const Token &name = expect(TokenType::Ident, "a register name");
        register_name_ = name.text;
        expect_punct('[');
        const Token &size_token = peek();
        std::uint64_t size = expect_integer();
        if (size == 0 || size > UINT32_MAX) {
            fail(size_token, "register size out of range");
        }
        expect_punct(']');
        expect_punct(';');
        register_size_ = static_cast<std::uint32_t>(size);
        return register_size_;
    }

    QubitIndex parse_operand() {
        const Token &name = expect(TokenType::Ident, "a qubit operand");
        if (name.text != register_name_) {
            fail(name, "unknown register '" + name.text + "'");
        }
        expect_punct('[');
        const Token &index_token = peek();
        std::uint64_t index = expect_integer();
        if (index >= register_size_) {
            fail(index_token, "qubit " + name.text + "[" + std::to_string(index) + "] out of range");
        }
        expect_punct(']');
        return QubitIndex(static_cast<std::uint32_t>(index));
    }

    // expr := term (('+' | '-') term)*
    // term := unary (('*' | '/') unary)*
    // unary := '-' unary | '+' unary | atom
    // atom := number | 'pi' | '(' expr ')'
    double parse_expr() {
        double value = parse_term();
        while (peek().type == TokenType::Punct && (peek().text == "+" || peek().text == "-")) {
            bool plus = next().text == "+";
            double rhs = parse_term();
            value = plus ? value + rhs : value - rhs;
        }
        return value;
    }

    double parse_term() {
        double value = parse_unary();
        while (peek().type == TokenType::Punct && (peek().text == "*" || peek().text == "/")) {
            bool times = next().text == "*";
            double rhs = parse_unary();
            value = times ? value * rhs : value / rhs;
        }
        return value;
    }

    double parse_unary() {
        if (peek().type == TokenType::Punct && peek().text == "-") {
            next();
            return -parse_unary();
        }
        if (peek().type == TokenType::Punct && peek().text == "+") {
            next();
            return parse_unary();
        }
        const Token &t = next();
        if (t.type == TokenType::Number) {
            char *end = nullptr;
            double value = std::strtod(t.text.c_str(), &end);
            if (end != t.text.c_str() + t.text.size()) {
                fail(t, "malformed number '" + t.text + "'");
            }
            return value;
        }
        if (t.type == TokenType::Ident && t.text == "pi") {
            return std::numbers::pi;
        }
        if (t.type == TokenType::Punct && t.text == "(") {
            double value = parse_expr();
            expect_punct(')');
            return value;
        }
        fail(t, "expected an angle expression, found '" + t.text + "'");
    }

    void parse_gate(GateKind kind, CircuitBuilder &builder) {
        const Token &head = next();
        Gate gate;
        gate.kind = kind;
        if (kind == GateKind::Ry) {
            expect_punct('(');
            gate.angle = parse_expr();
            expect_punct(')');
        }
        QubitIndex first = parse_operand();
        if (is_two_qubit(kind)) {
            expect_punct(',');
            gate.control = first;
            gate.target = parse_operand();
        } else {
            gate.target = first;
        }
        expect_punct(';');
        try {
            builder.append(gate);
        } catch (const std::logic_error &e) {
            fail(head, e.what());
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::string register_name_;
    std::uint32_t register_size_ = 0;
};

}  // namespace

std::string emit_qasm(const Circuit &circuit) {
    if (circuit.level() != Level::Lowered) {
        throw std::invalid_argument("only lowered circuits can be written as QASM");
    }
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits() << "];\n";
    char angle[40];
    for (const auto &gate : circuit) {
        out << qasm_name(gate.kind);
        if (gate.kind == GateKind::Ry) {
            std::snprintf(angle, sizeof(angle), "%.17g", gate.angle);
            out << "(" << angle << ")";
        }
        out << " ";
        if (gate.control) {
            out << "q[" << gate.control->value << "],";
        }
        out << "q[" << gate.target.value << "];\n";
    }
    return out.str();
}

Circuit parse_qasm(std::string_view text) {
    return Parser(tokenize(text)).parse();
}

}  // namespace unisup
