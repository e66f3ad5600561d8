#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "binagg/errors.hpp"
#include "binagg/formula.hpp"
#include "binagg/issues.hpp"

namespace binagg {

// Grammar (precedence: ~ binds tightest, then &, |, ->, <->):
//
//   formula := iff
//   iff     := implies { "<->" implies }           (left-associative)
//   implies := or [ "->" implies ]                 (right-associative)
//   or      := and { ("|" | "\/") and }            (left-associative)
//   and     := unary { ("&" | "/\") unary }        (left-associative)
//   unary   := ("~" | "!") unary | "(" formula ")" | "TRUE" | "FALSE" | ident
//
// Whitespace is insignificant and '#' starts a comment running to end of line.

namespace detail {

enum class Tok { End, LParen, RParen, Not, And, Or, Implies, Iff, True, False, Ident };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        int line = line_, col = column_;
        if (pos_ >= text_.size()) return {Tok::End, "", line, col};
        char c = text_[pos_];
        switch (c) {
            case '(': advance(); return {Tok::LParen, "(", line, col};
            case ')': advance(); return {Tok::RParen, ")", line, col};
            case '~':
            case '!': advance(); return {Tok::Not, std::string(1, c), line, col};
            case '&': advance(); return {Tok::And, "&", line, col};
            case '|': advance(); return {Tok::Or, "|", line, col};
            case '/':
                expect_next('\\', "expected '\\' after '/'");
                return {Tok::And, "/\\", line, col};
            case '\\':
                expect_next('/', "expected '/' after '\\'");
                return {Tok::Or, "\\/", line, col};
            case '-':
                expect_next('>', "expected '>' after '-'");
                return {Tok::Implies, "->", line, col};
            case '<':
                expect_next('-', "expected '->' after '<'");
                expect_here('>', "expected '>' after '<-'");
                return {Tok::Iff, "<->", line, col};
            default: break;
        }
        if (is_identifier(std::string_view(&c, 1))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   is_identifier(text_.substr(start, pos_ - start + 1))) {
                advance();
            }
            std::string word(text_.substr(start, pos_ - start));
            if (word == "TRUE") return {Tok::True, word, line, col};
            if (word == "FALSE") return {Tok::False, word, line, col};
            return {Tok::Ident, word, line, col};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void expect_next(char c, const std::string& message) {
        advance();
        expect_here(c, message);
    }

    void expect_here(char c, const std::string& message) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw ParseError(line_, column_, message);
        }
        advance();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, const IssueSet& issues)
        : lexer_(text), issues_(issues) {
        shift();
    }

    Formula parse_whole() {
        Formula f = parse_iff();
        if (tok_.kind != Tok::End) {
            throw ParseError(tok_.line, tok_.column,
                             "unexpected '" + tok_.text + "' after formula");
        }
        return f;
    }

private:
    Formula parse_iff() {
        Formula f = parse_implies();
        while (tok_.kind == Tok::Iff) {
            shift();
            f = iff(std::move(f), parse_implies());
        }
        return f;
    }

    Formula parse_implies() {
        Formula f = parse_or();
        if (tok_.kind == Tok::Implies) {
            shift();
            f = implies(std::move(f), parse_implies());
        }
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (tok_.kind == Tok::Or) {
            shift();
            f = std::move(f) | parse_and();
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (tok_.kind == Tok::And) {
            shift();
            f = std::move(f) & parse_unary();
        }
        return f;
    }

    Formula parse_unary() {
        Token t = tok_;
        switch (t.kind) {
            case Tok::Not:
                shift();
                return !parse_unary();
            case Tok::LParen: {
                shift();
                Formula f = parse_iff();
                if (tok_.kind != Tok::RParen) {
                    throw ParseError(tok_.line, tok_.column, "expected ')'");
                }
                shift();
                return f;
            }
            case Tok::True: shift(); return Formula::constant(true);
            case Tok::False: shift(); return Formula::constant(false);
            case Tok::Ident: {
                auto index = issues_.index_of(t.text);
                if (!index) throw UnknownIdentifierError(t.line, t.column, t.text);
                shift();
                return Formula::var(*index);
            }
            default:
                throw ParseError(t.line, t.column,
                                 t.kind == Tok::End
                                     ? "unexpected end of input"
                                     : "unexpected '" + t.text + "'");
        }
    }

    void shift() { tok_ = lexer_.next(); }

    Lexer lexer_;
    const IssueSet& issues_;
    Token tok_{Tok::End, "", 0, 0};
};

}  // namespace detail

/// Parse a single formula; all identifiers must name issues in `issues`.
inline Formula parse(std::string_view text, const IssueSet& issues) {
    return detail::Parser(text, issues).parse_whole();
}

}  // namespace binagg
