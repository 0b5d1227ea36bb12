#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "snyder/series.hpp"

namespace snyder {

// Reads a series expression over +, -, *, /, ^, parentheses, sqrt, rational
// literals, and the variable u. All offsets reported in errors are 1-based.
//
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := base ("^" INT)?
//   base   := RATIONAL | "u" | "(" expr ")" | "sqrt" "(" expr ")"
//   RATIONAL := INT ("/" INT)?
//
// RATIONAL binds tighter than term-level division, so 3/4^2 is (3/4)^2.
class SeriesParser {
public:
    static TruncatedSeries parse(const std::string& text, int order) {
        SeriesParser p(text, order);
        TruncatedSeries s = p.parse_expr();
        if (p.peek().kind != Kind::End)
            throw parse_error("unexpected trailing input", p.peek().offset);
        return s;
    }

private:
    enum class Kind { Int, U, Sqrt, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

    struct Token {
        Kind kind;
        std::string text;
        std::size_t offset; // 1-based
    };

    std::vector<Token> toks;
    std::size_t pos = 0;
    int order;

    SeriesParser(const std::string& text, int order) : order(order) {
        if (order < 0) throw error("negative series order");
        lex(text);
    }

    void lex(const std::string& text) {
        std::size_t i = 0;
        while (i < text.size()) {
            char ch = text[i];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++i;
                continue;
            }
            std::size_t off = i + 1;
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                toks.push_back({Kind::Int, text.substr(i, j - i), off});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                std::size_t j = i;
                while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
                std::string word = text.substr(i, j - i);
                if (word == "u") toks.push_back({Kind::U, word, off});
                else if (word == "sqrt") toks.push_back({Kind::Sqrt, word, off});
                else throw parse_error("unknown identifier '" + word + "'", off);
                i = j;
                continue;
            }
            Kind k;
            switch (ch) {
                case '+': k = Kind::Plus; break;
                case '-': k = Kind::Minus; break;
                case '*': k = Kind::Star; break;
                case '/': k = Kind::Slash; break;
                case '^': k = Kind::Caret; break;
                case '(': k = Kind::LParen; break;
                case ')': k = Kind::RParen; break;
                default:
                    throw parse_error(std::string("unexpected character '") + ch + "'", off);
            }
            toks.push_back({k, std::string(1, ch), off});
            ++i;
        }
        toks.push_back({Kind::End, "", text.size() + 1});
    }

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t k = pos + ahead;
        if (k >= toks.size()) k = toks.size() - 1;
        return toks[k];
    }

    const Token& take() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

    void expect(Kind k, const std::string& what) {
        if (peek().kind != k) throw parse_error("expected " + what, peek().offset);
        ++pos;
    }

    TruncatedSeries parse_expr() {
        bool neg = false;
        if (peek().kind == Kind::Minus) {
            neg = true;
            ++pos;
        }
        TruncatedSeries s = parse_term();
        if (neg) s = -s;
        while (peek().kind == Kind::Plus || peek().kind == Kind::Minus) {
            bool minus = take().kind == Kind::Minus;
            TruncatedSeries t = parse_term();
            s = minus ? s - t : s + t;
        }
        return s;
    }

    TruncatedSeries parse_term() {
        TruncatedSeries s = unsigned_or_signed_factor();
        while (peek().kind == Kind::Star || peek().kind == Kind::Slash) {
            const Token& op = take();
            TruncatedSeries t = parse_factor();
            if (op.kind == Kind::Star) {
                s = s * t;
            } else {
                try {
                    s = s * t.reciprocal();
                } catch (const error& e) {
                    throw parse_error(e.what(), op.offset);
                }
            }
        }
        return s;
    }

    // A leading minus is tolerated on any term, so "a + -b" reads naturally.
    TruncatedSeries unsigned_or_signed_factor() {
        if (peek().kind == Kind::Minus) {
            ++pos;
            return -unsigned_or_signed_factor();
        }
        return parse_factor();
    }

    TruncatedSeries parse_factor() {
        TruncatedSeries s = parse_base();
        if (peek().kind == Kind::Caret) {
            ++pos;
            if (peek().kind != Kind::Int)
                throw parse_error("expected integer exponent", peek().offset);
            const Token& t = take();
            long e = to_small_int(t);
            s = s.pow(static_cast<int>(e));
        }
        return s;
    }

    TruncatedSeries parse_base() {
        const Token& t = peek();
        switch (t.kind) {
            case Kind::Int: {
                ++pos;
                mpz_class num(t.text);
                // INT "/" INT lexes as one rational literal
                if (peek().kind == Kind::Slash && peek(1).kind == Kind::Int) {
                    ++pos;
                    const Token& dt = take();
                    mpz_class den(dt.text);
                    if (sgn(den) == 0) throw parse_error("rational with zero denominator", dt.offset);
                    mpq_class q(num, den);
                    q.canonicalize();
                    return TruncatedSeries::constant(ExactComplex(q), order);
                }
                return TruncatedSeries::constant(ExactComplex(mpq_class(num)), order);
            }
            case Kind::U:
                ++pos;
                return TruncatedSeries::variable(order);
            case Kind::LParen: {
                ++pos;
                TruncatedSeries s = parse_expr();
                expect(Kind::RParen, "')'");
                return s;
            }
            case Kind::Sqrt: {
                std::size_t at = t.offset;
                ++pos;
                expect(Kind::LParen, "'('");
                TruncatedSeries s = parse_expr();
                expect(Kind::RParen, "')'");
                try {
                    return s.sqrt();
                } catch (const error& e) {
                    throw parse_error(e.what(), at);
                }
            }
            default:
                throw parse_error("expected a series term", t.offset);
        }
    }

    static long to_small_int(const Token& t) {
        if (t.text.size() > 4) throw parse_error("exponent too large", t.offset);
        long v = std::stol(t.text);
        if (v > 1000) throw parse_error("exponent too large", t.offset);
        return v;
    }
};

inline TruncatedSeries parse_series(const std::string& text, int order) {
    return SeriesParser::parse(text, order);
}

} // namespace snyder
