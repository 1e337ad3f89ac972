/**
 * @file serialize.hpp
 * @brief Text grammar for polynomials.  The canonical printer lives on
 *        MultiPoly::str(); this header provides the matching parser, which
 *        additionally accepts parentheses, '-' and products of parenthesized
 *        factors, so bundled data files stay readable.
 *
 * Grammar:
 *   expr    := term (('+'|'-') term)*
 *   term    := factor (('*'|'/') factor)*        ('/' needs a constant divisor)
 *   factor  := primary ('^' integer)*
 *   primary := integer | identifier | '(' expr ')' | '-' factor
 */
#pragma once

#include <pvi/multipoly.hpp>

#include <cctype>
#include <string>
#include <vector>

namespace pvi {

class PolyParser {
public:
    explicit PolyParser(std::string text) : text_(std::move(text)) {}

    MultiPoly parse() {
        MultiPoly result = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing characters");
        return result;
    }

private:
    std::string text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw AlgebraError("parse error at offset " + std::to_string(pos_) +
                           " in '" + text_ + "': " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    MultiPoly parse_expr() {
        MultiPoly acc = parse_term();
        while (true) {
            if (accept('+')) {
                acc += parse_term();
            } else if (accept('-')) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (true) {
            if (accept('*')) {
                acc *= parse_factor();
            } else if (accept('/')) {
                MultiPoly d = parse_factor();
                if (!d.is_constant() || d.is_zero())
                    fail("division requires a nonzero constant divisor");
                acc = acc / d.constant_value();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_primary();
        while (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            if (neg) fail("negative exponents are not polynomials");
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) fail("exponent expected after '^'");
            int e = std::stoi(text_.substr(start, pos_ - start));
            base = base.pow(e);
        }
        return base;
    }

    MultiPoly parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return MultiPoly::constant(Rational(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return MultiPoly::var(text_.substr(start, pos_ - start));
        }
        fail("unexpected character");
    }
};

inline MultiPoly parse_poly(const std::string& text) {
    return PolyParser(text).parse();
}

/// Split a tuple literal "(x, y, z, w)" into its top-level components.
inline std::vector<std::string> split_tuple(const std::string& text) {
    size_t lo = text.find('(');
    size_t hi = text.rfind(')');
    if (lo == std::string::npos || hi == std::string::npos || hi <= lo)
        throw AlgebraError("split_tuple: expected parenthesized tuple in '" + text + "'");
    std::string body = text.substr(lo + 1, hi - lo - 1);
    std::vector<std::string> parts;
    int depth = 0;
    std::string current;
    auto trim = [](std::string s) {
        const char* ws = " \t\r\n";
        size_t b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        size_t e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(trim(current));
    return parts;
}

}  // namespace pvi
