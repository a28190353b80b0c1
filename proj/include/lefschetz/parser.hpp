/*
   Copyright 2026 The lefschetz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LEFSCHETZ_PARSER_HPP
#define LEFSCHETZ_PARSER_HPP

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Grammar: integer or num/den coefficients, named variables, optional `*`
// between factors, `^` powers, `+`/`-`; whitespace (including newlines) is
// insignificant. Commas separate generators.
template <Field K>
class PolynomialParser {
  public:
    PolynomialParser(RingPtr<K> ring, std::map<std::string, int> aliases = {})
        : ring_(std::move(ring)), vars_(std::move(aliases)) {
        for (int i = 0; i < ring_->arity(); ++i) vars_[ring_->names[static_cast<std::size_t>(i)]] = i;
    }

    Polynomial<K> parse(const std::string& text) {
        start(text);
        Polynomial<K> p = parse_polynomial();
        skip_ws();
        if (!eof()) fail("unexpected character '" + std::string(1, peek()) + "'");
        return p;
    }

    // Comma-separated list; an empty or all-whitespace text parses to an
    // empty list.
    std::vector<Polynomial<K>> parse_list(const std::string& text) {
        start(text);
        std::vector<Polynomial<K>> out;
        skip_ws();
        if (eof()) return out;
        while (true) {
            out.push_back(parse_polynomial());
            skip_ws();
            if (eof()) break;
            if (peek() != ',') fail("expected ',' or end of input");
            advance();
        }
        return out;
    }

  private:
    void start(const std::string& text) {
        text_ = text;
        pos_ = 0;
        line_ = 1;
        col_ = 1;
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    std::string read_digits() {
        std::string s;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            s += peek();
            advance();
        }
        if (s.empty()) fail("expected a number");
        return s;
    }

    // Longest known variable name starting here; "x2x3" lexes as x2 then x3.
    int read_variable() {
        std::size_t maxlen = 0;
        for (const auto& [name, idx] : vars_) maxlen = std::max(maxlen, name.size());
        maxlen = std::min(maxlen, text_.size() - pos_);
        for (std::size_t len = maxlen; len >= 1; --len) {
            auto it = vars_.find(text_.substr(pos_, len));
            if (it != vars_.end()) {
                for (std::size_t k = 0; k < len; ++k) advance();
                return it->second;
            }
        }
        std::string run;
        std::size_t p = pos_;
        while (p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_'))
            run += text_[p++];
        fail("unknown variable '" + run + "'");
    }

    K field_from_decimal(const std::string& digits) const {
        if constexpr (std::is_same_v<K, Rational>) {
            return Rational(BigInt(digits));
        } else {
            K v = ring_->unit.zero();
            const K ten = ring_->unit.from_int(10);
            for (char d : digits) v = v * ten + ring_->unit.from_int(d - '0');
            return v;
        }
    }

    int read_exponent() {
        int before_line = line_, before_col = col_;
        std::string digits = read_digits();
        if (digits.size() > 4) throw ParseError("exponent too large", before_line, before_col);
        return std::stoi(digits);
    }

    // factor := '(' poly ')' ('^' number)? | number ('/' number)? | name ('^' number)?
    Polynomial<K> parse_factor() {
        if (eof()) fail("expected a coefficient or variable");
        char c = peek();
        if (c == '(') {
            advance();
            Polynomial<K> inner = parse_polynomial();
            skip_ws();
            if (eof() || peek() != ')') fail("expected ')'");
            advance();
            skip_ws();
            if (!eof() && peek() == '^') {
                advance();
                skip_ws();
                return inner.pow(read_exponent());
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            K num = field_from_decimal(read_digits());
            if (!eof() && peek() == '/') {
                advance();
                skip_ws();
                int dl = line_, dc = col_;
                K den = field_from_decimal(read_digits());
                if (den.is_zero()) throw ParseError("zero denominator", dl, dc);
                num = num / den;
            }
            return Polynomial<K>::constant(ring_, num);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            int var = read_variable();
            int e = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                advance();
                skip_ws();
                e = read_exponent();
            }
            return Polynomial<K>::variable(ring_, var, e);
        }
        fail("expected a coefficient or variable");
    }

    // term := factor ('*'? factor)*
    Polynomial<K> parse_term() {
        skip_ws();
        Polynomial<K> acc = parse_factor();
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '*') {
                advance();
                skip_ws();
                acc = acc * parse_factor();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial<K> parse_polynomial() {
        Polynomial<K> sum = Polynomial<K>::zero(ring_);
        skip_ws();
        if (eof()) fail("empty polynomial");
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            advance();
        }
        while (true) {
            Polynomial<K> t = parse_term();
            sum = negate ? sum - t : sum + t;
            skip_ws();
            if (eof() || (peek() != '+' && peek() != '-')) break;
            negate = peek() == '-';
            advance();
        }
        return sum;
    }

    RingPtr<K> ring_;
    std::map<std::string, int> vars_;
    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// The x/y/z shorthand used throughout the command-line surface.
inline std::map<std::string, int> xyz_aliases() {
    return {{"x", 0}, {"y", 1}, {"z", 2}};
}

template <Field K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, const std::string& text,
                               std::map<std::string, int> aliases = {}) {
    return PolynomialParser<K>(ring, std::move(aliases)).parse(text);
}

template <Field K>
std::vector<Polynomial<K>> parse_polynomial_list(const RingPtr<K>& ring, const std::string& text,
                                                 std::map<std::string, int> aliases = {}) {
    return PolynomialParser<K>(ring, std::move(aliases)).parse_list(text);
}

}  // namespace lefschetz

#endif  // LEFSCHETZ_PARSER_HPP
