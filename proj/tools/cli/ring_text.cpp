/*
   Copyright 2026 The Spectral Authors

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

#include "ring_text.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace spectral::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SyntaxError(what); }

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingSpec ring() {
        std::vector<RingSpec> factors{atom()};
        for (;;) {
            skip_space();
            if (done() || text_[pos_] != 'x') break;
            ++pos_;
            factors.push_back(atom());
        }
        skip_space();
        if (!done()) bad("unexpected '" + std::string(text_.substr(pos_)) + "' in ring spec");
        return factors.size() == 1 ? factors.front() : RingSpec::product(std::move(factors));
    }

private:
    bool done() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token) {
        if (!eat(token)) bad("expected '" + std::string(token) + "' at position " + std::to_string(pos_) + " of ring spec");
    }

    std::uint32_t integer() {
        skip_space();
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc()) bad("expected an integer at position " + std::to_string(pos_) + " of ring spec");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }

    RingSpec atom() {
        if (eat("Z/")) {
            const auto n = integer();
            if (n < 1) bad("Z/n needs n >= 1");
            return RingSpec::modular(n);
        }
        if (eat("GF(")) {
            const auto p = integer();
            expect(")");
            expect("[x]/(");
            const std::size_t close = text_.find(')', pos_);
            if (close == std::string_view::npos) bad("unterminated polynomial in ring spec");
            auto coeffs = polynomial(text_.substr(pos_, close - pos_), p);
            pos_ = close + 1;
            return RingSpec::poly(p, std::move(coeffs));
        }
        if (eat("table:")) {
            std::size_t end = text_.find(" x ", pos_);
            if (end == std::string_view::npos) end = text_.size();
            const std::string path = trim(text_.substr(pos_, end - pos_));
            pos_ = end;
            return table(path);
        }
        skip_space();
        bad("unknown ring '" + std::string(text_.substr(pos_)) + "'");
    }

    static std::vector<std::uint32_t> polynomial(std::string_view body, std::uint32_t p) {
        std::string s;
        for (char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) bad("empty polynomial");
        std::vector<std::uint32_t> coeffs;
        std::size_t at = 0;
        while (at < s.size()) {
            std::size_t next = s.find('+', at);
            if (next == std::string::npos) next = s.size();
            const std::string term = s.substr(at, next - at);
            at = next + 1;
            if (term.empty()) bad("empty term in polynomial " + s);
            std::uint64_t c = 1;
            std::size_t degree = 0;
            std::size_t k = 0;
            if (std::isdigit(static_cast<unsigned char>(term[0]))) {
                auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), c);
                if (ec != std::errc()) bad("bad coefficient in " + term);
                k = static_cast<std::size_t>(ptr - term.data());
                if (k < term.size() && term[k] == '*') ++k;
            }
            if (k < term.size()) {
                if (term[k] != 'x') bad("bad term '" + term + "' in polynomial");
                ++k;
                degree = 1;
                if (k < term.size()) {
                    if (term[k] != '^') bad("bad term '" + term + "' in polynomial");
                    ++k;
                    auto [ptr, ec] = std::from_chars(term.data() + k, term.data() + term.size(), degree);
                    if (ec != std::errc() || ptr != term.data() + term.size()) bad("bad exponent in " + term);
                }
            }
            if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
            coeffs[degree] = static_cast<std::uint32_t>((coeffs[degree] + c % p) % p);
        }
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
        return coeffs;
    }

    static RingSpec table(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::Parse, "cannot read table ring file " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        TableSpec t = parse_table_json(buf.str());
        if (t.name.empty()) t.name = "table:" + path;
        return RingSpec{std::move(t)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RingSpec parse_ring(std::string_view text) {
    if (trim(text).empty()) bad("empty ring spec");
    return Parser(text).ring();
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    if (trim(text).empty()) return out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[' || c == '<') ++depth;
        if (c == ')' || c == ']' || c == '>') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<Elem> parse_elements(const Ring& ring, std::string_view text) {
    std::vector<Elem> out;
    for (const auto& item : split_list(text)) {
        auto e = ring.parse_elem(item);
        if (!e) bad("'" + item + "' is not an element of " + ring.name());
        out.push_back(*e);
    }
    return out;
}

} // namespace spectral::cli
