/*
   Copyright 2026 The charcong Authors

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

#include "charcong/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "charcong/error.hpp"

namespace charcong {

namespace {

// expr    := ['+'|'-'] term (('+'|'-') term)*
// term    := power (['*'] power)*
// power   := primary ['^' integer]
// primary := integer | generator | '(' expr ')'
class PolynomialParser {
 public:
  PolynomialParser(const Ring& ring, std::string_view text) : ring_(ring) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }
  }

  Element parse() {
    if (src_.empty()) fail("empty expression");
    Element value = expr();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse element \"" + src_ + "\": " + why);
  }

  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  bool starts_primary() const {
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Element expr() {
    bool negate = false;
    if (peek('+') || peek('-')) negate = src_[pos_++] == '-';
    Element acc = term();
    if (negate) acc = ring_.neg(acc);
    while (peek('+') || peek('-')) {
      const bool minus = src_[pos_++] == '-';
      Element t = term();
      acc = minus ? ring_.sub(acc, t) : ring_.add(acc, t);
    }
    return acc;
  }

  Element term() {
    Element acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = ring_.mul(acc, power());
      } else if (starts_primary()) {
        acc = ring_.mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  Element power() {
    const std::size_t start = pos_;
    Element base = primary();
    if (!peek('^')) return base;
    ++pos_;
    const auto exponent = integer();
    // zeta^k is taken directly so negative exponents work on the generator.
    if (is_generator(start)) return ring_.zeta_power(exponent);
    if (exponent < 0) fail("negative exponent on a non-generator");
    return ring_.pow(base, static_cast<std::uint64_t>(exponent));
  }

  bool is_generator(std::size_t start) const {
    return start < src_.size() && std::isalpha(static_cast<unsigned char>(src_[start]));
  }

  std::int64_t integer() {
    bool negative = false;
    if (peek('-') || peek('+')) negative = src_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const auto digits = src_.substr(start, pos_ - start);
    if (digits.size() > 18) fail("integer too large");
    const auto v = std::stoll(digits);
    return negative ? -v : v;
  }

  Element primary() {
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_.embed_integer(integer());
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string name = src_.substr(start, pos_ - start);
      if (name == "z" || name == "zeta" || name == "a" || name == "zeta" + std::to_string(ring_.order())) {
        return ring_.zeta_power(1);
      }
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const Ring& ring, std::string_view text) { return PolynomialParser(ring, text).parse(); }

Element element_from_json(const Ring& ring, const nlohmann::json& j) {
  if (j.is_number_integer()) return ring.embed_integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_element(ring, j.get<std::string>());
  const nlohmann::json* coeffs = nullptr;
  if (j.is_object() && j.contains("coeffs")) coeffs = &j.at("coeffs");
  if (j.is_array()) coeffs = &j;
  if (coeffs && coeffs->is_array()) {
    std::vector<Coeff> c;
    for (const auto& v : *coeffs) {
      if (!v.is_number_integer()) throw ParseError("element coefficients must be integers");
      c.push_back(v.get<Coeff>());
    }
    if (c.size() > static_cast<std::size_t>(ring.degree())) {
      throw ParseError("element has more coefficients than the ring degree");
    }
    return ring.from_coeffs(c);
  }
  throw ParseError("unsupported element encoding: " + j.dump());
}

std::vector<Element> coefficient_list_from_json(const Ring& ring, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("coefficient list must be an array");
  std::vector<Element> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(element_from_json(ring, item));
  return out;
}

std::vector<Element> parse_coefficient_list(const Ring& ring, std::string_view text) {
  const auto parsed = nlohmann::json::parse(text, nullptr, false);
  if (!parsed.is_discarded()) return coefficient_list_from_json(ring, parsed);

  // Bracketed list of polynomial texts, split on top-level commas.
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("coefficient list must look like [a, b, ...]");
  s = s.substr(1, s.size() - 2);
  std::vector<Element> out;
  if (s.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || (s[k] == ',' && depth == 0)) {
      out.push_back(parse_element(ring, std::string_view(s).substr(start, k - start)));
      start = k + 1;
    } else if (s[k] == '(') {
      ++depth;
    } else if (s[k] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace charcong
