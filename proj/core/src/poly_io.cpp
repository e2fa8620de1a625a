#include "hyperlie/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string_view>
#include <tuple>

namespace hyperlie {

std::vector<const Term*> canonical_terms(const Poly& p) {
  // Key: weight, then the (name, exponent) factors in name order.
  using Factors = std::vector<std::pair<std::string_view, unsigned>>;
  const Ring& ring = *p.ring();
  std::vector<std::tuple<int, Factors, const Term*>> keyed;
  keyed.reserve(p.size());
  for (const auto& t : p.terms()) {
    Factors f;
    for (std::size_t v = 0; v < ring.size(); ++v) {
      if (const unsigned e = t.monomial.exponent(v)) f.emplace_back(ring.var(v).name, e);
    }
    std::sort(f.begin(), f.end());
    keyed.emplace_back(t.monomial.weight(ring), std::move(f), &t);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<const Term*> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.push_back(std::get<2>(k));
  return out;
}

namespace {

std::string monomial_text(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t v = 0; v < ring.size(); ++v) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var(v).name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term* t : canonical_terms(p)) {
    const bool negative = sgn(t->coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t->coeff);
    if (t->monomial.is_one()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + '*';
      out += monomial_text(t->monomial, *p.ring());
    }
  }
  return out;
}

nlohmann::json to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term* t : canonical_terms(p)) {
    nlohmann::json m = nlohmann::json::object();
    for (std::size_t v = 0; v < p.ring()->size(); ++v) {
      if (const unsigned e = t->monomial.exponent(v)) m[p.ring()->var(v).name] = e;
    }
    terms.push_back({{"c", to_string(t->coeff)}, {"m", std::move(m)}});
  }
  return {{"terms", std::move(terms)}};
}

Poly poly_from_json(const RingPtr& ring, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("polynomial JSON must be an object with a 'terms' array");
  }
  std::vector<Term> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.contains("c") || !t["c"].is_string()) throw ParseError("term without string coefficient 'c'");
    Monomial m;
    if (t.contains("m")) {
      for (const auto& [name, e] : t["m"].items()) {
        if (!e.is_number_unsigned()) throw ParseError("exponent of " + name + " must be a positive integer");
        m.set_exponent(ring->index_of(name), e.get<unsigned>());
      }
    }
    terms.push_back({m, parse_rational(t["c"].get<std::string>())});
  }
  return Poly(ring, std::move(terms));
}

std::string latex_symbol(std::string_view name) {
  std::size_t split = 0;
  while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split])) != 0) ++split;
  std::string head(name.substr(0, split));
  std::string tail(name.substr(split));
  static const std::vector<std::pair<std::string, std::string>> greek = {
      {"l", "\\lambda"}, {"alpha", "\\alpha"}, {"beta", "\\beta"}, {"gamma", "\\gamma"}};
  for (const auto& [ascii, tex] : greek) {
    if (head == ascii) head = tex;
  }
  if (tail.empty()) return head;
  std::replace(tail.begin(), tail.end(), '_', ',');
  return head + "_{" + tail + "}";
}

std::string to_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term* t : canonical_terms(p)) {
    const bool negative = sgn(t->coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t->coeff);
    const bool unit = magnitude == 1 && !t->monomial.is_one();
    if (!unit) {
      if (magnitude.get_den() == 1) {
        out += magnitude.get_num().get_str();
      } else {
        out += "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
      }
    }
    bool spaced = unit;
    for (std::size_t v = 0; v < p.ring()->size(); ++v) {
      const unsigned e = t->monomial.exponent(v);
      if (e == 0) continue;
      if (!spaced) out += ' ';
      spaced = false;
      out += latex_symbol(p.ring()->var(v).name);
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, const SymbolResolver& resolve)
      : ring_(ring), text_(text), resolve_(resolve) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Poly product() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const Poly d = unary();
        const auto c = d.constant_value();
        if (!c) fail("division by a non-constant");
        if (sgn(*c) == 0) fail("division by zero");
        acc *= Rational(1 / *c);
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected exponent");
      return hyperlie::pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      return Poly::constant(ring_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (resolve_) {
        if (auto p = resolve_(name)) return std::move(*p);
      }
      if (auto v = ring_->find(name)) return Poly::variable(ring_, *v);
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  const RingPtr& ring_;
  std::string_view text_;
  const SymbolResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text, const SymbolResolver& resolve) {
  return Parser(ring, text, resolve).parse();
}

}  // namespace hyperlie
