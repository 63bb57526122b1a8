#include "superkac/format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "superkac/pbw.hpp"

namespace superkac {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool compact_segment(const std::string& seg) {
  int digits = 0;
  for (char ch : seg) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      ++digits;
    } else if (ch != '-') {
      return false;
    }
  }
  return digits > 1;
}

std::vector<Rational> parse_segment(const std::string& raw, bool outer) {
  const std::string seg = trim(raw);
  std::vector<Rational> out;
  if (seg.empty()) return out;
  if (outer && compact_segment(seg)) {
    bool negative = false;
    for (char ch : seg) {
      if (ch == '-') {
        if (negative) throw std::invalid_argument("malformed weight segment '" + seg + "'");
        negative = true;
        continue;
      }
      out.emplace_back(negative ? -(ch - '0') : ch - '0');
      negative = false;
    }
    if (negative) throw std::invalid_argument("dangling sign in weight segment '" + seg + "'");
    return out;
  }
  std::istringstream in(seg);
  std::string token;
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (token.empty()) throw std::invalid_argument("empty label in weight segment '" + seg + "'");
    out.push_back(parse_rational(token));
  }
  if (seg.back() == ',') throw std::invalid_argument("trailing ',' in weight segment '" + seg + "'");
  return out;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw std::invalid_argument("weight must be written as [a..;a0;a..]");
  }
  const std::string body = t.substr(1, t.size() - 2);
  const auto p1 = body.find(';');
  const auto p2 = p1 == std::string::npos ? std::string::npos : body.find(';', p1 + 1);
  if (p2 == std::string::npos || body.find(';', p2 + 1) != std::string::npos) {
    throw std::invalid_argument("weight needs exactly two ';' separators");
  }
  auto left = parse_segment(body.substr(0, p1), true);
  auto mid = parse_segment(body.substr(p1 + 1, p2 - p1 - 1), false);
  auto right = parse_segment(body.substr(p2 + 1), true);
  if (mid.size() != 1) throw std::invalid_argument("the middle segment must hold exactly one label");
  Shape s{static_cast<int>(left.size()), static_cast<int>(right.size())};
  Weight w = Weight::zero(s);
  for (int k = 0; k < s.m; ++k) w[-s.m + k] = left[k];
  w[0] = mid[0];
  for (int k = 0; k < s.n; ++k) w[k + 1] = right[k];
  return w;
}

std::string to_string(const Weight& w) {
  const Shape& s = w.shape;
  std::string out = "[";
  for (int i = -s.m; i < 0; ++i) {
    if (i > -s.m) out += ',';
    out += to_string(w[i]);
  }
  out += ';' + to_string(w[0]) + ';';
  for (int i = 1; i <= s.n; ++i) {
    if (i > 1) out += ',';
    out += to_string(w[i]);
  }
  return out + "]";
}

std::string compact(const Weight& w) {
  const Shape& s = w.shape;
  auto digit_ok = [](const Rational& q) { return is_integer(q) && q >= -9 && q <= 9; };
  for (int i = -s.m; i <= s.n; ++i) {
    if (i != 0 && !digit_ok(w[i])) return to_string(w);
  }
  std::string out = "[";
  for (int i = -s.m; i < 0; ++i) out += to_string(w[i]);
  out += ';' + to_string(w[0]) + ';';
  for (int i = 1; i <= s.n; ++i) out += to_string(w[i]);
  return out + "]";
}

std::string to_string(const Element& x, const Basis& basis) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& m : x.sorted_monomials()) {
    Rational c = x.coefficient(m);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    out += to_string(Rational(abs(c)));
    if (m.empty()) continue;
    out += " *";
    for (std::size_t k = 0; k < m.size();) {
      std::size_t run = 1;
      while (k + run < m.size() && m[k + run] == m[k]) ++run;
      out += ' ' + basis.name(factor(m, k));
      if (run > 1) out += '^' + std::to_string(run);
      k += run;
    }
  }
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(const Basis& basis, const std::string& text) : basis_(basis), text_(text) {}

  std::vector<std::pair<Rational, std::vector<int>>> terms() {
    std::vector<std::pair<Rational, std::vector<int>>> out;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '0' && trim(text_.substr(pos_)) == "0") return out;
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      Rational sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coeff = 1;
      bool had_coeff = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
          ++pos_;
        }
        coeff = parse_rational(text_.substr(start, pos_ - start));
        had_coeff = true;
        skip();
        if (pos_ < text_.size() && text_[pos_] == '*') {
          ++pos_;
        } else {
          out.push_back({sign * coeff, {}});
          continue;
        }
      }
      std::vector<int> ids;
      while (true) {
        skip();
        if (pos_ >= text_.size() || (text_[pos_] != 'f' && text_[pos_] != 'e' && text_[pos_] != 'h')) break;
        int id = parse_factor();
        int power = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          power = parse_int();
          if (power < 1) fail("exponent must be positive");
        }
        for (int k = 0; k < power; ++k) ids.push_back(id);
      }
      if (ids.empty() && had_coeff) fail("expected a factor after '*'");
      if (ids.empty() && !had_coeff) fail("expected a term");
      out.push_back({sign * coeff, ids});
    }
    return out;
  }

 private:
  const Basis& basis_;
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("element text: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  int parse_int() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    return std::stoi(text_.substr(start, pos_ - start));
  }
  void expect(char ch) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  int parse_factor() {
    const char kind = text_[pos_++];
    expect('(');
    const int i = parse_int();
    int j = i;
    if (kind != 'h') {
      expect(',');
      j = parse_int();
    }
    expect(')');
    try {
      if (kind == 'h') return basis_.cartan(i);
      return kind == 'f' ? basis_.lowering(i, j) : basis_.raising(i, j);
    } catch (const std::out_of_range&) {
      fail("generator outside the shape");
    }
  }
};

}  // namespace

Element parse_element(const Shape& s, const std::string& text) {
  Engine eng(s);
  Element out;
  ElementParser parser(eng.basis(), text);
  for (const auto& [c, ids] : parser.terms()) out.add_scaled(eng.product(ids), c);
  return out;
}

}  // namespace superkac
