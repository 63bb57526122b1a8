#include "superkac/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace superkac {

Element Element::monomial(const Monomial& m, const Rational& c) {
  Element x;
  x.add(m, c);
  return x;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Element::add_scaled(const Element& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [m, v] : x.terms_) add(m, v * c);
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::vector<Monomial> Element::sorted_monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, v] : terms_) out.push_back(m);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Engine::Engine(const Shape& s) : basis_(basis_for(s)) {}
Engine::Engine(std::shared_ptr<const Basis> basis) : basis_(std::move(basis)) {}

const Element& Engine::mul_gen(int g, const Monomial& m) {
  std::string key;
  key.reserve(m.size() + 1);
  key.push_back(static_cast<char>(g));
  key += m;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Element result;
  const int x = m.empty() ? -1 : factor(m, 0);
  if (m.empty() || g < x) {
    result.add(key, 1);
  } else if (g == x) {
    if (!basis_->odd(g)) result.add(key, 1);
  } else {
    // g x R = s x (g R) + [g, x] R
    const Monomial rest = m.substr(1);
    const Rational sign = basis_->odd(g) && basis_->odd(x) ? -1 : 1;
    const Element& g_rest = mul_gen(g, rest);
    for (const auto& [n, c] : g_rest.terms()) result.add_scaled(mul_gen(x, n), sign * c);
    for (const auto& [k, c] : basis_->bracket(g, x)) result.add_scaled(mul_gen(k, rest), c);
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

Element Engine::left_mul(int g, const Element& x) {
  Element out;
  for (const auto& [m, c] : x.terms()) out.add_scaled(mul_gen(g, m), c);
  return out;
}

Element Engine::multiply(const Element& a, const Element& b) {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    Element acc = b;
    for (std::size_t k = m.size(); k-- > 0;) acc = left_mul(factor(m, k), acc);
    out.add_scaled(acc, c);
  }
  return out;
}

Element Engine::product(const std::vector<int>& ids) {
  Element acc = Element::one();
  for (std::size_t k = ids.size(); k-- > 0;) acc = left_mul(ids[k], acc);
  return acc;
}

bool Engine::odd(const Monomial& m) const {
  bool p = false;
  for (std::size_t k = 0; k < m.size(); ++k) p ^= basis_->odd(factor(m, k));
  return p;
}

bool Engine::parity_homogeneous(const Element& x) const {
  if (x.is_zero()) return true;
  const bool p = odd(x.terms().begin()->first);
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) { return odd(t.first) == p; });
}

Element Engine::supercommutator(const Element& a, const Element& b) {
  if (!parity_homogeneous(a) || !parity_homogeneous(b)) {
    throw std::invalid_argument("supercommutator needs parity-homogeneous arguments");
  }
  Element out = multiply(a, b);
  if (a.is_zero() || b.is_zero()) return out;
  const bool both_odd = odd(a.terms().begin()->first) && odd(b.terms().begin()->first);
  out.add_scaled(multiply(b, a), both_odd ? 1 : -1);
  return out;
}

std::vector<int> Engine::weight(const Monomial& m) const {
  std::vector<int> w(shape().rank(), 0);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto& gw = basis_->weight(factor(m, k));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += gw[i];
  }
  return w;
}

bool Engine::has_raising(const Monomial& m) const {
  // Raising factors sort last.
  return !m.empty() && basis_->gen(factor(m, m.size() - 1)).raising();
}

Element Engine::phi(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    if (!has_raising(m)) out.add(m, c);
  }
  return out;
}

}  // namespace superkac
