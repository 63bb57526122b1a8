#include "superkac/module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace superkac {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

KacModule::KacModule(const Weight& lambda) : lambda_(lambda), engine_(lambda.shape) {
  const Shape& s = lambda.shape;
  cartan_.assign(s.rank(), std::vector<int>(s.rank(), 0));
  for (int k = -s.m; k <= s.n; ++k) {
    for (int l = -s.m; l <= s.n; ++l) cartan_[s.slot(k)][s.slot(l)] = cartan_entry(s, k, l);
  }
}

Rational KacModule::cartan_value(int k, const Monomial& m) const {
  const Shape& s = shape();
  Rational v = lambda_[k];
  const auto w = engine_.weight(m);
  const auto& row = cartan_[s.slot(k)];
  for (int l = 0; l < s.rank(); ++l) v += w[l] * row[l];
  return v;
}

Weight KacModule::absolute_weight(const std::vector<int>& rel) const {
  const Shape& s = shape();
  Weight out = lambda_;
  for (int k = -s.m; k <= s.n; ++k) {
    for (int l = 0; l < s.rank(); ++l) out[k] += rel[l] * cartan_[s.slot(k)][l];
  }
  return out;
}

Element KacModule::evaluate(const Element& x) {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    std::size_t p = 0;
    while (p < m.size() && basis().gen(factor(m, p)).lowering()) ++p;
    Rational value = c;
    bool killed = false;
    for (std::size_t k = p; k < m.size() && !killed; ++k) {
      const auto& g = basis().gen(factor(m, k));
      if (g.raising()) {
        killed = true;
      } else {
        value *= lambda_[g.root.i];
      }
    }
    if (!killed) out.add(m.substr(0, p), value);
  }
  return out;
}

void KacModule::add_action(int g, const Monomial& m, const Rational& c, Element& out) {
  const auto& gen = basis().gen(g);
  if (gen.lowering()) {
    out.add_scaled(engine_.mul_gen(g, m), c);
  } else if (gen.cartan()) {
    out.add(m, c * cartan_value(gen.root.i, m));
  } else {
    out.add_scaled(act_raising(g, m), c);
  }
}

const Element& KacModule::act_raising(int e, const Monomial& m) {
  std::string key;
  key.push_back(static_cast<char>(e));
  key += m;
  if (auto it = raise_memo_.find(key); it != raise_memo_.end()) return it->second;

  Element result;
  if (!m.empty()) {
    // e x R v = s x (e R v) + [e, x] R v
    const int x = factor(m, 0);
    const Monomial rest = m.substr(1);
    const Rational sign = basis().odd(e) && basis().odd(x) ? -1 : 1;
    const Element& e_rest = act_raising(e, rest);
    for (const auto& [n, d] : e_rest.terms()) result.add_scaled(engine_.mul_gen(x, n), sign * d);
    for (const auto& [k, b] : basis().bracket(e, x)) add_action(k, rest, b, result);
  }
  return raise_memo_.emplace(std::move(key), std::move(result)).first->second;
}

Element KacModule::act(int g, const Element& v) {
  Element out;
  for (const auto& [m, c] : v.terms()) add_action(g, m, c, out);
  return out;
}

std::map<Monomial, Element> KacModule::odd_groups(const Element& v) const {
  std::map<Monomial, Element> groups;
  for (const auto& [m, c] : v.terms()) {
    std::size_t p = 0;
    while (p < m.size() && basis().gen(factor(m, p)).block == Block::odd_lower) ++p;
    groups[m.substr(0, p)].add(m.substr(p), c);
  }
  return groups;
}

Verdict KacModule::shapovalov_zero(const Element& y, std::size_t max_monomials) {
  if (y.is_zero()) return Verdict::yes;
  const Shape& s = shape();
  const auto& first = y.terms().begin()->first;
  const auto target = weight(first);
  for (const auto& [m, c] : y.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (basis().gen(factor(m, k)).block != Block::even_lower) {
        throw std::invalid_argument("shapovalov_zero needs even-lowering monomials");
      }
    }
    if (weight(m) != target) throw std::invalid_argument("shapovalov_zero needs a single weight");
  }

  std::vector<int> ids;
  for (int id = 0; id < basis().size(); ++id) {
    if (basis().gen(id).block == Block::even_lower) ids.push_back(id);
  }
  std::vector<int> rem(s.rank());
  for (int l = 0; l < s.rank(); ++l) rem[l] = -target[l];

  auto fits = [&](int id, const std::vector<int>& left) {
    const auto& w = basis().weight(id);
    for (int l = 0; l < s.rank(); ++l) {
      if (-w[l] > left[l]) return false;
    }
    return true;
  };
  auto take = [&](int id, std::vector<int>& left, int sign) {
    const auto& w = basis().weight(id);
    for (int l = 0; l < s.rank(); ++l) left[l] += sign * w[l];
  };
  auto done = [](const std::vector<int>& left) {
    return std::all_of(left.begin(), left.end(), [](int v) { return v == 0; });
  };

  // Size of the weight space of U(G_0^-), with early exit past the cap.
  std::size_t count = 0;
  std::function<void(std::size_t, std::vector<int>&)> count_from = [&](std::size_t start, std::vector<int>& left) {
    if (count > max_monomials) return;
    if (done(left)) {
      ++count;
      return;
    }
    for (std::size_t k = start; k < ids.size(); ++k) {
      if (!fits(ids[k], left)) continue;
      take(ids[k], left, 1);
      count_from(k, left);
      take(ids[k], left, -1);
    }
  };
  count_from(0, rem);
  if (count > max_monomials) return Verdict::skipped;

  // <u v, y v> for every PBW monomial u: apply the transposed factors of u in
  // order to y v and read off the coefficient of v.
  bool nonzero = false;
  std::function<void(const Element&, std::size_t, std::vector<int>&)> pair_from =
      [&](const Element& w, std::size_t start, std::vector<int>& left) {
        if (nonzero) return;
        if (done(left)) {
          if (w.coefficient({}) != 0) nonzero = true;
          return;
        }
        for (std::size_t k = start; k < ids.size() && !nonzero; ++k) {
          if (!fits(ids[k], left)) continue;
          Element next = act(basis().transpose(ids[k]), w);
          if (next.is_zero()) continue;
          take(ids[k], left, 1);
          pair_from(next, k, left);
          take(ids[k], left, -1);
        }
      };
  pair_from(y, 0, rem);
  return nonzero ? Verdict::no : Verdict::yes;
}

Verdict KacModule::kac_zero(const Element& v, std::size_t max_monomials) {
  bool skipped = false;
  for (const auto& [odd, even] : odd_groups(v)) {
    // A vector need not be weight-homogeneous; split each group by weight.
    std::map<std::vector<int>, Element> by_weight;
    for (const auto& [m, c] : even.terms()) by_weight[weight(m)].add(m, c);
    for (const auto& [w, y] : by_weight) {
      Verdict part = shapovalov_zero(y, max_monomials);
      if (part == Verdict::no) return Verdict::no;
      if (part == Verdict::skipped) skipped = true;
    }
  }
  return skipped ? Verdict::skipped : Verdict::yes;
}

}  // namespace superkac
