#include "superkac/chi.hpp"

#include <algorithm>
#include <stdexcept>

namespace superkac {

Rational ChiContext::c(int j) const {
  for (std::size_t k = 0; k < J.size(); ++k) {
    if (J[k] == j) return C[k];
  }
  throw std::out_of_range("index not in J");
}

ChiContext ChiContext::shifted(const Rational& by) const {
  ChiContext out = *this;
  for (auto& c : out.C) c += by;
  return out;
}

namespace {

void check_index(const Shape& s, int i) {
  if (i == 0 || !s.contains(i)) throw std::invalid_argument("chi index must be a nonzero member of I");
}

void check_no_raising(const Engine& eng, const Element& g) {
  for (const auto& [m, c] : g.terms()) {
    if (eng.has_raising(m)) throw std::invalid_argument("chi applied to an element with raising factors");
  }
}

}  // namespace

Element omega(Engine& eng, int i) {
  const Shape& s = eng.shape();
  check_index(s, i);
  Element out;
  if (i < 0) {
    out = Element::scalar(s.m + 1 + i);
    for (int k = -s.m; k <= i; ++k) out += eng.h(k);
  } else {
    out = Element::scalar(s.n + 1 - i);
    for (int k = i; k <= s.n; ++k) out += eng.h(k);
  }
  return out;
}

Element Omega(Engine& eng, int i) {
  const Shape& s = eng.shape();
  check_index(s, i);
  Element out = Element::one();
  const int lo = i < 0 ? -s.m : i;
  const int hi = i < 0 ? i : s.n;
  for (int k = lo; k <= hi; ++k) {
    const int a = i < 0 ? k : i;
    const int b = i < 0 ? i : k;
    out -= eng.product({eng.basis().lowering(a, b), eng.basis().raising(a, b)});
  }
  return out;
}

Element X(Engine& eng, int i) { return omega(eng, i) + Omega(eng, i); }

Element chi_ic(Engine& eng, int i, const Rational& c, const Element& g) {
  const Shape& s = eng.shape();
  check_index(s, i);
  check_no_raising(eng, g);
  // phi(f e g) = f phi(e g): left multiplication by a lowering generator
  // leaves the raising block of each monomial untouched.
  Element out = (c + 1) * g;
  const int lo = i < 0 ? -s.m : i;
  const int hi = i < 0 ? i : s.n;
  for (int k = lo; k <= hi; ++k) {
    const int a = i < 0 ? k : i;
    const int b = i < 0 ? i : k;
    Element eg = eng.phi(eng.left_mul(eng.basis().raising(a, b), g));
    out -= eng.left_mul(eng.basis().lowering(a, b), eg);
  }
  return out;
}

Element chi_i(Engine& eng, int i, const Element& g) {
  check_no_raising(eng, g);
  return eng.phi(eng.multiply(X(eng, i), g));
}

Element chi_JC(Engine& eng, const ChiContext& ctx, const Element& g) {
  if (ctx.J.size() != ctx.C.size()) throw std::invalid_argument("J and C differ in length");
  Element out = g;
  for (std::size_t k = 0; k < ctx.J.size(); ++k) out = chi_ic(eng, ctx.J[k], ctx.C[k], out);
  return out;
}

Element chi_J(Engine& eng, const std::vector<int>& J, const Element& g) {
  Element out = g;
  for (int j : J) out = chi_i(eng, j, out);
  return out;
}

Element expand_chi_f(Engine& eng, const ChiContext& ctx, int r, int s) {
  const Basis& basis = eng.basis();
  if (r < 0 || s < 0 || !basis.shape().contains(-r) || !basis.shape().contains(s)) {
    throw std::invalid_argument("f_{-r,s} outside the shape");
  }
  std::vector<int> neg, pos;  // neg descending (closest to 0 first), pos ascending
  for (int j : ctx.J) {
    if (j < 0 && j >= -r) {
      neg.push_back(j);
    } else if (j > 0 && j <= s) {
      pos.push_back(j);
    } else {
      throw std::invalid_argument("J must lie in {-r..-1} u {1..s}");
    }
  }
  std::sort(neg.begin(), neg.end(), std::greater<>());
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(neg.begin(), neg.end()) != neg.end() ||
      std::adjacent_find(pos.begin(), pos.end()) != pos.end()) {
    throw std::invalid_argument("J has repeated indices");
  }

  Element out;
  for (unsigned kmask = 0; kmask < (1u << neg.size()); ++kmask) {
    std::vector<int> K;
    Rational coeff = 1;
    for (std::size_t a = 0; a < neg.size(); ++a) {
      if (kmask & (1u << a)) {
        K.push_back(neg[a]);
      } else {
        coeff *= ctx.c(neg[a]);
      }
    }
    for (unsigned lmask = 0; lmask < (1u << pos.size()); ++lmask) {
      std::vector<int> L;
      Rational term = coeff;
      for (std::size_t b = 0; b < pos.size(); ++b) {
        if (lmask & (1u << b)) {
          L.push_back(pos[b]);
        } else {
          term *= ctx.c(pos[b]);
        }
      }
      if (L.size() % 2) term = -term;
      if (term == 0) continue;

      std::vector<int> ids;
      const int j0 = K.empty() ? -r : K.front() + 1;
      const int i0 = L.empty() ? s : L.front() - 1;
      ids.push_back(basis.lowering(j0, i0));
      for (std::size_t a = 0; a < K.size(); ++a) {
        const int from = a + 1 < K.size() ? K[a + 1] + 1 : -r;
        ids.push_back(basis.lowering(from, K[a]));
      }
      for (std::size_t b = 0; b < L.size(); ++b) {
        const int to = b + 1 < L.size() ? L[b + 1] - 1 : s;
        ids.push_back(basis.lowering(L[b], to));
      }
      out.add_scaled(eng.product(ids), term);
    }
  }
  return out;
}

Rational c_of(const Weight& lambda, int i) {
  const Shape& s = lambda.shape;
  if (i == 0 || !s.contains(i)) throw std::invalid_argument("c_i needs a nonzero index of the shape");
  Rational sum = 0;
  if (i < 0) {
    for (int k = -s.m; k <= i; ++k) sum += lambda[k];
    return sum + s.m + i;
  }
  for (int k = i; k <= s.n; ++k) sum += lambda[k];
  return sum + s.n - i;
}

Element embed(const Element& x, const Basis& from, const Basis& to) {
  const Shape& a = from.shape();
  const Shape& b = to.shape();
  if (a.m > b.m || a.n > b.n) throw std::invalid_argument("embedding into a smaller shape");
  std::vector<char> map(from.size());
  for (int id = 0; id < from.size(); ++id) {
    const auto& g = from.gen(id);
    int target = g.cartan() ? to.cartan(g.root.i)
                 : g.lowering() ? to.lowering(g.root.i, g.root.j)
                                : to.raising(g.root.i, g.root.j);
    map[id] = static_cast<char>(target);
  }
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Monomial t(m.size(), '\0');
    for (std::size_t k = 0; k < m.size(); ++k) t[k] = map[factor(m, k)];
    out.add(t, c);
  }
  return out;
}

}  // namespace superkac
