#pragma once

#include <vector>

#include "superkac/pbw.hpp"

namespace superkac {

// Index set J with one coefficient per index. Indices are nonzero members of
// the shape's index set; the operators commute, so order only matters for the
// pairing with C.
struct ChiContext {
  std::vector<int> J;
  std::vector<Rational> C;

  Rational c(int j) const;
  // C(1): every coefficient shifted by one.
  ChiContext shifted(const Rational& by = 1) const;
};

// Zero-weight elements of U(G_0): omega_i is a constant plus Cartan part,
// Omega_i = 1 - sum f e over the even roots ending (i < 0) or starting
// (i > 0) at i, and X_i = omega_i + Omega_i.
Element omega(Engine& eng, int i);
Element Omega(Engine& eng, int i);
Element X(Engine& eng, int i);

// chi_{i,c} g = c g + phi(Omega_i g), chi_i g = phi(X_i g). The argument must
// not contain raising factors.
Element chi_ic(Engine& eng, int i, const Rational& c, const Element& g);
Element chi_i(Engine& eng, int i, const Element& g);
Element chi_JC(Engine& eng, const ChiContext& ctx, const Element& g);
Element chi_J(Engine& eng, const std::vector<int>& J, const Element& g);

// Closed form of chi_{J,C} f_{-r,s} as a signed sum over subsets of the
// negative and positive parts of J. Requires J within {-r..-1} u {1..s};
// r or s may be 0, in which case that part of J is empty.
Element expand_chi_f(Engine& eng, const ChiContext& ctx, int r, int s);

// c_i(lambda): sum_{k=-m}^{i} lambda(h_k) + m + i for i < 0 and
// sum_{k=i}^{n} lambda(h_k) + n - i for i > 0.
Rational c_of(const Weight& lambda, int i);

// Maps an element of U(G) for a smaller shape into a larger one along the
// index-preserving embedding. Throws if `to` does not contain `from`.
Element embed(const Element& x, const Basis& from, const Basis& to);

}  // namespace superkac
