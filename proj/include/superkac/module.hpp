#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <vector>

#include "superkac/pbw.hpp"

namespace superkac {

enum class Verdict { yes, no, skipped };

const char* to_string(Verdict v);

struct PrimitivityReport {
  Verdict overall = Verdict::yes;
  std::vector<std::pair<int, Verdict>> per_generator;  // simple index i -> e_i v == 0 ?
};

// Vectors x v_Lambda of the module induced from the highest weight vector
// v_Lambda, stored as elements of U(G^-) (lowering monomials only). The Kac
// module is the quotient in which every even-lowering part is read inside the
// simple G_0-module of highest weight Lambda.
class KacModule {
 public:
  explicit KacModule(const Weight& lambda);

  const Weight& highest_weight() const { return lambda_; }
  const Shape& shape() const { return lambda_.shape; }
  Engine& engine() { return engine_; }
  const Basis& basis() const { return engine_.basis(); }

  // (Lambda + wt m)(h_k) for a lowering monomial m.
  Rational cartan_value(int k, const Monomial& m) const;

  // x v_Lambda for an arbitrary x in U(G).
  Element evaluate(const Element& x);
  // Generator g acting on a vector.
  Element act(int g, const Element& v);

  // Weight of a lowering monomial relative to Lambda, in simple-root
  // coordinates (all entries <= 0).
  std::vector<int> weight(const Monomial& m) const { return engine_.weight(m); }
  Weight absolute_weight(const std::vector<int>& rel) const;

  // Splits v by odd prefix; each value holds the even-lowering remainders.
  std::map<Monomial, Element> odd_groups(const Element& v) const;

  // Is y v_Lambda zero in the simple G_0-module? y must be a single-weight
  // combination of even-lowering monomials. The pairing with every
  // even-lowering monomial of the same weight is computed; more than
  // `max_monomials` of them yields `skipped`.
  Verdict shapovalov_zero(const Element& y, std::size_t max_monomials);
  // Is v zero in the Kac module?
  Verdict kac_zero(const Element& v, std::size_t max_monomials);

 private:
  Weight lambda_;
  Engine engine_;
  std::vector<std::vector<int>> cartan_;  // cartan_[k][l] = alpha_l(h_k), slots
  std::unordered_map<std::string, Element> raise_memo_;

  const Element& act_raising(int e, const Monomial& m);
  void add_action(int g, const Monomial& m, const Rational& c, Element& out);
};

}  // namespace superkac
