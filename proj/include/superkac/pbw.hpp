#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "superkac/rootdata.hpp"

namespace superkac {

// A normal-ordered PBW monomial: non-decreasing generator ids of a Basis, one
// byte per factor. Odd ids never repeat.
using Monomial = std::string;

inline int factor(const Monomial& m, std::size_t k) { return static_cast<unsigned char>(m[k]); }

class Element {
 public:
  using Terms = std::unordered_map<Monomial, Rational>;

  Element() = default;
  static Element one() { return monomial({}, 1); }
  static Element monomial(const Monomial& m, const Rational& c = 1);
  static Element scalar(const Rational& c) { return monomial({}, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);
  void add_scaled(const Element& x, const Rational& c);
  Element& operator+=(const Element& x) {
    add_scaled(x, 1);
    return *this;
  }
  Element& operator-=(const Element& x) {
    add_scaled(x, -1);
    return *this;
  }
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  // Monomials sorted by (degree, then bytes) for deterministic output.
  std::vector<Monomial> sorted_monomials() const;

 private:
  Terms terms_;
};

// Normal-ordering engine for U(sl(m+1/n+1)). Products are memoized per
// (generator, monomial); an Engine is not thread-safe, so give each thread
// its own.
class Engine {
 public:
  explicit Engine(const Shape& s);
  explicit Engine(std::shared_ptr<const Basis> basis);

  const Basis& basis() const { return *basis_; }
  const Shape& shape() const { return basis_->shape(); }

  Element gen(int id) const { return Element::monomial(Monomial(1, static_cast<char>(id))); }
  Element f(int i, int j) const { return gen(basis_->lowering(i, j)); }
  Element e(int i, int j) const { return gen(basis_->raising(i, j)); }
  Element h(int k) const { return gen(basis_->cartan(k)); }

  // g * m for a single generator and a normal-ordered monomial.
  const Element& mul_gen(int g, const Monomial& m);
  Element left_mul(int g, const Element& x);
  Element multiply(const Element& a, const Element& b);
  // Normal form of a product of generators given in arbitrary order.
  Element product(const std::vector<int>& ids);
  // [a, b] = ab - (-1)^{|a||b|} ba; a and b must be homogeneous in parity.
  Element supercommutator(const Element& a, const Element& b);

  bool odd(const Monomial& m) const;
  bool parity_homogeneous(const Element& x) const;
  // Weight in simple-root coordinates.
  std::vector<int> weight(const Monomial& m) const;
  bool has_raising(const Monomial& m) const;

  // Drops every monomial with a raising factor.
  Element phi(const Element& x) const;

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::shared_ptr<const Basis> basis_;
  std::unordered_map<std::string, Element> memo_;
};

}  // namespace superkac
