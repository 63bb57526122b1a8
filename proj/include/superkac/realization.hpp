#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "superkac/module.hpp"

namespace superkac {

// The simple G_0-module of highest weight Lambda, realized inside a tensor
// product of exterior powers: for each even index k the fundamental module
// Lambda^p C^N of the matching gl block appears a_k times, and V_0(Lambda) is
// the submodule generated by the tensor of highest weight vectors. A state is
// one byte per tensor factor holding the wedge subset as a bitmask.
class EvenModule {
 public:
  using State = std::string;
  using Vec = std::unordered_map<State, Rational>;

  // Labels at even indices must be nonnegative integers.
  EvenModule(const Weight& lambda, std::shared_ptr<const Basis> basis);

  const State& highest() const { return highest_; }
  // Weight of a state relative to Lambda, simple-root coordinates by slot.
  std::vector<int> weight(const State& s) const;
  Rational cartan_value(int k, const State& s) const;

  // Even generator (lowering, raising or Cartan) applied to c * state.
  void apply(int id, const State& s, const Rational& c, Vec& out) const;

 private:
  struct Factor {
    bool right;  // block gl(n+1) rather than gl(m+1)
    int p;       // wedge degree
  };
  struct Entry {
    bool right;
    int a, b;  // local 0-based row and column
    int value;
  };

  Weight lambda_;
  std::shared_ptr<const Basis> basis_;
  std::vector<Factor> factors_;
  State highest_;
  std::vector<std::vector<Entry>> entries_;  // per generator id, even roots only
};

// A vector of the Kac module: odd-lowering monomial b (ids ascending) mapped to
// the V_0 component it multiplies.
struct KacVector {
  std::map<Monomial, EvenModule::Vec> parts;

  bool is_zero() const { return parts.empty(); }
  std::size_t size() const;
  void add(const Monomial& odd, const EvenModule::State& s, const Rational& c);
  void add_scaled(const KacVector& v, const Rational& c);
  friend bool operator==(const KacVector&, const KacVector&) = default;
};

class KacRealization {
 public:
  explicit KacRealization(const Weight& lambda);

  const Weight& highest_weight() const { return lambda_; }
  const Basis& basis() const { return *basis_; }
  const EvenModule& even() const { return even_; }

  KacVector highest() const;
  KacVector apply(int id, const KacVector& v) const;
  // x v, with x in U(G) given in normal order; factors act right to left.
  KacVector apply(const Element& x, const KacVector& v) const;
  KacVector evaluate(const Element& x) const { return apply(x, highest()); }

  // Relative weight of a term (simple-root coordinates by slot).
  std::vector<int> weight(const Monomial& odd, const EvenModule::State& s) const;
  // Absolute weight of a weight-homogeneous nonzero vector; throws otherwise.
  Weight vector_weight(const KacVector& v) const;

 private:
  Weight lambda_;
  std::shared_ptr<const Basis> basis_;
  EvenModule even_;

  void apply_term(int id, const Monomial& odd, const EvenModule::State& s, const Rational& c, KacVector& out) const;
  void apply_even(int id, const Monomial& odd, const EvenModule::State& s, const Rational& c, KacVector& out) const;
  void wedge(int id, const Monomial& odd, const EvenModule::State& s, const Rational& c, KacVector& out) const;
};

struct RealizationOptions {
  bool parallel = true;
};

// e_i v == 0 for every simple index, computed in the realization.
PrimitivityReport is_primitive(const KacRealization& kac, const KacVector& v, const RealizationOptions& opts = {});
PrimitivityReport is_primitive_serial(const KacRealization& kac, const KacVector& v);

}  // namespace superkac
