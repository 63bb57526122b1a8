#pragma once

#include <string>
#include <vector>

#include "superkac/rootdata.hpp"

namespace superkac {

// A(Lambda)_bc = <Lambda + rho | beta_bc>, rows 1..m+1 (top first), columns 1..n+1.
struct AtypMatrix {
  Shape shape;
  std::vector<Rational> entries;  // row-major

  int rows() const { return shape.m + 1; }
  int cols() const { return shape.n + 1; }
  const Rational& at(int b, int c) const { return entries[(b - 1) * cols() + (c - 1)]; }
  Rational& at(int b, int c) { return entries[(b - 1) * cols() + (c - 1)]; }

  friend bool operator==(const AtypMatrix&, const AtypMatrix&) = default;
};

AtypMatrix atyp_matrix(const Weight& w);
// Same matrix computed from inner products with the lifted weight.
AtypMatrix atyp_matrix_by_inner(const Weight& w);
// Inverse of atyp_matrix; throws std::invalid_argument when the entries are
// not additive (A_bc + A_de != A_be + A_dc for some b, c, d, e).
Weight weight_from_matrix(const AtypMatrix& a);

// Zero entries gamma_1 < ... < gamma_r, i.e. by increasing column.
std::vector<Position> atypical_roots(const AtypMatrix& a);

enum class Relation : char { n = 'n', q = 'q', c = 'c' };

// Pairwise classification of atypical roots, s < t (1-based).
class NqcType {
 public:
  NqcType() = default;
  explicit NqcType(int r) : r_(r), rel_(static_cast<std::size_t>(r) * r, Relation::n) {}

  int r() const { return r_; }
  Relation at(int s, int t) const { return rel_[(s - 1) * r_ + (t - 1)]; }
  void set(int s, int t, Relation v) { rel_[(s - 1) * r_ + (t - 1)] = v; }

  // One row per t = r, r-1, ..., 2 listing s = 1..t-1, e.g. "cccc/cqc/qn/c".
  std::string to_string() const;
  static NqcType parse(int r, const std::string& rows);

  friend bool operator==(const NqcType&, const NqcType&) = default;

 private:
  int r_ = 0;
  std::vector<Relation> rel_;
};

// x_st: the entry in the row of gamma_t and the column of gamma_s.
Rational x_entry(const AtypMatrix& a, const std::vector<Position>& roots, int s, int t);
// h_st = b_s - b_t + c_t - c_s + 1.
int hook_length(const std::vector<Position>& roots, int s, int t);
Relation relation(const AtypMatrix& a, const std::vector<Position>& roots, int s, int t);

NqcType nqc(const AtypMatrix& a);
NqcType nqc(const Weight& w);

struct Classification {
  int r = 0;  // 0 means typical
  std::vector<Position> roots;
};

// Requires a dominant integral weight; throws std::invalid_argument otherwise.
Classification classify(const Weight& w);

}  // namespace superkac
