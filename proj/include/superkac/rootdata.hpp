#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "superkac/rational.hpp"

namespace superkac {

// sl(m+1/n+1). Simple roots are indexed by I = {-m, ..., n}; index 0 is the
// odd simple root. Matrices are (m+n+2)-square, rows/columns 1-based.
struct Shape {
  int m = 0;
  int n = 0;

  int rank() const { return m + n + 1; }
  int matrix_size() const { return m + n + 2; }
  bool contains(int i) const { return i >= -m && i <= n; }
  // Offset of index i in a rank-sized vector.
  int slot(int i) const { return i + m; }

  friend bool operator==(const Shape&, const Shape&) = default;
};

std::string to_string(const Shape& s);  // "sl(4/5)"

enum class Parity : std::uint8_t { even, odd };

// Positive root alpha_ij = alpha_i + ... + alpha_j with i <= j.
struct RootIndex {
  int i = 0;
  int j = 0;

  friend bool operator==(const RootIndex&, const RootIndex&) = default;
  friend auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

inline Parity parity(RootIndex r) {
  return r.i <= 0 && r.j >= 0 ? Parity::odd : Parity::even;
}

// Matrix positions (b, c), 1 <= b <= m+1, 1 <= c <= n+1, label the odd
// positive roots: beta_bc = alpha_{-(m-b+1), c-1} = eps_b - delta_c.
struct Position {
  int b = 0;
  int c = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

RootIndex odd_root_at(const Shape& s, Position p);
Position position_of(const Shape& s, RootIndex r);  // r must be odd

// Vectors in the basis eps_1..eps_{m+1}, delta_1..delta_{n+1} with
// (eps_a|eps_b) = delta_ab, (delta_a|delta_b) = -delta_ab.
struct EpsDelta {
  std::vector<Rational> eps;
  std::vector<Rational> delta;

  static EpsDelta zero(const Shape& s);
  EpsDelta& operator+=(const EpsDelta& o);
  EpsDelta& operator-=(const EpsDelta& o);
  friend EpsDelta operator+(EpsDelta a, const EpsDelta& b) { return a += b; }
  friend EpsDelta operator-(EpsDelta a, const EpsDelta& b) { return a -= b; }
  friend EpsDelta operator*(const Rational& k, EpsDelta a);
  friend bool operator==(const EpsDelta&, const EpsDelta&) = default;
};

Rational inner(const EpsDelta& u, const EpsDelta& v);
EpsDelta root_vector(const Shape& s, RootIndex r);
EpsDelta rho(const Shape& s);

// A weight given by its Dynkin labels a_i = Lambda(h_i), i in I.
struct Weight {
  Shape shape;
  std::vector<Rational> labels;

  static Weight zero(const Shape& s);
  const Rational& operator[](int i) const { return labels[shape.slot(i)]; }
  Rational& operator[](int i) { return labels[shape.slot(i)]; }

  // a_i integral for every index i != 0.
  bool is_integral() const;
  // a_i >= 0 for every even index i != 0.
  bool is_dominant() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

// Lift to eps/delta coordinates with the last delta coordinate fixed to 0.
// Lifts are unique up to the supertrace functional sum(eps) - sum(delta);
// quantities pairing a lift with a root do not depend on that choice.
EpsDelta lift(const Weight& w);
Weight weight_of(const Shape& s, const EpsDelta& v);

// Cartan matrix entry alpha_l(h_k).
int cartan_entry(const Shape& s, int k, int l);
int root_on_cartan(const Shape& s, RootIndex r, int k);
Weight root_weight(const Shape& s, RootIndex r);
Weight minus_roots(Weight w, const std::vector<RootIndex>& roots);

// Coordinates of v in the basis of simple roots, or empty if v is not an
// integral combination of them.
std::vector<Rational> simple_root_coords(const Shape& s, const EpsDelta& v);
// lambda >= mu iff lambda - mu is a nonnegative combination of simple roots.
bool dominates(const Shape& s, const EpsDelta& lambda, const EpsDelta& mu);

// Labels of w restricted to the index set of sub (sub.m <= m, sub.n <= n).
Weight restrict_to(const Weight& w, const Shape& sub);

// ---------------------------------------------------------------------------
// Basis of sl(m+1/n+1): lowering f_ij, Cartan h_k, raising e_ij. Generator ids
// are positions in the global PBW order (odd lowering, even lowering, Cartan,
// even raising, odd raising), so a normal-ordered monomial is a non-decreasing
// id sequence.

enum class Block : std::uint8_t { odd_lower, even_lower, cartan, even_raise, odd_raise };

struct Generator {
  Block block;
  RootIndex root;  // for Cartan elements root.i == root.j == k

  bool lowering() const { return block == Block::odd_lower || block == Block::even_lower; }
  bool raising() const { return block == Block::even_raise || block == Block::odd_raise; }
  bool cartan() const { return block == Block::cartan; }
  bool odd() const { return block == Block::odd_lower || block == Block::odd_raise; }
};

// Sparse linear combination of generators with integer coefficients.
using GenCombination = std::vector<std::pair<int, int>>;

struct MatrixEntry {
  int row;
  int col;
  int value;
};

class Basis {
 public:
  explicit Basis(const Shape& s);

  const Shape& shape() const { return shape_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int id) const { return gens_[id]; }
  bool odd(int id) const { return gens_[id].odd(); }

  int lowering(int i, int j) const;
  int raising(int i, int j) const;
  int cartan(int k) const;
  // The transpose anti-involution: f_ij <-> e_ij, h_k fixed.
  int transpose(int id) const { return transpose_[id]; }

  // Supercommutator [a, b], computed once from the matrix realization.
  const GenCombination& bracket(int a, int b) const { return brackets_[a * size() + b]; }

  // Root of the generator in simple-root coordinates (negative for lowering).
  const std::vector<int>& weight(int id) const { return weights_[id]; }

  const std::vector<MatrixEntry>& matrix(int id) const { return matrices_[id]; }
  // Expresses a matrix of sl(m+1/n+1) in the basis; throws if it is not in it.
  GenCombination decompose(const std::vector<MatrixEntry>& entries) const;

  std::string name(int id) const;  // "f(-2,1)", "h(0)", "e(1,1)"

 private:
  Shape shape_;
  std::vector<Generator> gens_;
  std::vector<int> lower_index_, raise_index_, cartan_index_;
  std::vector<int> transpose_;
  std::vector<GenCombination> brackets_;
  std::vector<std::vector<int>> weights_;
  std::vector<std::vector<MatrixEntry>> matrices_;

  int root_slot(int i, int j) const;
};

// Shared, immutable basis per shape. Thread-safe.
std::shared_ptr<const Basis> basis_for(const Shape& s);

// Root order used inside a PBW block: alpha_ij < alpha_kl iff j-i < l-k, or
// j-i == l-k and i > k.
bool root_less(RootIndex a, RootIndex b);

}  // namespace superkac
