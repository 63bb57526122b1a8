#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superkac/chains.hpp"
#include "superkac/chi.hpp"
#include "superkac/module.hpp"
#include "superkac/realization.hpp"

namespace superkac {

struct VerifyOptions {
  std::size_t max_monomials = 2000;  // weight-space cap for the Shapovalov test
  std::size_t max_expand_terms = 4000;  // cap on the U(G^-) normal form fed to it
  std::size_t max_vector_terms = 400000;  // realized vector size; beyond it nothing is verified
  bool oracle = true;                   // also run the Shapovalov test when under the caps
  bool parallel = true;
};

// e_i v == 0 in the Kac module V(Lambda) for every simple e_i. v is an element
// of U(G^-) standing for v v_Lambda.
PrimitivityReport is_primitive(const Weight& lambda, const Element& v, const VerifyOptions& opts = {});
PrimitivityReport is_primitive_serial(const Weight& lambda, const Element& v, std::size_t max_monomials = 2000);

// Terms b y v_Lambda of the odd-first expansion, b in B.
struct ExpansionTerm {
  Monomial odd;
  Element even;
  bool prime = false;  // y is a scalar
};

// Terms sorted with the largest b first (depth, then the root order).
std::vector<ExpansionTerm> expansion(const Basis& basis, const Element& v);
// First term of the expansion whose even part is nonzero in V_0(Lambda).
std::optional<ExpansionTerm> leading_term(KacModule& mod, const Element& v, std::size_t max_monomials = 2000);
std::vector<ExpansionTerm> prime_terms(const Basis& basis, const Element& v);
bool b_less(const Monomial& a, const Monomial& b);

// One step of peeling: the roots of the top row (row) or the rightmost column
// (column) of the current region, applied one at a time.
struct LevelTrace {
  Shape level;       // current sub-shape (indices -m'..n')
  int x = 0, y = 0;  // cells in the top row / rightmost column
  char branch = 'R';  // 'R' row, 'C' column
  bool tie = false;
  std::vector<RootIndex> roots;  // eta_1, eta_2, ... in application order
  std::vector<ChiContext> steps;  // (J, C) of each d_k
};

struct PieceTrace {
  Code code;
  PositionSet cells;
  Weight start;  // highest weight the piece is built on
  std::vector<LevelTrace> levels;
};

struct ConstructionTrace {
  Weight lambda;
  Code code;
  std::vector<PieceTrace> pieces;  // in application order
  int attempts = 0;                // candidates tried before one was accepted
};

struct Construction {
  // v_Sigma = d_N ... d_1 v_Lambda; factors holds d_1 first.
  std::vector<Element> factors;
  KacVector vector;
  // Normal-ordered product of the factors, when it stays under the term cap.
  std::optional<Element> g;
  Weight weight;  // Sigma
  ConstructionTrace trace;
  Verdict verified = Verdict::skipped;  // realization test
  Verdict oracle = Verdict::skipped;    // Shapovalov test on g
};

// Normal-ordered product d_N ... d_1, or nullopt once an intermediate product
// exceeds max_terms.
std::optional<Element> expand_factors(Engine& eng, const std::vector<Element>& factors, std::size_t max_terms);

// Top-right corner of a region and its row/column cell counts.
Position top_right(const PositionSet& cells);
std::pair<int, int> xy_counts(const PositionSet& cells);

// x and y read off the labels of lambda restricted to the current level:
// the smallest x with a_{n'-x+1} > 0 and the smallest y with
// a_{-(m'-y+1)} > 0. Returns 0 when no label qualifies.
std::pair<int, int> xy_from_labels(const Weight& lambda, const Shape& level);

// The J of a level: {-(m'-y+1)..-1} u {1..n'-x+1}.
std::vector<int> level_J(const Shape& level, int x, int y);

// d_k for the row branch (f_{-m', n'-k+1}) or the column branch
// (f_{-(m'-k+1), n'}); coefficients c_j of lambda_{k-1} on the sub-shape the
// root spans.
ChiContext step_context(const Weight& current, const Shape& level, const std::vector<int>& J, char branch, int k);

// v_k(Lambda) = d_k ... d_1 v_Lambda for the top row of the full shape, as
// used in the first level of the recursion.
Element build_vk(Engine& eng, const Weight& lambda, int k, int x, int y, std::vector<ChiContext>* contexts = nullptr);

// Peeling choices: for each level, which side to peel. `choices` entries are
// consulted only on ties unless forced; an empty list uses the default rule
// (row when x <= y, column otherwise; rows first on ties).
struct PeelPlan {
  std::vector<char> on_tie;  // per tie, in encounter order
};

// Appends the factors d_k of one indecomposable region, in application order.
void build_region(Engine& eng, const Weight& start, const PositionSet& cells, const PeelPlan& plan,
                  std::vector<Element>& factors, PieceTrace& trace, int* ties_seen = nullptr);

// Entry points. Each candidate (tie choices, piece orders) is checked in the
// realization and the first primitive one is returned; the Shapovalov test then
// runs on it when the caps allow. A candidate whose vector outgrows
// max_vector_terms is returned unverified, with weight taken from the code and
// an empty vector.
Construction construct_indecomposable(const Weight& lambda, const Code& code, const VerifyOptions& opts = {});
Construction construct(const Weight& lambda, const Code& code, const VerifyOptions& opts = {});

// Layer decomposition D_Sigma = D^(0) u ... u D^(i_Sigma) of an indecomposable
// region: each layer is the topmost row or the rightmost column of what is
// left. The side is picked like a construction step, from the labels of Lambda
// where they apply and from the cell counts otherwise; a row taken on a tie is
// followed by the rest of the right column. A side whose removal would leave
// no corner cell for the next level is never taken.
struct Layer {
  char side = 'R';
  PositionSet cells;
};

struct LayerDecomposition {
  int x = 0, y = 0;  // of the top level
  std::vector<Layer> layers;
  int i_sigma = 0;  // index of the last layer
  int j_sigma = -1;  // layer holding P_x = (x, n + 1 - x) relative to the corner, or -1
};

LayerDecomposition layer_decomposition(const Weight& lambda, const PositionSet& cells);

// Weight of g v_Lambda for a weight-homogeneous g.
Weight vector_weight(const Weight& lambda, const Element& g);

}  // namespace superkac
