#include "superkac/rootdata.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace superkac {

std::string to_string(const Shape& s) {
  return "sl(" + std::to_string(s.m + 1) + "/" + std::to_string(s.n + 1) + ")";
}

RootIndex odd_root_at(const Shape& s, Position p) {
  if (p.b < 1 || p.b > s.m + 1 || p.c < 1 || p.c > s.n + 1) {
    throw std::out_of_range("matrix position outside the atypicality matrix");
  }
  return {-(s.m - p.b + 1), p.c - 1};
}

Position position_of(const Shape& s, RootIndex r) {
  if (parity(r) != Parity::odd) throw std::invalid_argument("even root has no matrix position");
  return {s.m + 1 + r.i, r.j + 1};
}

EpsDelta EpsDelta::zero(const Shape& s) {
  return {std::vector<Rational>(s.m + 1), std::vector<Rational>(s.n + 1)};
}

EpsDelta& EpsDelta::operator+=(const EpsDelta& o) {
  for (std::size_t a = 0; a < eps.size(); ++a) eps[a] += o.eps[a];
  for (std::size_t b = 0; b < delta.size(); ++b) delta[b] += o.delta[b];
  return *this;
}

EpsDelta& EpsDelta::operator-=(const EpsDelta& o) {
  for (std::size_t a = 0; a < eps.size(); ++a) eps[a] -= o.eps[a];
  for (std::size_t b = 0; b < delta.size(); ++b) delta[b] -= o.delta[b];
  return *this;
}

EpsDelta operator*(const Rational& k, EpsDelta a) {
  for (auto& x : a.eps) x *= k;
  for (auto& x : a.delta) x *= k;
  return a;
}

Rational inner(const EpsDelta& u, const EpsDelta& v) {
  Rational sum = 0;
  for (std::size_t a = 0; a < u.eps.size(); ++a) sum += u.eps[a] * v.eps[a];
  for (std::size_t b = 0; b < u.delta.size(); ++b) sum -= u.delta[b] * v.delta[b];
  return sum;
}

namespace {

// Coefficient slot of the basis vector X_p (eps_p, or delta_{p-m-1}), p 1-based.
Rational& coord(const Shape& s, EpsDelta& v, int p) {
  return p <= s.m + 1 ? v.eps[p - 1] : v.delta[p - s.m - 2];
}

const Rational& coord(const Shape& s, const EpsDelta& v, int p) {
  return p <= s.m + 1 ? v.eps[p - 1] : v.delta[p - s.m - 2];
}

// Diagonal of h_k as a dense vector, 1-based (entry 0 unused).
std::vector<int> cartan_diagonal(const Shape& s, int k) {
  std::vector<int> d(s.matrix_size() + 1, 0);
  d[s.m + k + 1] = 1;
  d[s.m + k + 2] = k == 0 ? 1 : -1;
  return d;
}

}  // namespace

EpsDelta root_vector(const Shape& s, RootIndex r) {
  EpsDelta v = EpsDelta::zero(s);
  coord(s, v, s.m + r.i + 1) += 1;
  coord(s, v, s.m + r.j + 2) -= 1;
  return v;
}

EpsDelta rho(const Shape& s) {
  EpsDelta v = EpsDelta::zero(s);
  for (int a = 1; a <= s.m + 1; ++a) v.eps[a - 1] = Rational(s.m + 2 - 2 * a - (s.n + 1), 2);
  for (int b = 1; b <= s.n + 1; ++b) v.delta[b - 1] = Rational(s.n + 2 - 2 * b + (s.m + 1), 2);
  for (auto& x : v.eps) x.canonicalize();
  for (auto& x : v.delta) x.canonicalize();
  return v;
}

Weight Weight::zero(const Shape& s) { return {s, std::vector<Rational>(s.rank())}; }

bool Weight::is_integral() const {
  for (int i = -shape.m; i <= shape.n; ++i) {
    if (i != 0 && !is_integer((*this)[i])) return false;
  }
  return true;
}

bool Weight::is_dominant() const {
  for (int i = -shape.m; i <= shape.n; ++i) {
    if (i != 0 && (*this)[i] < 0) return false;
  }
  return true;
}

EpsDelta lift(const Weight& w) {
  const Shape& s = w.shape;
  EpsDelta v = EpsDelta::zero(s);
  // a_i = mu_i - mu_{i+1} for i > 0, with mu_{n+1} = 0.
  for (int b = s.n; b >= 1; --b) v.delta[b - 1] = v.delta[b] + w[b];
  // a_0 = lambda_{m+1} + mu_1.
  v.eps[s.m] = w[0] - v.delta[0];
  // a_i = lambda_{m+i+1} - lambda_{m+i+2} for i < 0.
  for (int a = s.m; a >= 1; --a) v.eps[a - 1] = v.eps[a] + w[a - s.m - 1];
  return v;
}

Weight weight_of(const Shape& s, const EpsDelta& v) {
  Weight w = Weight::zero(s);
  for (int k = -s.m; k <= s.n; ++k) {
    auto d = cartan_diagonal(s, k);
    Rational sum = 0;
    for (int p = 1; p <= s.matrix_size(); ++p) {
      if (d[p] != 0) sum += d[p] * coord(s, v, p);
    }
    w[k] = sum;
  }
  return w;
}

int cartan_entry(const Shape& s, int k, int l) { return root_on_cartan(s, {l, l}, k); }

int root_on_cartan(const Shape& s, RootIndex r, int k) {
  auto d = cartan_diagonal(s, k);
  return d[s.m + r.i + 1] - d[s.m + r.j + 2];
}

Weight root_weight(const Shape& s, RootIndex r) {
  Weight w = Weight::zero(s);
  for (int k = -s.m; k <= s.n; ++k) w[k] = root_on_cartan(s, r, k);
  return w;
}

Weight minus_roots(Weight w, const std::vector<RootIndex>& roots) {
  for (const auto& r : roots) {
    for (int k = -w.shape.m; k <= w.shape.n; ++k) w[k] -= root_on_cartan(w.shape, r, k);
  }
  return w;
}

std::vector<Rational> simple_root_coords(const Shape& s, const EpsDelta& v) {
  std::vector<Rational> k(s.rank());
  Rational prev = 0;
  for (int i = -s.m; i <= s.n; ++i) {
    prev = coord(s, v, s.m + i + 1) + prev;
    k[s.slot(i)] = prev;
  }
  if (coord(s, v, s.matrix_size()) != -prev) return {};
  for (const auto& x : k) {
    if (!is_integer(x)) return {};
  }
  return k;
}

bool dominates(const Shape& s, const EpsDelta& lambda, const EpsDelta& mu) {
  auto k = simple_root_coords(s, lambda - mu);
  if (k.empty()) return false;
  return std::all_of(k.begin(), k.end(), [](const Rational& x) { return x >= 0; });
}

Weight restrict_to(const Weight& w, const Shape& sub) {
  if (sub.m > w.shape.m || sub.n > w.shape.n) throw std::invalid_argument("restriction to a larger shape");
  Weight r = Weight::zero(sub);
  for (int i = -sub.m; i <= sub.n; ++i) r[i] = w[i];
  return r;
}

bool root_less(RootIndex a, RootIndex b) {
  int la = a.j - a.i, lb = b.j - b.i;
  if (la != lb) return la < lb;
  return a.i > b.i;
}

// ---------------------------------------------------------------------------

int Basis::root_slot(int i, int j) const { return shape_.slot(i) * shape_.rank() + shape_.slot(j); }

Basis::Basis(const Shape& s) : shape_(s) {
  if (s.m < 0 || s.n < 0) throw std::invalid_argument("negative shape");
  std::vector<RootIndex> odd_roots, even_roots;
  for (int i = -s.m; i <= s.n; ++i) {
    for (int j = i; j <= s.n; ++j) {
      (parity({i, j}) == Parity::odd ? odd_roots : even_roots).push_back({i, j});
    }
  }
  std::sort(odd_roots.begin(), odd_roots.end(), root_less);
  std::sort(even_roots.begin(), even_roots.end(), root_less);
  for (const auto& r : odd_roots) gens_.push_back({Block::odd_lower, r});
  for (const auto& r : even_roots) gens_.push_back({Block::even_lower, r});
  for (int k = -s.m; k <= s.n; ++k) gens_.push_back({Block::cartan, {k, k}});
  for (const auto& r : even_roots) gens_.push_back({Block::even_raise, r});
  for (const auto& r : odd_roots) gens_.push_back({Block::odd_raise, r});
  if (gens_.size() > 255) throw std::invalid_argument("shape too large for the PBW engine");

  const int n_rank = s.rank();
  lower_index_.assign(n_rank * n_rank, -1);
  raise_index_.assign(n_rank * n_rank, -1);
  cartan_index_.assign(n_rank, -1);
  for (int id = 0; id < size(); ++id) {
    const auto& g = gens_[id];
    if (g.lowering()) lower_index_[root_slot(g.root.i, g.root.j)] = id;
    if (g.raising()) raise_index_[root_slot(g.root.i, g.root.j)] = id;
    if (g.cartan()) cartan_index_[s.slot(g.root.i)] = id;
  }

  transpose_.resize(size());
  weights_.assign(size(), std::vector<int>(n_rank, 0));
  matrices_.resize(size());
  for (int id = 0; id < size(); ++id) {
    const auto& g = gens_[id];
    const int i = g.root.i, j = g.root.j;
    if (g.lowering()) {
      transpose_[id] = raising(i, j);
      for (int k = i; k <= j; ++k) weights_[id][s.slot(k)] = -1;
      matrices_[id] = {{s.m + j + 2, s.m + i + 1, 1}};
    } else if (g.raising()) {
      transpose_[id] = lowering(i, j);
      for (int k = i; k <= j; ++k) weights_[id][s.slot(k)] = 1;
      matrices_[id] = {{s.m + i + 1, s.m + j + 2, 1}};
    } else {
      transpose_[id] = id;
      matrices_[id] = {{s.m + i + 1, s.m + i + 1, 1}, {s.m + i + 2, s.m + i + 2, i == 0 ? 1 : -1}};
    }
  }

  brackets_.resize(static_cast<std::size_t>(size()) * size());
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      const int sign = odd(a) && odd(b) ? -1 : 1;
      std::map<std::pair<int, int>, int> acc;
      for (const auto& x : matrices_[a]) {
        for (const auto& y : matrices_[b]) {
          if (x.col == y.row) acc[{x.row, y.col}] += x.value * y.value;
          if (y.col == x.row) acc[{y.row, x.col}] -= sign * y.value * x.value;
        }
      }
      std::vector<MatrixEntry> entries;
      for (const auto& [rc, v] : acc) {
        if (v != 0) entries.push_back({rc.first, rc.second, v});
      }
      brackets_[a * size() + b] = decompose(entries);
    }
  }
}

int Basis::lowering(int i, int j) const {
  if (!shape_.contains(i) || !shape_.contains(j) || i > j) throw std::out_of_range("no such root");
  return lower_index_[root_slot(i, j)];
}

int Basis::raising(int i, int j) const {
  if (!shape_.contains(i) || !shape_.contains(j) || i > j) throw std::out_of_range("no such root");
  return raise_index_[root_slot(i, j)];
}

int Basis::cartan(int k) const {
  if (!shape_.contains(k)) throw std::out_of_range("no such Cartan index");
  return cartan_index_[shape_.slot(k)];
}

GenCombination Basis::decompose(const std::vector<MatrixEntry>& entries) const {
  const Shape& s = shape_;
  const int size_n = s.matrix_size();
  GenCombination out;
  std::vector<int> diag(size_n + 1, 0);
  for (const auto& e : entries) {
    if (e.value == 0) continue;
    if (e.row == e.col) {
      diag[e.row] += e.value;
    } else if (e.row < e.col) {
      out.push_back({raising(e.row - s.m - 1, e.col - s.m - 2), e.value});
    } else {
      out.push_back({lowering(e.col - s.m - 1, e.row - s.m - 2), e.value});
    }
  }
  std::vector<int> c(s.rank(), 0);
  c[s.slot(-s.m)] = diag[1];
  for (int k = -s.m + 1; k <= 0; ++k) c[s.slot(k)] = diag[s.m + k + 1] + c[s.slot(k - 1)];
  if (s.n >= 1) {
    c[s.slot(1)] = diag[s.m + 2] - c[s.slot(0)];
    for (int k = 2; k <= s.n; ++k) c[s.slot(k)] = diag[s.m + k + 1] + c[s.slot(k - 1)];
  }
  // Residual check: the diagonal must be supertraceless.
  std::vector<int> back(size_n + 1, 0);
  for (int k = -s.m; k <= s.n; ++k) {
    auto d = cartan_diagonal(s, k);
    for (int p = 1; p <= size_n; ++p) back[p] += c[s.slot(k)] * d[p];
  }
  if (back != diag) throw std::invalid_argument("matrix is not in sl(m+1/n+1)");
  for (int k = -s.m; k <= s.n; ++k) {
    if (c[s.slot(k)] != 0) out.push_back({cartan(k), c[s.slot(k)]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Basis::name(int id) const {
  const auto& g = gens_[id];
  if (g.cartan()) return "h(" + std::to_string(g.root.i) + ")";
  return std::string(g.lowering() ? "f(" : "e(") + std::to_string(g.root.i) + "," +
         std::to_string(g.root.j) + ")";
}

std::shared_ptr<const Basis> basis_for(const Shape& s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Basis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{s.m, s.n}];
  if (!slot) slot = std::make_shared<const Basis>(s);
  return slot;
}

}  // namespace superkac
