#include "superkac/realization.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "superkac/parallel.hpp"

namespace superkac {

namespace {

void accumulate(EvenModule::Vec& v, const EvenModule::State& s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

// Sorts a list of distinct odd ids and returns the permutation sign, or 0 if
// an id repeats.
int normalize(std::string& ids) {
  int sign = 1;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    for (std::size_t j = i; j > 0 && ids[j - 1] >= ids[j]; --j) {
      if (ids[j - 1] == ids[j]) return 0;
      std::swap(ids[j - 1], ids[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

EvenModule::EvenModule(const Weight& lambda, std::shared_ptr<const Basis> basis)
    : lambda_(lambda), basis_(std::move(basis)) {
  const Shape& s = lambda.shape;
  if (s.m + 1 > 8 || s.n + 1 > 8) throw std::invalid_argument("even blocks larger than gl(8) are not supported");
  for (int k = -s.m; k <= s.n; ++k) {
    if (k == 0) continue;
    const Rational& a = lambda[k];
    if (!is_integer(a) || a < 0) {
      throw std::invalid_argument("the even labels of Lambda must be nonnegative integers");
    }
    const Factor f{k > 0, k > 0 ? k : s.m + k + 1};
    for (long t = 0; t < a.get_num().get_si(); ++t) {
      factors_.push_back(f);
      highest_.push_back(static_cast<char>((1u << f.p) - 1));
    }
  }

  entries_.resize(basis_->size());
  for (int id = 0; id < basis_->size(); ++id) {
    const auto& g = basis_->gen(id);
    if (g.odd() || g.cartan()) continue;
    for (const auto& e : basis_->matrix(id)) {
      const bool right = e.row > s.m + 1;
      const int shift = right ? s.m + 2 : 1;
      entries_[id].push_back({right, e.row - shift, e.col - shift, e.value});
    }
  }
}

std::vector<int> EvenModule::weight(const State& st) const {
  const Shape& s = lambda_.shape;
  std::vector<int> dl(s.m + 1, 0), dr(s.n + 1, 0);
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    auto& d = factors_[t].right ? dr : dl;
    const unsigned now = static_cast<unsigned char>(st[t]);
    const unsigned top = static_cast<unsigned char>(highest_[t]);
    for (std::size_t a = 0; a < d.size(); ++a) d[a] += int((now >> a) & 1u) - int((top >> a) & 1u);
  }
  std::vector<int> w(s.rank(), 0);
  int run = 0;
  for (int p = 1; p <= s.m; ++p) {
    run += dl[p - 1];
    w[s.slot(p - s.m - 1)] = run;
  }
  run = 0;
  for (int p = 1; p <= s.n; ++p) {
    run += dr[p - 1];
    w[s.slot(p)] = run;
  }
  return w;
}

Rational EvenModule::cartan_value(int k, const State& st) const {
  const Shape& s = lambda_.shape;
  const auto w = weight(st);
  Rational v = lambda_[k];
  for (int l = -s.m; l <= s.n; ++l) v += w[s.slot(l)] * cartan_entry(s, k, l);
  return v;
}

void EvenModule::apply(int id, const State& st, const Rational& c, Vec& out) const {
  const auto& g = basis_->gen(id);
  if (g.odd()) throw std::invalid_argument("odd generator acting on the even module");
  if (g.cartan()) {
    accumulate(out, st, c * cartan_value(g.root.i, st));
    return;
  }
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    const unsigned mask = static_cast<unsigned char>(st[t]);
    for (const auto& e : entries_[id]) {
      if (e.right != factors_[t].right) continue;
      const unsigned bit_b = 1u << e.b, bit_a = 1u << e.a;
      if (!(mask & bit_b) || (mask & bit_a)) continue;
      const unsigned lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
      const unsigned between = mask & ((1u << hi) - 1) & ~((1u << (lo + 1)) - 1);
      const int sign = std::popcount(between) % 2 ? -1 : 1;
      State next = st;
      next[t] = static_cast<char>((mask & ~bit_b) | bit_a);
      accumulate(out, next, c * (sign * e.value));
    }
  }
}

// ---------------------------------------------------------------------------

std::size_t KacVector::size() const {
  std::size_t n = 0;
  for (const auto& [odd, v] : parts) n += v.size();
  return n;
}

void KacVector::add(const Monomial& odd, const EvenModule::State& s, const Rational& c) {
  if (c == 0) return;
  auto& v = parts[odd];
  accumulate(v, s, c);
  if (v.empty()) parts.erase(odd);
}

void KacVector::add_scaled(const KacVector& v, const Rational& c) {
  if (c == 0) return;
  for (const auto& [odd, part] : v.parts) {
    for (const auto& [s, x] : part) add(odd, s, c * x);
  }
}

KacRealization::KacRealization(const Weight& lambda)
    : lambda_(lambda), basis_(basis_for(lambda.shape)), even_(lambda, basis_) {}

KacVector KacRealization::highest() const {
  KacVector v;
  v.add({}, even_.highest(), 1);
  return v;
}

void KacRealization::wedge(int id, const Monomial& odd, const EvenModule::State& s, const Rational& c,
                           KacVector& out) const {
  const char key = static_cast<char>(id);
  if (odd.find(key) != Monomial::npos) return;
  std::size_t pos = 0;
  while (pos < odd.size() && factor(odd, pos) < id) ++pos;
  Monomial next = odd;
  next.insert(next.begin() + pos, key);
  out.add(next, s, pos % 2 ? -c : c);
}

void KacRealization::apply_even(int id, const Monomial& odd, const EvenModule::State& s, const Rational& c,
                                KacVector& out) const {
  // x f_1 ... f_k = sum_j f_1 .. [x, f_j] .. f_k + f_1 ... f_k x
  for (std::size_t j = 0; j < odd.size(); ++j) {
    for (const auto& [g, coef] : basis_->bracket(id, factor(odd, j))) {
      if (basis_->gen(g).block != Block::odd_lower) {
        throw std::logic_error("even generator moved an odd lowering factor out of G_-1");
      }
      Monomial next = odd;
      next[j] = static_cast<char>(g);
      const int sign = normalize(next);
      if (sign != 0) out.add(next, s, c * (sign * coef));
    }
  }
  EvenModule::Vec moved;
  even_.apply(id, s, c, moved);
  for (const auto& [t, x] : moved) out.add(odd, t, x);
}

void KacRealization::apply_term(int id, const Monomial& odd, const EvenModule::State& s, const Rational& c,
                                KacVector& out) const {
  const auto& g = basis_->gen(id);
  if (g.block == Block::odd_lower) {
    wedge(id, odd, s, c, out);
    return;
  }
  if (!g.odd()) {
    apply_even(id, odd, s, c, out);
    return;
  }
  // Odd raising: e f_1 ... f_k w = sum_j (-1)^(j-1) f_1 .. f_{j-1} [e, f_j] f_{j+1} .. f_k w,
  // since G_+1 kills V_0(Lambda).
  for (std::size_t j = 0; j < odd.size(); ++j) {
    const Monomial tail = odd.substr(j + 1);
    KacVector part;
    for (const auto& [x, coef] : basis_->bracket(id, factor(odd, j))) {
      apply_even(x, tail, s, c * (j % 2 ? -coef : coef), part);
    }
    for (std::size_t t = j; t-- > 0;) {
      KacVector next;
      for (const auto& [o, v] : part.parts) {
        for (const auto& [st, x] : v) wedge(factor(odd, t), o, st, x, next);
      }
      part = std::move(next);
    }
    out.add_scaled(part, 1);
  }
}

KacVector KacRealization::apply(int id, const KacVector& v) const {
  KacVector out;
  for (const auto& [odd, part] : v.parts) {
    for (const auto& [s, c] : part) apply_term(id, odd, s, c, out);
  }
  return out;
}

KacVector KacRealization::apply(const Element& x, const KacVector& v) const {
  KacVector out;
  for (const auto& [m, c] : x.terms()) {
    KacVector u = v;
    for (std::size_t t = m.size(); t-- > 0 && !u.is_zero();) u = apply(factor(m, t), u);
    out.add_scaled(u, c);
  }
  return out;
}

std::vector<int> KacRealization::weight(const Monomial& odd, const EvenModule::State& s) const {
  auto w = even_.weight(s);
  for (std::size_t k = 0; k < odd.size(); ++k) {
    const auto& d = basis_->weight(factor(odd, k));
    for (std::size_t l = 0; l < w.size(); ++l) w[l] += d[l];
  }
  return w;
}

Weight KacRealization::vector_weight(const KacVector& v) const {
  if (v.is_zero()) throw std::invalid_argument("zero vector has no weight");
  std::vector<int> rel;
  bool first = true;
  for (const auto& [odd, part] : v.parts) {
    for (const auto& [s, c] : part) {
      auto w = weight(odd, s);
      if (first) {
        rel = std::move(w);
        first = false;
      } else if (w != rel) {
        throw std::invalid_argument("vector is not weight-homogeneous");
      }
    }
  }
  const Shape& sh = lambda_.shape;
  Weight out = lambda_;
  for (int k = -sh.m; k <= sh.n; ++k) {
    for (int l = -sh.m; l <= sh.n; ++l) out[k] += rel[sh.slot(l)] * cartan_entry(sh, k, l);
  }
  return out;
}

// ---------------------------------------------------------------------------

PrimitivityReport is_primitive_serial(const KacRealization& kac, const KacVector& v) {
  const Shape& s = kac.highest_weight().shape;
  PrimitivityReport rep;
  for (int i = -s.m; i <= s.n; ++i) {
    const bool zero = kac.apply(kac.basis().raising(i, i), v).is_zero();
    rep.per_generator.push_back({i, zero ? Verdict::yes : Verdict::no});
    if (!zero) rep.overall = Verdict::no;
  }
  return rep;
}

PrimitivityReport is_primitive(const KacRealization& kac, const KacVector& v, const RealizationOptions& opts) {
  if (!opts.parallel) return is_primitive_serial(kac, v);
  const Shape& s = kac.highest_weight().shape;
  std::vector<const std::pair<const Monomial, EvenModule::Vec>*> groups;
  for (const auto& part : v.parts) groups.push_back(&part);
  const int rank = s.rank();
  const std::size_t total = groups.size() * static_cast<std::size_t>(rank);

  // One task per (simple e_i, odd group); contributions of different groups can
  // cancel, so the images are summed per generator before the zero test.
  std::vector<KacVector> images(total);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (std::size_t t = 0; t < total; ++t) {
    const int k = static_cast<int>(t % rank);
    const auto& [odd, part] = *groups[t / rank];
    const int id = kac.basis().raising(k - s.m, k - s.m);
    KacVector single;
    single.parts.emplace(odd, part);
    images[t] = kac.apply(id, single);
  }

  PrimitivityReport rep;
  for (int k = 0; k < rank; ++k) {
    KacVector sum;
    for (std::size_t g = 0; g < groups.size(); ++g) sum.add_scaled(images[g * rank + k], 1);
    const bool zero = sum.is_zero();
    rep.per_generator.push_back({k - s.m, zero ? Verdict::yes : Verdict::no});
    if (!zero) rep.overall = Verdict::no;
  }
  return rep;
}

}  // namespace superkac
