#include "superkac/atypicality.hpp"

#include <stdexcept>

namespace superkac {

AtypMatrix atyp_matrix(const Weight& w) {
  const Shape& s = w.shape;
  AtypMatrix a{s, std::vector<Rational>((s.m + 1) * (s.n + 1))};
  for (int b = 1; b <= s.m + 1; ++b) {
    Rational row = 0;
    for (int k = -(s.m - b + 1); k <= 0; ++k) row += w[k];
    Rational col = 0;
    for (int c = 1; c <= s.n + 1; ++c) {
      if (c >= 2) col += w[c - 1];
      a.at(b, c) = row - col + (s.m - b - c + 2);
    }
  }
  return a;
}

AtypMatrix atyp_matrix_by_inner(const Weight& w) {
  const Shape& s = w.shape;
  EpsDelta shifted = lift(w) + rho(s);
  AtypMatrix a{s, std::vector<Rational>((s.m + 1) * (s.n + 1))};
  for (int b = 1; b <= s.m + 1; ++b) {
    for (int c = 1; c <= s.n + 1; ++c) {
      a.at(b, c) = inner(shifted, root_vector(s, odd_root_at(s, {b, c})));
    }
  }
  return a;
}

Weight weight_from_matrix(const AtypMatrix& a) {
  const Shape& s = a.shape;
  for (int b = 1; b <= a.rows(); ++b) {
    for (int c = 1; c <= a.cols(); ++c) {
      if (a.at(b, c) + a.at(1, 1) != a.at(b, 1) + a.at(1, c)) {
        throw std::invalid_argument("atypicality matrix is not additive");
      }
    }
  }
  Weight w = Weight::zero(s);
  w[0] = a.at(s.m + 1, 1);
  for (int b = 1; b <= s.m; ++b) w[-(s.m - b + 1)] = a.at(b, 1) - a.at(b + 1, 1) - 1;
  for (int c = 1; c <= s.n; ++c) w[c] = a.at(1, c) - a.at(1, c + 1) - 1;
  return w;
}

std::vector<Position> atypical_roots(const AtypMatrix& a) {
  std::vector<Position> out;
  for (int c = 1; c <= a.cols(); ++c) {
    for (int b = a.rows(); b >= 1; --b) {
      if (a.at(b, c) == 0) out.push_back({b, c});
    }
  }
  return out;
}

std::string NqcType::to_string() const {
  std::string out;
  for (int t = r_; t >= 2; --t) {
    if (!out.empty()) out += '/';
    for (int s = 1; s < t; ++s) out += static_cast<char>(at(s, t));
  }
  return out;
}

NqcType NqcType::parse(int r, const std::string& rows) {
  NqcType out(r);
  int t = r, s = 1;
  for (char ch : rows) {
    if (ch == '/' || ch == ' ') continue;
    if (t < 2) throw std::invalid_argument("too many relations for r");
    if (ch != 'n' && ch != 'q' && ch != 'c') throw std::invalid_argument("relation must be n, q or c");
    out.set(s, t, static_cast<Relation>(ch));
    if (++s == t) {
      --t;
      s = 1;
    }
  }
  if (t >= 2) throw std::invalid_argument("too few relations for r");
  return out;
}

Rational x_entry(const AtypMatrix& a, const std::vector<Position>& roots, int s, int t) {
  return a.at(roots[t - 1].b, roots[s - 1].c);
}

int hook_length(const std::vector<Position>& roots, int s, int t) {
  const auto& gs = roots[s - 1];
  const auto& gt = roots[t - 1];
  return gs.b - gt.b + gt.c - gs.c + 1;
}

Relation relation(const AtypMatrix& a, const std::vector<Position>& roots, int s, int t) {
  Rational x = x_entry(a, roots, s, t);
  int h = hook_length(roots, s, t);
  if (x > h - 1) return Relation::n;
  if (x == h - 1) return Relation::q;
  return Relation::c;
}

NqcType nqc(const AtypMatrix& a) {
  auto roots = atypical_roots(a);
  NqcType out(static_cast<int>(roots.size()));
  for (int t = 2; t <= out.r(); ++t) {
    for (int s = 1; s < t; ++s) out.set(s, t, relation(a, roots, s, t));
  }
  return out;
}

NqcType nqc(const Weight& w) { return nqc(atyp_matrix(w)); }

Classification classify(const Weight& w) {
  if (!w.is_dominant() || !w.is_integral()) {
    throw std::invalid_argument("classification needs a dominant integral weight");
  }
  auto roots = atypical_roots(atyp_matrix(w));
  return {static_cast<int>(roots.size()), roots};
}

}  // namespace superkac
