#pragma once

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "superkac/atypicality.hpp"
#include "superkac/format.hpp"

namespace superkac::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Shape random_shape(int max_m = 4, int max_n = 4) { return {uniform(0, max_m), uniform(0, max_n)}; }

// Even labels in 0..max_label, zero about half the time so that several
// atypical roots show up.
inline Weight random_even_labels(const Shape& s, int max_label = 3) {
  Weight w = Weight::zero(s);
  for (int i = -s.m; i <= s.n; ++i) {
    if (i != 0 && uniform(0, 1)) w[i] = uniform(0, max_label);
  }
  return w;
}

// Distinct values of a_0 that make w atypical.
inline std::vector<long> atypical_a0(Weight w) {
  w[0] = 0;
  std::set<long> out;
  for (const auto& e : atyp_matrix(w).entries) out.insert(-e.get_num().get_si());
  return {out.begin(), out.end()};
}

// Dominant integral weight with at least one atypical root.
inline Weight random_atypical(const Shape& s, int max_label = 3) {
  Weight w = random_even_labels(s, max_label);
  const auto a0 = atypical_a0(w);
  w[0] = a0[uniform(0, static_cast<int>(a0.size()) - 1)];
  return w;
}

inline Weight random_atypical(int max_m = 4, int max_n = 4) { return random_atypical(random_shape(max_m, max_n)); }

// Atypical weight with at least min_r atypical roots, by rejection.
inline Weight random_multiply_atypical(int min_r, int max_m = 4, int max_n = 4) {
  for (;;) {
    Weight w = random_atypical(max_m, max_n);
    if (static_cast<int>(atypical_roots(atyp_matrix(w)).size()) >= min_r) return w;
  }
}

// Every dominant integral atypical weight with m + n <= max_sum and even
// labels at most max_label; a_0 runs over the values giving a zero entry.
inline void for_each_corpus_weight(int max_sum, int max_label, const std::function<void(const Weight&)>& f) {
  for (int m = 0; m <= max_sum; ++m) {
    for (int n = 0; m + n <= max_sum; ++n) {
      const Shape s{m, n};
      std::vector<int> digits(m + n, 0);
      for (;;) {
        Weight w = Weight::zero(s);
        int k = 0;
        for (int i = -m; i <= n; ++i) {
          if (i != 0) w[i] = digits[k++];
        }
        for (long a0 : atypical_a0(w)) {
          w[0] = a0;
          f(w);
        }
        std::size_t p = 0;
        while (p < digits.size() && digits[p] == max_label) digits[p++] = 0;
        if (p == digits.size()) break;
        ++digits[p];
      }
    }
  }
}

}  // namespace superkac::testing
