#include <doctest.h>

#include "superkac/chi.hpp"
#include "superkac/module.hpp"
#include "superkac/realization.hpp"
#include "support.hpp"

using namespace superkac;

namespace {

std::vector<int> nonzero_indices(const Shape& s) {
  std::vector<int> out;
  for (int i = -s.m; i <= s.n; ++i) {
    if (i != 0) out.push_back(i);
  }
  return out;
}

// Random subset of {-r..-1} u {1..s} with random small coefficients.
ChiContext random_context(int r, int s) {
  ChiContext ctx;
  for (int j = -r; j <= s; ++j) {
    if (j != 0 && testing::uniform(0, 1)) {
      ctx.J.push_back(j);
      ctx.C.emplace_back(testing::uniform(-4, 4));
    }
  }
  return ctx;
}

// Random element of U(G^- + H): products of lowering and Cartan generators.
Element random_lower(Engine& eng) {
  const Basis& b = eng.basis();
  std::vector<int> pool;
  for (int id = 0; id < b.size(); ++id) {
    if (!b.gen(id).raising()) pool.push_back(id);
  }
  Element out;
  for (int t = testing::uniform(1, 2); t > 0; --t) {
    std::vector<int> ids;
    for (int k = testing::uniform(1, 3); k > 0; --k) ids.push_back(pool[testing::uniform(0, static_cast<int>(pool.size()) - 1)]);
    out.add_scaled(eng.product(ids), testing::uniform(1, 3));
  }
  return out;
}

Element f(Engine& eng, int i, int j) { return eng.f(i, j); }

}  // namespace

TEST_CASE("omega, Omega and X commute pairwise") {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      Engine eng(Shape{m, n});
      for (int i : nonzero_indices(eng.shape())) {
        for (int j : nonzero_indices(eng.shape())) {
          CHECK(eng.supercommutator(omega(eng, i), omega(eng, j)).is_zero());
          CHECK(eng.supercommutator(omega(eng, i), Omega(eng, j)).is_zero());
          CHECK(eng.supercommutator(Omega(eng, i), Omega(eng, j)).is_zero());
          CHECK(eng.supercommutator(X(eng, i), X(eng, j)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("chi operators commute") {
  for (int trial = 0; trial < 200; ++trial) {
    Engine eng(Shape{testing::uniform(1, 2), testing::uniform(1, 2)});
    const auto idx = nonzero_indices(eng.shape());
    const int i = idx[testing::uniform(0, static_cast<int>(idx.size()) - 1)];
    const int j = idx[testing::uniform(0, static_cast<int>(idx.size()) - 1)];
    const Rational c = testing::uniform(-3, 3), d = testing::uniform(-3, 3);
    const Element g = random_lower(eng);
    CHECK(chi_ic(eng, i, c, chi_ic(eng, j, d, g)) == chi_ic(eng, j, d, chi_ic(eng, i, c, g)));
    CHECK(chi_i(eng, i, chi_i(eng, j, g)) == chi_i(eng, j, chi_i(eng, i, g)));
  }
}

TEST_CASE("single chi steps on f") {
  Engine eng(Shape{3, 3});
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s <= 3; ++s) {
      const Rational c = 7;
      const Element base = f(eng, -r, s);
      for (int i = 1; i <= r; ++i) {
        CHECK(chi_ic(eng, -i, c, base) == c * base + eng.multiply(f(eng, -(i - 1), s), f(eng, -r, -i)));
      }
      for (int i = 1; i <= s; ++i) {
        CHECK(chi_ic(eng, i, c, base) == c * base - eng.multiply(f(eng, -r, i - 1), f(eng, i, s)));
      }
    }
  }
}

TEST_CASE("double chi steps on f") {
  Engine eng(Shape{3, 3});
  const Rational ci = 2, cj = 5;
  const int r = 3, s = 3;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      const Element got = chi_ic(eng, -j, cj, chi_ic(eng, -i, ci, f(eng, -r, s)));
      const Element want = cj * ci * f(eng, -r, s) + cj * eng.product({eng.basis().lowering(-(i - 1), s), eng.basis().lowering(-r, -i)}) +
                           ci * eng.product({eng.basis().lowering(-(j - 1), s), eng.basis().lowering(-r, -j)}) +
                           eng.product({eng.basis().lowering(-(i - 1), s), eng.basis().lowering(-(j - 1), -i),
                                        eng.basis().lowering(-r, -j)});
      CHECK(got == want);
    }
  }
  for (int j = 1; j <= r; ++j) {
    for (int i = 1; i <= s; ++i) {
      const Element got = chi_ic(eng, -j, cj, chi_ic(eng, i, ci, f(eng, -r, s)));
      const Element want = cj * ci * f(eng, -r, s) - cj * eng.multiply(f(eng, -r, i - 1), f(eng, i, s)) +
                           ci * eng.multiply(f(eng, -(j - 1), s), f(eng, -r, -j)) -
                           eng.product({eng.basis().lowering(-(j - 1), i - 1), eng.basis().lowering(-r, -j),
                                        eng.basis().lowering(i, s)});
      CHECK(got == want);
    }
  }
  for (int j = 1; j <= s; ++j) {
    for (int i = j + 1; i <= s; ++i) {
      const Element got = chi_ic(eng, j, cj, chi_ic(eng, i, ci, f(eng, -r, s)));
      const Element want = cj * ci * f(eng, -r, s) - cj * eng.multiply(f(eng, -r, i - 1), f(eng, i, s)) -
                           ci * eng.multiply(f(eng, -r, j - 1), f(eng, j, s)) +
                           eng.product({eng.basis().lowering(-r, i - 1 < j ? i - 1 : j - 1),
                                        eng.basis().lowering(j, i - 1), eng.basis().lowering(i, s)});
      CHECK(got == want);
    }
  }
}

TEST_CASE("closed form of chi_JC f agrees with iterated chi") {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      Engine eng(Shape{m, n});
      for (int r = 0; r <= m; ++r) {
        for (int s = 0; s <= n; ++s) {
          // Every subset J once, with random coefficients.
          const int width = r + s;
          for (unsigned mask = 0; mask < (1u << width); ++mask) {
            ChiContext ctx;
            for (int k = 0; k < width; ++k) {
              if (!(mask & (1u << k))) continue;
              ctx.J.push_back(k < r ? -(k + 1) : k - r + 1);
              ctx.C.emplace_back(testing::uniform(-3, 3));
            }
            const Element closed = expand_chi_f(eng, ctx, r, s);
            CHECK(closed == chi_JC(eng, ctx, f(eng, -r, s)));
            ChiContext reversed{{ctx.J.rbegin(), ctx.J.rend()}, {ctx.C.rbegin(), ctx.C.rend()}};
            CHECK(closed == chi_JC(eng, reversed, f(eng, -r, s)));
          }
        }
      }
    }
  }
}

TEST_CASE("closed form on sl(4/4)") {
  Engine eng(Shape{3, 3});
  for (int trial = 0; trial < 60; ++trial) {
    const int r = testing::uniform(0, 3), s = testing::uniform(0, 3);
    const ChiContext ctx = random_context(r, s);
    CHECK(expand_chi_f(eng, ctx, r, s) == chi_JC(eng, ctx, f(eng, -r, s)));
  }
  CHECK_THROWS(expand_chi_f(eng, {{2}, {1}}, 1, 1));
  CHECK_THROWS(expand_chi_f(eng, {{1, 1}, {1, 1}}, 1, 2));
}

TEST_CASE("chi_J on f_{-m,n} v uses the coefficients c_i(lambda)") {
  for (int trial = 0; trial < 200; ++trial) {
    const Shape s{testing::uniform(0, 2), testing::uniform(0, 2)};
    Weight lambda = Weight::zero(s);
    for (auto& a : lambda.labels) a = testing::uniform(-3, 3);
    KacModule mod(lambda);
    Engine& eng = mod.engine();
    ChiContext ctx = random_context(s.m, s.n);
    for (std::size_t k = 0; k < ctx.J.size(); ++k) ctx.C[k] = c_of(lambda, ctx.J[k]);
    const Element top = eng.f(-s.m, s.n);
    CHECK(mod.evaluate(chi_J(eng, ctx.J, top)) == mod.evaluate(chi_JC(eng, ctx, top)));
  }
}

TEST_CASE("chi_JC f computed in a sub-superalgebra embeds unchanged") {
  Engine big(Shape{3, 3});
  for (int trial = 0; trial < 200; ++trial) {
    const int r = testing::uniform(0, 3), s = testing::uniform(0, 3);
    Engine small(Shape{r, s});
    const ChiContext ctx = random_context(r, s);
    CHECK(embed(chi_JC(small, ctx, small.f(-r, s)), small.basis(), big.basis()) == chi_JC(big, ctx, big.f(-r, s)));
  }
}

TEST_CASE("products of consecutive chi images vanish") {
  Engine eng(Shape{3, 3});
  for (int trial = 0; trial < 200; ++trial) {
    const int r = testing::uniform(0, 3), s = testing::uniform(0, 3), t = testing::uniform(s, 3);
    const ChiContext ctx = random_context(r, s);
    const ChiContext up = ctx.shifted();
    const Element x = eng.multiply(expand_chi_f(eng, ctx, r, s), expand_chi_f(eng, up, r, t)) +
                      eng.multiply(expand_chi_f(eng, ctx, r, t), expand_chi_f(eng, up, r, s));
    CHECK(x.is_zero());
    if (t == s) CHECK(eng.multiply(expand_chi_f(eng, ctx, r, s), expand_chi_f(eng, up, r, s)).is_zero());
  }
}

TEST_CASE("raising operators on chi_JC f v") {
  int cases = 0;
  for (int trial = 0; trial < 400 && cases < 200; ++trial) {
    const Shape sh{testing::uniform(1, 3), testing::uniform(1, 3)};
    const int r = testing::uniform(1, sh.m), s = testing::uniform(1, sh.n);
    const int p = testing::uniform(0, r), q = testing::uniform(0, s);
    Weight lambda = testing::random_even_labels(sh, 2);
    // f_{-r,-(p+1)} and f_{q+1,s} kill the highest weight vector.
    for (int k = p + 1; k <= r; ++k) lambda[-k] = 0;
    for (int k = q + 1; k <= s; ++k) lambda[k] = 0;

    // Coefficients tied to lambda by the difference conditions.
    ChiContext ctx;
    std::vector<Rational> neg(p + 1), pos(q + 2);
    if (p > 0) {
      neg[p] = p == r ? lambda[-r] : Rational(testing::uniform(-3, 3));
      for (int i = p - 1; i >= 1; --i) neg[i] = neg[i + 1] + 1 + lambda[-i];
    }
    if (q > 0) {
      if (q == s) {
        pos[q] = lambda[s];
        for (int i = q - 1; i >= 1; --i) pos[i] = pos[i + 1] + 1 + lambda[i];
      } else {
        pos[1] = testing::uniform(-3, 3);
        for (int i = 1; i < q; ++i) pos[i + 1] = pos[i] - 1 - lambda[i];
      }
    }
    if (p > 0 && q > 0) lambda[0] = pos[1] - neg[1];
    else lambda[0] = testing::uniform(-3, 3);
    for (int i = p; i >= 1; --i) {
      ctx.J.push_back(-i);
      ctx.C.push_back(neg[i]);
    }
    for (int i = 1; i <= q; ++i) {
      ctx.J.push_back(i);
      ctx.C.push_back(pos[i]);
    }

    ++cases;
    const KacRealization kac(lambda);
    Engine eng(sh);
    const Element x = expand_chi_f(eng, ctx, r, s);
    INFO(compact(lambda), " r=", r, " s=", s, " p=", p, " q=", q);
    for (int i = -sh.m; i <= sh.n; ++i) {
      const KacVector got = kac.evaluate(eng.supercommutator(eng.e(i, i), x));
      KacVector want;
      // [e_{-r}, f_{-r,b}] = -f_{-(r-1),b}, hence the sign.
      if (i == -r && p < r) want.add_scaled(kac.evaluate(expand_chi_f(eng, ctx, r - 1, s)), -1);
      if (i == s && q < s) want = kac.evaluate(expand_chi_f(eng, ctx, r, s - 1));
      CHECK(got == want);
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("c_i coefficients of the worked examples") {
  const Weight big = parse_weight("[00020;0;0210]");
  const Weight top = restrict_to(big, {4, 4});
  CHECK(compact(top) == "[0020;0;0210]");
  std::vector<Rational> got;
  for (int j : {-1, 1, 2, 3}) got.push_back(c_of(top, j));
  CHECK(got == std::vector<Rational>{5, 6, 5, 2});
  for (auto& c : got) c -= 1;
  CHECK(got == std::vector<Rational>{4, 5, 4, 1});

  const Weight w = parse_weight("[1211;-1;10002]");
  got.clear();
  for (int j : {-4, -3, -2, -1, 1, 2, 3, 4, 5}) got.push_back(c_of(w, j));
  CHECK(got == std::vector<Rational>{1, 4, 6, 8, 7, 5, 4, 3, 2});
}
