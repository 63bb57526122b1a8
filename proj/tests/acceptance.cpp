// Acceptance run: one PASS/FAIL line per criterion. The randomized property
// suites and the PBW conformance checks live in the unit tests, which are
// linked in here and run through doctest with a source-file filter.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "superkac/format.hpp"
#include "superkac/primvec.hpp"
#include "superkac/parallel.hpp"
#include "support.hpp"

using namespace superkac;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

int failures = 0;

void criterion(int number, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double ms = ms_since(t0);
  if (!out.pass) ++failures;
  std::printf("criterion %2d %s  %s (%.1f ms)", number, out.pass ? "PASS" : "FAIL", title, ms);
  if (!out.detail.empty()) std::printf("  [%s]", out.detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

PositionSet cells(std::vector<Position> v) {
  std::sort(v.begin(), v.end());
  return v;
}

AtypMatrix from_rows(const Shape& s, const std::vector<std::vector<int>>& rows) {
  AtypMatrix a{s, {}};
  for (const auto& row : rows) {
    for (int x : row) a.entries.emplace_back(x);
  }
  return a;
}

std::vector<Rational> rationals(const std::vector<int>& xs) { return {xs.begin(), xs.end()}; }

// Cells of a region drawn as rows of an (m+1) x (n+1) grid, '.' outside.
std::string grid(const Shape& s, const std::map<Position, char>& label) {
  std::string out;
  for (int b = 1; b <= s.m + 1; ++b) {
    if (b > 1) out += '/';
    for (int c = 1; c <= s.n + 1; ++c) {
      const auto it = label.find({b, c});
      out += it == label.end() ? '.' : it->second;
    }
  }
  return out;
}

int run_unit_tests(const char* files) {
  doctest::Context ctx;
  ctx.setOption("source-file", files);
  ctx.setOption("minimal", true);
  return ctx.run();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// The sl(6/5) example is used by criteria 8 and 10; build its constructions once.
const std::map<std::string, Construction>& sl65_constructions() {
  static const std::map<std::string, Construction> built = [] {
    std::map<std::string, Construction> out;
    const Weight w = parse_weight("[00020;0;0210]");
    for (const auto& code : enumerate_codes(nqc(w))) {
      if (!is_linked(code)) out.emplace(to_string(code), construct(w, code));
    }
    return out;
  }();
  return built;
}

struct CorpusRecord {
  std::string weight;
  std::string code;
  bool nonzero = false;
  bool weight_ok = false;
  Verdict realization = Verdict::skipped;
  Verdict oracle = Verdict::skipped;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

std::vector<CorpusRecord> corpus_for(const Weight& w) {
  VerifyOptions opts;
  opts.parallel = false;  // the corpus is parallel over weights instead
  std::vector<CorpusRecord> out;
  for (const auto& code : enumerate_codes(nqc(w))) {
    if (is_linked(code)) continue;
    const Construction con = construct(w, code, opts);
    CorpusRecord rec{compact(w), to_string(code)};
    rec.nonzero = !con.vector.is_zero();
    rec.weight_ok = con.weight == sigma_weight(w, code) && rec.nonzero &&
                    KacRealization(w).vector_weight(con.vector) == con.weight;
    rec.realization = con.verified;
    rec.oracle = con.oracle;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CorpusRecord> run_corpus(const std::vector<Weight>& weights, bool parallel) {
  std::vector<std::vector<CorpusRecord>> per(weights.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::size_t k = 0; k < weights.size(); ++k) per[k] = corpus_for(weights[k]);
  } else {
    for (std::size_t k = 0; k < weights.size(); ++k) per[k] = corpus_for(weights[k]);
  }
  std::vector<CorpusRecord> all;
  for (auto& p : per) all.insert(all.end(), p.begin(), p.end());
  return all;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", thread_count());

  criterion(1, "atypicality goldens", [](Outcome& o) {
    const Weight a = parse_weight("[100;0;1000]");
    const Weight b = parse_weight("[00020;0;0210]");
    const AtypMatrix want_a =
        from_rows(a.shape, {{4, 2, 1, 0, -1}, {2, 0, -1, -2, -3}, {1, -1, -2, -3, -4}, {0, -2, -3, -4, -5}});
    const AtypMatrix want_b = from_rows(b.shape, {{7, 6, 3, 1, 0},
                                                 {6, 5, 2, 0, -1},
                                                 {5, 4, 1, -1, -2},
                                                 {4, 3, 0, -2, -3},
                                                 {1, 0, -3, -5, -6},
                                                 {0, -1, -4, -6, -7}});
    auto t0 = Clock::now();
    const AtypMatrix got_a = atyp_matrix(a);
    const double ta = ms_since(t0);
    t0 = Clock::now();
    const AtypMatrix got_b = atyp_matrix(b);
    const std::string type_b = nqc(b).to_string();
    const double tb = ms_since(t0);
    o.require(got_a == want_a, "A([100;0;1000])");
    o.require(got_b == want_b, "A([00020;0;0210])");
    o.require(type_b == "cccc/cqc/qn/c", "nqc = " + type_b);
    o.require(ta < 1 && tb < 1, "time");
    o.note(fmt("%.3f ms", ta) + ", " + fmt("%.3f ms", tb));
  });

  criterion(2, "fifteen codes, oracle agrees", [](Outcome& o) {
    const std::set<std::string> want = {"0 0 0 0 0",     "0 0 3 0 0",     "0 0 3/4 4 0",
                                        "1 0 0 0 0",     "1 0 3 0 0",     "1 0 3/4 4 0",
                                        "1/2 2 0 0 0",   "1/2 2 3 0 0",   "1/2 2 3/4 4 0",
                                        "1/2/5 2/5 3/4/5 4/5 5",          "1/4 4 3/4 4 0",
                                        "1/4/5 4/5 3/4/5 4/5 5",          "3 0 3 0 0",
                                        "3/4 4 3/4 4 0", "3/4/5 4/5 3/4/5 4/5 5"};
    const auto t0 = Clock::now();
    const NqcType t = nqc(parse_weight("[00020;0;0210]"));
    const auto codes = enumerate_codes(t);
    std::set<std::string> got;
    for (const auto& c : codes) got.insert(to_string(c));
    o.require(codes.size() == 15, std::to_string(codes.size()) + " codes");
    o.require(got == want, "code set");
    o.require(enumerate_codes_exhaustive(t) == codes, "parallel oracle");
    o.require(enumerate_codes_exhaustive_serial(t) == codes, "serial oracle");
    o.require(ms_since(t0) < 1000, "time");
  });

  criterion(3, "r = 2 code counts 3/4/5 for c/n/q", [](Outcome& o) {
    const std::map<std::string, std::size_t> want = {{"c", 3}, {"n", 4}, {"q", 5}};
    // Named weights first, then every doubly atypical weight of a small corpus.
    for (const auto& [text, type] : std::vector<std::pair<std::string, std::string>>{
             {"[1111;-1;10010]", "c"}, {"[2302;-1;01121]", "n"}, {"[1211;-1;10002]", "q"}}) {
      const Weight w = parse_weight(text);
      o.require(nqc(w).to_string() == type, text + " type");
      o.require(enumerate_codes(nqc(w)).size() == want.at(type), text + " count");
    }
    std::map<std::string, int> seen;
    testing::for_each_corpus_weight(5, 2, [&](const Weight& w) {
      const NqcType t = nqc(w);
      if (t.r() != 2) return;
      ++seen[t.to_string()];
      o.require(enumerate_codes(t).size() == want.at(t.to_string()), compact(w));
    });
    o.require(seen.size() == 3, "all three types realized");
    o.note(std::to_string(seen["c"]) + " c, " + std::to_string(seen["n"]) + " n, " + std::to_string(seen["q"]) +
           " q weights");
  });

  criterion(4, "chains of the worked examples", [](Outcome& o) {
    const auto t0 = Clock::now();
    const Weight e43 = parse_weight("[1111;-1;10010]");
    o.require(sw_chain(e43, 1).sw == cells({{3, 2}, {3, 3}, {4, 1}, {4, 2}, {5, 1}}), "[1111;-1;10010] SW(1)");
    o.require(sw_chain(e43, 2).sw ==
                  cells({{1, 5}, {1, 6}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 4}, {4, 3}, {5, 2}}),
              "[1111;-1;10010] SW(2)");
    const Weight e44 = parse_weight("[2302;-1;01121]");
    o.require(sw_chain(e44, 1).sw == cells({{3, 3}, {4, 1}, {4, 2}, {4, 3}, {5, 1}}), "[2302;-1;01121] SW(1)");
    o.require(sw_chain(e44, 2).sw == cells({{1, 6}}), "[2302;-1;01121] SW(2)");
    const Weight e45 = parse_weight("[1211;-1;10002]");
    o.require(sw_chain(e45, 1).sw == cells({{3, 2}, {3, 3}, {4, 1}, {4, 2}, {5, 1}}), "[1211;-1;10002] SW(1)");
    o.require(sw_chain(e45, 2).sw == cells({{1, 6}}), "[1211;-1;10002] SW(2)");
    const Weight wn = parse_weight("[4020;-2;00120]");
    o.require(nqc(wn).to_string() == "n", "[4020;-2;00120] is n");
    o.require(sw_chain(wn, 2).sw == cells({{1, 5}, {1, 6}}), "[4020;-2;00120] SW(2)");
    const Weight wq = parse_weight("[1220;-2;00110]");
    o.require(nqc(wq).to_string() == "q", "[1220;-2;00110] is q");
    o.require(sw_chain(wq, 2).sw == cells({{1, 5}, {1, 6}, {2, 4}, {2, 5}}), "[1220;-2;00110] SW(2)");
    o.require(ms_since(t0) < 10, "time");
  });

  criterion(5, "composition factor weights", [](Outcome& o) {
    const Weight w = parse_weight("[00020;0;0210]");
    const PositionSet split = cells({{6, 1}, {4, 3}, {3, 3}, {2, 4}, {3, 4}, {4, 4}});
    const PositionSet whole = cells({{6, 1}, {5, 1}, {5, 2}, {6, 2}, {4, 3}, {3, 3}, {2, 4}, {3, 4}, {4, 4}, {4, 1},
                                     {4, 2}, {2, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {5, 3}, {6, 3}});
    o.require(d_sigma(w, parse_code("1 0 3/4 4 0")) == split, "D for 1 0 3/4 4 0");
    o.require(sigma_weight(w, parse_code("1 0 3/4 4 0")) == minus_roots(w, roots_of(w.shape, split)),
              "Sigma for 1 0 3/4 4 0");
    o.require(d_sigma(w, parse_code("1/2/5 2/5 3/4/5 4/5 5")) == whole, "D for the indecomposable code");
    o.require(sigma_weight(w, parse_code("1/2/5 2/5 3/4/5 4/5 5")) == minus_roots(w, roots_of(w.shape, whole)),
              "Sigma for the indecomposable code");

    int checked = 0;
    testing::for_each_corpus_weight(5, 2, [&](const Weight& lam) {
      const EpsDelta lr = lift(lam) + rho(lam.shape);
      for (const auto& code : enumerate_codes(nqc(lam))) {
        if (is_linked(code)) continue;
        const Weight sigma = sigma_weight(lam, code);
        EpsDelta sr = lr;
        for (const auto& r : roots_of(lam.shape, d_sigma(lam, code))) sr -= root_vector(lam.shape, r);
        const bool ok = sigma.is_dominant() && sigma.is_integral() && inner(sr, sr) == inner(lr, lr) &&
                        weight_of(lam.shape, sr - rho(lam.shape)) == sigma;
        o.require(ok, compact(lam) + " " + to_string(code));
        ++checked;
      }
    });
    o.note(std::to_string(checked) + " Sigma checked");
  });

  criterion(6, "property suites", [](Outcome& o) {
    const int rc = run_unit_tests("*test_atypicality.cpp,*test_chains.cpp,*test_chi.cpp,*test_codes.cpp");
    o.require(rc == 0, "unit tests");
  });

  criterion(7, "PBW engine conformance", [](Outcome& o) {
    const int rc = run_unit_tests("*test_rootdata.cpp,*test_pbw.cpp");
    o.require(rc == 0, "unit tests");
  });

  criterion(8, "primitive vectors on the corpus", [](Outcome& o) {
    std::vector<Weight> weights;
    testing::for_each_corpus_weight(4, 2, [&](const Weight& w) { weights.push_back(w); });

    auto t0 = Clock::now();
    const auto records = run_corpus(weights, true);
    const double parallel_ms = ms_since(t0);
    t0 = Clock::now();
    const auto serial = run_corpus(weights, false);
    const double serial_ms = ms_since(t0);
    o.require(records == serial, "parallel and serial corpus runs differ");

    int oracle_yes = 0;
    for (const auto& r : records) {
      const std::string name = r.weight + " " + r.code;
      o.require(r.nonzero, name + " zero vector");
      o.require(r.weight_ok, name + " weight");
      o.require(r.realization == Verdict::yes, name + " realization");
      o.require(r.oracle == Verdict::yes, name + " Shapovalov");
      oracle_yes += r.oracle == Verdict::yes;
    }
    o.note(std::to_string(weights.size()) + " weights, " + std::to_string(records.size()) + " codes, " +
           std::to_string(oracle_yes) + " Shapovalov-verified; parallel " + fmt("%.0f ms", parallel_ms) +
           ", serial " + fmt("%.0f ms", serial_ms));

    // sl(6/5): every realized vector is checked; large ones are reported unverified.
    t0 = Clock::now();
    const Weight w = parse_weight("[00020;0;0210]");
    int verified = 0, capped = 0, oracle = 0;
    for (const auto& [code, con] : sl65_constructions()) {
      o.require(con.weight == sigma_weight(w, parse_code(code)), "sl(6/5) " + code + " weight");
      o.require(con.verified != Verdict::no && con.oracle != Verdict::no, "sl(6/5) " + code + " primitivity");
      if (con.verified == Verdict::yes) {
        ++verified;
        o.require(!con.vector.is_zero() && KacRealization(w).vector_weight(con.vector) == con.weight,
                  "sl(6/5) " + code + " vector");
      } else {
        ++capped;
      }
      oracle += con.oracle == Verdict::yes;
    }
    o.note("sl(6/5): " + std::to_string(verified) + " verified, " + std::to_string(oracle) + " also Shapovalov, " +
           std::to_string(capped) + " over the cap, " + fmt("%.0f ms", ms_since(t0)));
  });

  criterion(9, "c_j regression", [](Outcome& o) {
    // [0002;0;0210] as an sl(5/5) weight: the coefficients of v_1 and v_2.
    const Weight w = parse_weight("[0002;0;0210]");
    o.require(xy_from_labels(w, w.shape) == std::pair{2, 4}, "x, y");
    o.require(level_J(w.shape, 2, 4) == std::vector<int>{-1, 1, 2, 3}, "J");
    Engine eng(w.shape);
    std::vector<ChiContext> steps;
    build_vk(eng, w, 2, 2, 4, &steps);
    o.require(steps.size() == 2 && steps[0].C == rationals({5, 6, 5, 2}), "(5;6,5,2)");
    o.require(steps.size() == 2 && steps[1].C == rationals({4, 5, 4, 1}), "(4;5,4,1)");
    const Weight l1 = minus_roots(w, {{-4, 4}});
    o.require(l1 == parse_weight("[-1,0,0,2;0;0,2,1,-1]"), "Lambda_1");
    o.require(minus_roots(l1, {{-4, 3}}) == parse_weight("[-2,0,0,2;0;0,2,0,0]"), "Lambda_2");

    const Weight e45 = parse_weight("[1211;-1;10002]");
    o.require(xy_from_labels(e45, e45.shape) == std::pair{1, 1}, "[1211;-1;10002] x, y");
    Engine eng45(e45.shape);
    std::vector<ChiContext> steps45;
    build_vk(eng45, e45, 1, 1, 1, &steps45);
    o.require(steps45.size() == 1 && steps45[0].C == rationals({1, 4, 6, 8, 7, 5, 4, 3, 2}), "(1,4,6,8;7,5,4,3,2)");
    o.require(minus_roots(e45, {{-4, 5}}) == parse_weight("[0211;-1;10001]"), "[1211;-1;10002] Lambda_1");
  });

  criterion(10, "layer structure of the worked regions", [](Outcome& o) {
    // sl(6/5): chain labels of D_Sigma, x, y and the eta, eta' lists.
    const Weight w = parse_weight("[00020;0;0210]");
    const Code code = parse_code("1/2/5 2/5 3/4/5 4/5 5");
    const PositionSet d = d_sigma(w, code);
    std::map<Position, char> chain_label;
    for (int s = 1; s <= 5; ++s) {
      for (const auto& p : sw_chain(w, s).sw) chain_label[p] = static_cast<char>('0' + s);
    }
    std::map<Position, char> in_d;
    for (const auto& p : d) in_d[p] = chain_label.at(p);
    o.require(grid(w.shape, in_d) == "...55/..545/..445/55345/225../125..", "sl(6/5) D_Sigma by chain");

    const auto& con = sl65_constructions().at(to_string(code));
    if (con.trace.pieces.empty() || con.trace.pieces[0].levels.empty()) {
      o.require(false, "sl(6/5) trace");
      return;
    }
    const LevelTrace& top = con.trace.pieces[0].levels[0];
    o.require(top.x == 2 && top.y == 4, "sl(6/5) x, y");
    o.require(top.branch == 'R', "sl(6/5) row first");
    o.require(top.roots == std::vector<RootIndex>{{-5, 4}, {-5, 3}}, "sl(6/5) eta");
    // eta'_k: the rightmost column of D_Sigma from the top.
    std::vector<RootIndex> eta_prime;
    for (int b = 1; b <= top.y; ++b) {
      if (std::binary_search(d.begin(), d.end(), Position{b, w.shape.n + 1})) {
        eta_prime.push_back(odd_root_at(w.shape, {b, w.shape.n + 1}));
      }
    }
    o.require(eta_prime == std::vector<RootIndex>{{-5, 4}, {-4, 4}, {-3, 4}, {-2, 4}}, "sl(6/5) eta'");
    const auto dec63 = layer_decomposition(w, d);
    o.require(dec63.x == 2 && dec63.y == 4, "sl(6/5) layer x, y");

    // sl(5/6): the layer peeling and the region D^(1).
    const Weight v = parse_weight("[0011;1;00200]");
    const PositionSet d616 = d_sigma(v, parse_code("1/3/4 2/3/4 3/4 4"));
    const auto dec = layer_decomposition(v, d616);
    o.require(dec.x == 3 && dec.y == 3, "sl(5/6) x = y = 3");
    o.require(dec.i_sigma == 8 && dec.j_sigma == 4, "sl(5/6) i = 8, j = 4");
    std::map<Position, char> layer_of, first;
    for (int i = 0; i < static_cast<int>(dec.layers.size()); ++i) {
      for (const auto& p : dec.layers[i].cells) {
        layer_of[p] = static_cast<char>('0' + i);
        first[p] = i <= dec.j_sigma ? '1' : '*';
      }
    }
    o.require(grid(v.shape, layer_of) == "...000/...221/444431/77653./8865..", "sl(5/6) layers");
    o.require(grid(v.shape, first) == "...111/...111/111111/****1./****..", "sl(5/6) D^(1)");
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
