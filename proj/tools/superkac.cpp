// Command-line frontend: one pipeline stage per subcommand, text or JSON out.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "superkac/chains.hpp"
#include "superkac/codes.hpp"
#include "superkac/format.hpp"
#include "superkac/primvec.hpp"
#include "superkac/render.hpp"
#include "superkac/serialize.hpp"

using namespace superkac;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;

// Vectors larger than this are summarised by their size in JSON output.
constexpr std::size_t kMaxPrintedTerms = 20000;

struct Job {
  std::string command;
  std::vector<int> shape;
  std::string weight_text;
  std::string code_text;
  bool json = false;
  std::size_t max_verify_dim = VerifyOptions{}.max_monomials;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Weight job_weight(const Job& job) {
  Weight w;
  try {
    w = parse_weight(job.weight_text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad weight: ") + e.what());
  }
  if (!job.shape.empty()) {
    if (job.shape[0] != w.shape.m || job.shape[1] != w.shape.n) {
      throw InputError("weight has shape " + to_string(w.shape) + " but --shape asks for " +
                       to_string(Shape{job.shape[0], job.shape[1]}));
    }
  }
  return w;
}

Classification job_classify(const Weight& w) {
  try {
    return classify(w);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Code job_code(const Job& job, const Classification& cls) {
  if (job.code_text.empty()) throw InputError("this command needs --code");
  Code code;
  try {
    code = parse_code(job.code_text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad code: ") + e.what());
  }
  if (code.r() != cls.r) {
    throw InputError("code has " + std::to_string(code.r()) + " columns but the weight has atypicality " +
                     std::to_string(cls.r));
  }
  return code;
}

Json header(const Job& job, const Weight& w) {
  return {{"schema", kSchema}, {"command", job.command}, {"weight", to_json(w)}};
}

std::string pieces_text(const Code& code) {
  const auto pieces = decompose(code);
  if (pieces.size() <= 1) return "indecomposable";
  std::string out = "pieces:";
  for (std::size_t k = 0; k < pieces.size(); ++k) out += (k ? " | " : " ") + to_string(pieces[k]);
  return out;
}

std::string context_text(const ChiContext& ctx) {
  std::ostringstream out;
  out << "J={";
  for (std::size_t k = 0; k < ctx.J.size(); ++k) out << (k ? "," : "") << ctx.J[k];
  out << "} C=(";
  for (std::size_t k = 0; k < ctx.C.size(); ++k) out << (k ? "," : "") << to_string(ctx.C[k]);
  out << ")";
  return out.str();
}

void print_trace(const ConstructionTrace& t) {
  for (const auto& p : t.pieces) {
    std::cout << "piece " << to_string(p.code) << "  cells " << to_string(p.cells) << "\n";
    std::cout << "  built on " << compact(p.start) << "\n";
    for (const auto& l : p.levels) {
      std::cout << "  level " << to_string(l.level) << "  x=" << l.x << " y=" << l.y << "  "
                << (l.branch == 'R' ? "row" : "column") << (l.tie ? " (tie)" : "") << "\n";
      for (std::size_t k = 0; k < l.roots.size(); ++k) {
        std::cout << "    d_" << k + 1 << ": " << to_string(l.roots[k]);
        if (k < l.steps.size()) std::cout << "  " << context_text(l.steps[k]);
        std::cout << "\n";
      }
    }
  }
  std::cout << "candidates tried: " << t.attempts << "\n";
}

int run_atyp(const Job& job) {
  const Weight w = job_weight(job);
  const AtypMatrix a = atyp_matrix(w);
  const auto roots = atypical_roots(a);
  const bool dominant = w.is_integral() && w.is_dominant();
  if (job.json) {
    Json rows = Json::array();
    for (int b = 1; b <= a.rows(); ++b) {
      Json row = Json::array();
      for (int c = 1; c <= a.cols(); ++c) row.push_back(to_string(a.at(b, c)));
      rows.push_back(row);
    }
    Json j = header(job, w);
    Json zeros = Json::array();
    for (const auto& p : roots) zeros.push_back({p.b, p.c});
    j["matrix"] = rows;
    j["atypical_roots"] = zeros;
    j["dominant_integral"] = dominant;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << render_matrix(w);
  if (!dominant) std::cout << "note: weight is not dominant integral\n";
  if (roots.empty()) {
    std::cout << "typical\n";
  } else {
    std::cout << "atypicality " << roots.size() << ": " << to_string(PositionSet(roots.begin(), roots.end())) << "\n";
  }
  return kOk;
}

int run_nqc(const Job& job) {
  const Weight w = job_weight(job);
  const auto cls = job_classify(w);
  const NqcType t = nqc(w);
  if (job.json) {
    Json j = header(job, w);
    Json zeros = Json::array();
    for (const auto& p : cls.roots) zeros.push_back({p.b, p.c});
    j["r"] = cls.r;
    j["atypical_roots"] = zeros;
    j["nqc"] = t.to_string();
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "r = " << cls.r << "\n";
  for (int s = 1; s <= cls.r; ++s) std::cout << "gamma_" << s << " at " << to_string(cls.roots[s - 1]) << "\n";
  if (cls.r >= 2) std::cout << "nqc = " << t.to_string() << "\n";
  return kOk;
}

int run_codes(const Job& job) {
  const Weight w = job_weight(job);
  job_classify(w);
  const auto codes = enumerate_codes(nqc(w));
  if (job.json) {
    Json j = header(job, w), list = Json::array();
    for (const auto& c : codes) {
      Json pieces = Json::array();
      if (!is_linked(c)) {
        for (const auto& p : decompose(c)) pieces.push_back(to_json(p));
      }
      list.push_back({{"code", to_json(c)}, {"text", to_string(c)}, {"linked", is_linked(c)}, {"pieces", pieces}});
    }
    j["codes"] = list;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& c : codes) {
    std::cout << to_string(c) << "  " << (is_linked(c) ? "linked" : "unlinked");
    if (!is_linked(c)) std::cout << "  " << pieces_text(c);
    std::cout << "\n";
  }
  return kOk;
}

int run_chains(const Job& job) {
  const Weight w = job_weight(job);
  const auto cls = job_classify(w);
  std::vector<ChainSet> chains;
  for (int s = 1; s <= cls.r; ++s) chains.push_back(sw_chain(w, s));
  if (job.json) {
    Json j = header(job, w), list = Json::array();
    for (const auto& ch : chains) list.push_back(to_json(ch));
    j["chains"] = list;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << render_chains(w, chains);
  return kOk;
}

int run_factors(const Job& job) {
  const Weight w = job_weight(job);
  const auto cls = job_classify(w);
  std::vector<Code> codes;
  if (!job.code_text.empty()) {
    codes.push_back(job_code(job, cls));
  } else {
    for (const auto& c : enumerate_codes(nqc(w))) {
      if (!is_linked(c)) codes.push_back(c);
    }
  }
  Json list = Json::array();
  for (const auto& c : codes) {
    Weight sigma;
    PositionSet cells;
    try {
      cells = d_sigma(w, c);
      sigma = sigma_weight(w, c);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (job.json) {
      list.push_back({{"code", to_json(c)}, {"text", to_string(c)}, {"sigma", to_json(sigma)}, {"cells", cells.size()}});
    } else {
      std::cout << to_string(c) << "  " << compact(sigma) << "  (" << cells.size() << " roots)\n";
    }
  }
  if (job.json) {
    Json j = header(job, w);
    j["factors"] = list;
    std::cout << j.dump(2) << "\n";
  }
  return kOk;
}

VerifyOptions verify_options(const Job& job) {
  VerifyOptions opts;
  opts.max_monomials = job.max_verify_dim;
  return opts;
}

Construction job_construct(const Job& job, const Weight& w, const Code& code) {
  try {
    return construct(w, code, verify_options(job));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int run_primvec(const Job& job) {
  const Weight w = job_weight(job);
  const auto cls = job_classify(w);
  const Code code = job_code(job, cls);
  const Construction con = job_construct(job, w, code);
  const Basis& basis = *basis_for(w.shape);
  const bool failed = con.verified == Verdict::no || con.oracle == Verdict::no;

  if (job.json) {
    Json j = header(job, w), factors = Json::array();
    for (const auto& d : con.factors) factors.push_back(to_json(d, basis));
    j["code"] = to_json(code);
    j["sigma"] = to_json(con.weight);
    j["factors"] = factors;
    if (con.g) j["g"] = to_json(*con.g, basis);
    j["vector_terms"] = con.vector.size();
    if (con.vector.size() <= kMaxPrintedTerms) j["vector"] = to_json(con.vector, basis);
    j["verified"] = to_string(con.verified);
    j["oracle"] = to_string(con.oracle);
    j["trace"] = to_json(con.trace);
    std::cout << j.dump(2) << "\n";
    return failed ? kVerifyFailed : kOk;
  }
  std::cout << "code " << to_string(code) << "  Sigma = " << compact(con.weight) << "\n";
  std::cout << "v_Sigma = d_" << con.factors.size() << " ... d_1 v_Lambda\n";
  for (std::size_t k = 0; k < con.factors.size(); ++k) {
    std::cout << "d_" << k + 1 << " = " << to_string(con.factors[k], basis) << "\n";
  }
  if (con.g) std::cout << "g = " << to_string(*con.g, basis) << "\n";
  std::cout << "vector terms in the Kac module: " << con.vector.size() << "\n";
  print_trace(con.trace);
  std::cout << "primitive (realization): " << to_string(con.verified) << "\n";
  std::cout << "primitive (Shapovalov): " << to_string(con.oracle) << "\n";
  return failed ? kVerifyFailed : kOk;
}

int run_verify(const Job& job) {
  const Weight w = job_weight(job);
  const auto cls = job_classify(w);
  const Code code = job_code(job, cls);
  const Construction con = job_construct(job, w, code);

  PrimitivityReport rep;
  if (con.vector.is_zero()) {
    rep.overall = Verdict::skipped;
  } else {
    rep = is_primitive(KacRealization(w), con.vector);
  }
  const bool failed = rep.overall == Verdict::no || con.oracle == Verdict::no;
  if (job.json) {
    Json j = header(job, w), gens = Json::array();
    for (const auto& [i, v] : rep.per_generator) gens.push_back({{"i", i}, {"verdict", to_string(v)}});
    j["code"] = to_json(code);
    j["sigma"] = to_json(con.weight);
    j["generators"] = gens;
    j["primitive"] = to_string(rep.overall);
    j["oracle"] = to_string(con.oracle);
    std::cout << j.dump(2) << "\n";
    return failed ? kVerifyFailed : kOk;
  }
  std::cout << "code " << to_string(code) << "  Sigma = " << compact(con.weight) << "\n";
  for (const auto& [i, v] : rep.per_generator) std::cout << "e_" << i << " v = 0: " << to_string(v) << "\n";
  std::cout << "primitive: " << to_string(rep.overall) << "  (Shapovalov: " << to_string(con.oracle) << ")\n";
  return failed ? kVerifyFailed : kOk;
}

int run(const Job& job) {
  if (job.command == "atyp") return run_atyp(job);
  if (job.command == "nqc") return run_nqc(job);
  if (job.command == "codes") return run_codes(job);
  if (job.command == "chains") return run_chains(job);
  if (job.command == "factors") return run_factors(job);
  if (job.command == "primvec") return run_primvec(job);
  return run_verify(job);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atypicality combinatorics and primitive vectors for sl(m+1/n+1)"};
  app.require_subcommand(1);

  Job job;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"atyp", "atypicality matrix A(Lambda)"},
      {"nqc", "atypical roots and their nqc-type"},
      {"codes", "permissible codes"},
      {"chains", "south-west chains"},
      {"factors", "highest weights Sigma of the unlinked codes"},
      {"primvec", "construct the primitive vector of a code"},
      {"verify", "construct and check primitivity generator by generator"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--shape", job.shape, "m n for sl(m+1/n+1)")->expected(2);
    sub->add_option("--weight", job.weight_text, "Dynkin labels [a_-m..;a_0;..a_n]")->required();
    sub->add_option("--code", job.code_text, "code, columns separated by spaces, labels by '/'");
    sub->add_flag("--json", job.json, "JSON output");
    sub->add_option("--max-verify-dim", job.max_verify_dim, "largest weight space the Shapovalov test will handle");
    sub->callback([&job, name = name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return run(job);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
