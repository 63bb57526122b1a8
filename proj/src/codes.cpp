#include "superkac/codes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "superkac/parallel.hpp"

namespace superkac {

bool Code::contains(int s, int label) const {
  const auto& col = columns[s - 1];
  return std::find(col.begin(), col.end(), label) != col.end();
}

bool Code::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
}

std::string to_string(const Code& code) {
  std::string out;
  for (int s = 1; s <= code.r(); ++s) {
    if (s > 1) out += ' ';
    const auto& col = code.column(s);
    if (col.empty()) {
      out += '0';
      continue;
    }
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (k) out += '/';
      out += std::to_string(col[k]);
    }
  }
  return out;
}

Code parse_code(const std::string& text) {
  Code code;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::vector<int> col;
    std::stringstream parts(token);
    std::string part;
    while (std::getline(parts, part, '/')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) {
        throw std::invalid_argument("malformed code column '" + token + "'");
      }
      col.push_back(std::stoi(part));
    }
    if (col.size() == 1 && col[0] == 0) col.clear();
    code.columns.push_back(std::move(col));
  }
  return code;
}

namespace {

bool well_formed(const Code& code) {
  for (const auto& col : code.columns) {
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k] < 1 || col[k] > code.r()) return false;
      if (k && col[k] <= col[k - 1]) return false;
    }
  }
  return true;
}

bool rule1(const Code& code, const NqcType& t) {
  const int r = code.r();
  for (int s = 1; s <= r; ++s) {
    int a = code.top(s);
    if (a == 0 || a == s) continue;
    if (a < s) return false;
    bool found = false;
    for (int u = s + 1; u <= r && !found; ++u) found = t.at(s, u) == Relation::q && code.top(u) == a;
    if (!found) return false;
  }
  return true;
}

bool rule2(const Code& code, const NqcType& t) {
  const int r = code.r();
  for (int u = 2; u <= r; ++u) {
    int a = code.top(u);
    if (a == 0 || a < u) continue;
    for (int s = u - 1; s >= 1; --s) {
      if (t.at(s, u) != Relation::c) break;  // the c-run s..u-1 must be unbroken
      const auto& col = code.column(s);
      if (col.empty() || std::find(col.begin() + 1, col.end(), a) == col.end()) return false;
    }
  }
  return true;
}

// Column u wraps column s: every relation from s..u-1 to u is c.
bool wraps(const NqcType& t, int s, int u) {
  for (int w = s; w < u; ++w) {
    if (t.at(w, u) != Relation::c) return false;
  }
  return true;
}

bool rule3(const Code& code, const NqcType& t) {
  const int r = code.r();
  for (int s = 1; s <= r; ++s) {
    const auto& col = code.column(s);
    for (std::size_t k = 0; k < col.size(); ++k) {
      for (std::size_t l = k + 1; l < col.size(); ++l) {
        int u = col[l];
        if (code.top(u) != u || t.at(col[k], u) != Relation::c) return false;
      }
    }
    // A label below the top is there only as a wrap, possibly through a
    // column linked to column u.
    for (std::size_t l = 1; l < col.size(); ++l) {
      bool justified = false;
      for (int u = s + 1; u <= r && !justified; ++u) justified = code.top(u) == col[l] && wraps(t, s, u);
      if (!justified) return false;
    }
  }
  return true;
}

bool rule4(const Code& code) {
  const int r = code.r();
  // successor[label] = label right below it, 0 for none, -1 unseen.
  std::vector<int> successor(r + 1, -1);
  for (const auto& col : code.columns) {
    for (std::size_t k = 0; k < col.size(); ++k) {
      int next = k + 1 < col.size() ? col[k + 1] : 0;
      int& seen = successor[col[k]];
      if (seen == -1) {
        seen = next;
      } else if (seen != next) {
        return false;
      }
    }
  }
  return true;
}

bool rule5(const Code& code, const NqcType& t) {
  const int r = code.r();
  for (int s = 1; s <= r; ++s) {
    for (int u = s + 1; u <= r; ++u) {
      if (t.at(s, u) != Relation::q) continue;
      for (int v = u + 1; v <= r; ++v) {
        if (t.at(u, v) != Relation::q) continue;
        int a = code.top(s);
        if (a != 0 && a == code.top(v) && code.top(u) == 0) return false;
      }
    }
  }
  return true;
}

bool rule6(const Code& code) {
  const int r = code.r();
  for (int s = 1; s <= r; ++s) {
    for (int t = s + 1; t <= r; ++t) {
      for (int u = t + 1; u <= r; ++u) {
        for (int v = u + 1; v <= r; ++v) {
          int a = code.top(s), b = code.top(t);
          if (a == 0 || b == 0 || a == b) continue;
          if (code.top(u) != a || code.top(v) != b) continue;
          if (a < b && !(code.contains(s, b) && code.contains(u, b))) return false;
          if (a > b && !(code.contains(t, a) && code.contains(v, a))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<int> failed_rules(const Code& code, const NqcType& t) {
  if (code.r() != t.r()) throw std::invalid_argument("code length differs from the number of atypical roots");
  if (!well_formed(code)) return {0};
  std::vector<int> out;
  if (!rule1(code, t)) out.push_back(1);
  if (!rule2(code, t)) out.push_back(2);
  if (!rule3(code, t)) out.push_back(3);
  if (!rule4(code)) out.push_back(4);
  if (!rule5(code, t)) out.push_back(5);
  if (!rule6(code)) out.push_back(6);
  return out;
}

bool is_permissible(const Code& code, const NqcType& t) { return failed_rules(code, t).empty(); }

namespace {

// Chains of labels that may sit below a top label a: every pair (p, u) in the
// column, p above u, needs top(u) == u and a c-relation.
void extend_tail(const NqcType& t, const std::vector<int>& tops, std::vector<int>& col, int from,
                 std::vector<std::vector<int>>& out) {
  out.push_back(col);
  const int r = t.r();
  for (int u = from; u <= r; ++u) {
    if (tops[u] != u) continue;
    bool ok = std::all_of(col.begin(), col.end(), [&](int p) { return t.at(p, u) == Relation::c; });
    if (!ok) continue;
    col.push_back(u);
    extend_tail(t, tops, col, u + 1, out);
    col.pop_back();
  }
}

void fill_columns(const NqcType& t, const std::vector<std::vector<std::vector<int>>>& options, Code& code,
                  int s, std::vector<Code>& out) {
  if (s > t.r()) {
    if (is_permissible(code, t)) out.push_back(code);
    return;
  }
  for (const auto& col : options[s]) {
    code.columns[s - 1] = col;
    fill_columns(t, options, code, s + 1, out);
  }
}

void assign_tops(const NqcType& t, std::vector<int>& tops, int s, std::vector<Code>& out) {
  const int r = t.r();
  if (s == 0) {
    // Wrap obligations of rule (ii): column u's top must appear below the top
    // of every column in the unbroken c-run ending at u.
    std::vector<std::vector<std::vector<int>>> options(r + 1);
    for (int k = 1; k <= r; ++k) {
      if (tops[k] == 0) {
        options[k] = {{}};
        continue;
      }
      std::vector<int> col{tops[k]};
      std::vector<std::vector<int>> tails;
      extend_tail(t, tops, col, tops[k] + 1, tails);
      std::vector<int> required;
      for (int u = k + 1; u <= r; ++u) {
        bool run = true;
        for (int v = k; v < u && run; ++v) run = t.at(v, u) == Relation::c;
        if (run && tops[u] != 0) required.push_back(tops[u]);
      }
      for (auto& tail : tails) {
        bool ok = std::all_of(required.begin(), required.end(),
                              [&](int a) { return std::find(tail.begin() + 1, tail.end(), a) != tail.end(); });
        if (ok) options[k].push_back(std::move(tail));
      }
      if (options[k].empty()) return;
    }
    Code code = Code::zero(r);
    fill_columns(t, options, code, 1, out);
    return;
  }
  std::set<int> choices{0, s};
  for (int u = s + 1; u <= r; ++u) {
    if (t.at(s, u) == Relation::q && tops[u] != 0) choices.insert(tops[u]);
  }
  for (int a : choices) {
    tops[s] = a;
    assign_tops(t, tops, s - 1, out);
  }
  tops[s] = 0;
}

}  // namespace

std::vector<Code> enumerate_codes(const NqcType& t) {
  std::vector<Code> out;
  std::vector<int> tops(t.r() + 1, 0);
  assign_tops(t, tops, t.r(), out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<std::vector<int>> all_columns(int r) {
  std::vector<std::vector<int>> cols;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> col;
    for (int k = 0; k < r; ++k) {
      if (mask & (1u << k)) col.push_back(k + 1);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

// Depth-first over all column tuples. Columns whose top label is below their
// own index fail rule (i) whatever the other columns are, so those branches
// are cut as soon as the column is placed.
void exhaustive_from(const NqcType& t, const std::vector<std::vector<int>>& cols, Code& code, int s,
                     std::vector<Code>& out) {
  if (s > t.r()) {
    if (is_permissible(code, t)) out.push_back(code);
    return;
  }
  for (const auto& col : cols) {
    if (!col.empty() && col.front() < s) continue;
    code.columns[s - 1] = col;
    exhaustive_from(t, cols, code, s + 1, out);
  }
  code.columns[s - 1].clear();
}

}  // namespace

std::vector<Code> enumerate_codes_exhaustive_serial(const NqcType& t) {
  std::vector<Code> out;
  Code code = Code::zero(t.r());
  exhaustive_from(t, all_columns(t.r()), code, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Code> enumerate_codes_exhaustive(const NqcType& t) {
  const int r = t.r();
  if (r == 0) return {Code{}};
  const auto cols = all_columns(r);
  std::vector<std::vector<Code>> found(cols.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (std::size_t k = 0; k < cols.size(); ++k) {
    Code code = Code::zero(r);
    code.columns[0] = cols[k];
    exhaustive_from(t, cols, code, 2, found[k]);
  }
  std::vector<Code> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_linked(const Code& code) {
  std::set<int> tops;
  for (int s = 1; s <= code.r(); ++s) {
    int a = code.top(s);
    if (a != 0 && !tops.insert(a).second) return true;
  }
  return false;
}

namespace {

std::vector<int> components(const Code& code) {
  const int r = code.r();
  std::vector<int> parent(r + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 1; s <= r; ++s) {
    for (int u = s + 1; u <= r; ++u) {
      const auto& a = code.column(s);
      bool share = std::any_of(a.begin(), a.end(), [&](int label) { return code.contains(u, label); });
      if (share) parent[find(s)] = find(u);
    }
  }
  std::vector<int> comp(r + 1, 0);
  for (int s = 1; s <= r; ++s) comp[s] = code.column(s).empty() ? 0 : find(s);
  return comp;
}

}  // namespace

bool connected(const Code& code, int s, int t) {
  auto comp = components(code);
  return comp[s] != 0 && comp[s] == comp[t];
}

std::vector<Code> decompose(const Code& code) {
  auto comp = components(code);
  std::vector<Code> pieces;
  std::vector<int> seen;
  for (int s = 1; s <= code.r(); ++s) {
    if (comp[s] == 0 || std::find(seen.begin(), seen.end(), comp[s]) != seen.end()) continue;
    seen.push_back(comp[s]);
    Code piece = Code::zero(code.r());
    for (int u = s; u <= code.r(); ++u) {
      if (comp[u] == comp[s]) piece.columns[u - 1] = code.column(u);
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

bool is_indecomposable(const Code& code) { return decompose(code).size() == 1; }

}  // namespace superkac
