#include "superkac/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace superkac {

namespace {

Position root_position(const Weight& w, int s) {
  auto roots = atypical_roots(atyp_matrix(w));
  if (s < 1 || s > static_cast<int>(roots.size())) throw std::out_of_range("no such atypical root");
  return roots[s - 1];
}

int label(const Weight& w, int i) {
  const Rational& q = w[i];
  if (!is_integer(q)) throw std::invalid_argument("chains need integral labels");
  return static_cast<int>(q.get_num().get_si());
}

PositionSet normalize(std::vector<Position> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Position> west_chain_ext(const Weight& w, int s) {
  const Shape& sh = w.shape;
  Position g = root_position(w, s);
  std::vector<Position> out{g};
  int row = g.b;
  for (int c = g.c - 1; c >= 1; --c) {
    row += label(w, c);
    if (row > sh.m + 1) break;
    out.push_back({row, c});
  }
  return out;
}

std::vector<Position> south_chain_ext(const Weight& w, int s) {
  const Shape& sh = w.shape;
  Position g = root_position(w, s);
  std::vector<Position> out{g};
  int col = g.c;
  for (int b = g.b + 1; b <= sh.m + 1; ++b) {
    col -= label(w, -(sh.m - (b - 1) + 1));
    if (col < 1) break;
    out.push_back({b, col});
  }
  return out;
}

ChainSet sw_chain(const Weight& w, int s) {
  ChainSet ch;
  ch.s = s;
  ch.start = root_position(w, s);
  ch.west_ext = west_chain_ext(w, s);
  ch.south_ext = south_chain_ext(w, s);

  auto south_col_in_row = [&](int row) -> std::optional<int> {
    for (const auto& p : ch.south_ext) {
      if (p.b == row) return p.c;
    }
    return std::nullopt;
  };
  auto west_row_in_col = [&](int col) -> std::optional<int> {
    for (const auto& p : ch.west_ext) {
      if (p.c == col) return p.b;
    }
    return std::nullopt;
  };

  // A west position is clear while it lies strictly left of the south chain
  // in its row; a south position while it lies strictly below the west chain
  // in its column. A missing partner means the other chain has already left
  // the matrix on that side, which counts as having crossed.
  std::size_t west_keep = ch.west_ext.size();
  for (std::size_t k = 1; k < ch.west_ext.size(); ++k) {
    auto sc = south_col_in_row(ch.west_ext[k].b);
    if (!sc || ch.west_ext[k].c >= *sc) {
      west_keep = k;
      break;
    }
  }
  std::size_t south_keep = ch.south_ext.size();
  for (std::size_t k = 1; k < ch.south_ext.size(); ++k) {
    auto wr = west_row_in_col(ch.south_ext[k].c);
    if (!wr || *wr >= ch.south_ext[k].b) {
      south_keep = k;
      break;
    }
  }
  // S goes above W straight away when, one column left of the zero, the west
  // chain has already dropped (a_{c_s - 1} > 0) while the south chain, which
  // moves a_{-(m - b_s + 1)} columns over its first row, has not reached the row
  // below yet. Meeting exactly at (b_s + 1, c_s - 1) leaves only the zero as well.
  const Shape& sh = w.shape;
  const bool south_crosses_at_once = ch.start.c > 1 && ch.start.b <= sh.m && w[ch.start.c - 1] > 0 &&
                                     w[-(sh.m - ch.start.b + 1)] > 0;
  if (south_crosses_at_once) west_keep = south_keep = 1;

  ch.west.assign(ch.west_ext.begin(), ch.west_ext.begin() + west_keep);
  ch.south.assign(ch.south_ext.begin(), ch.south_ext.begin() + south_keep);
  std::vector<Position> all = ch.west;
  all.insert(all.end(), ch.south.begin(), ch.south.end());
  ch.sw = normalize(std::move(all));
  return ch;
}

PositionSet region_D(const Weight& w, int t) {
  ChainSet ch = sw_chain(w, t);
  const Position end_w = ch.west.back();
  const Position end_s = ch.south.back();
  std::vector<Position> cells;
  for (int b = ch.start.b; b <= end_s.b; ++b) {
    int s_col = 0;
    for (const auto& p : ch.south) {
      if (p.b == b) s_col = p.c;
    }
    for (int c = end_w.c; c <= ch.start.c; ++c) {
      int w_row = 0;
      for (const auto& p : ch.west) {
        if (p.c == c) w_row = p.b;
      }
      if (w_row <= b && c <= s_col) cells.push_back({b, c});
    }
  }
  return normalize(std::move(cells));
}

PositionSet set_union(const PositionSet& a, const PositionSet& b) {
  PositionSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const PositionSet& big, const PositionSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

PositionSet d_sigma(const Weight& w, const Code& code) {
  if (is_linked(code)) throw std::invalid_argument("linked codes have no south west chain region");
  const int r = static_cast<int>(atypical_roots(atyp_matrix(w)).size());
  if (code.r() != r) throw std::invalid_argument("code length differs from the atypicality of the weight");
  PositionSet out;
  for (int s = 1; s <= r; ++s) {
    if (!code.column(s).empty()) out = set_union(out, sw_chain(w, s).sw);
  }
  for (int s = 1; s <= r; ++s) {
    if (!code.column(s).empty() && !includes(out, region_D(w, s))) {
      throw std::logic_error("south west chains of the code do not close up around D(t)");
    }
  }
  return out;
}

std::vector<RootIndex> roots_of(const Shape& s, const PositionSet& cells) {
  std::vector<RootIndex> out;
  out.reserve(cells.size());
  for (const auto& p : cells) out.push_back(odd_root_at(s, p));
  return out;
}

Weight sigma_weight(const Weight& w, const Code& code) {
  return minus_roots(w, roots_of(w.shape, d_sigma(w, code)));
}

std::optional<int> check_indecomposable_region(const Weight& w, const Code& code) {
  PositionSet ds = d_sigma(w, code);
  if (ds.empty()) return std::nullopt;
  for (int t = 1; t <= code.r(); ++t) {
    if (region_D(w, t) == ds) return t;
  }
  return std::nullopt;
}

}  // namespace superkac
