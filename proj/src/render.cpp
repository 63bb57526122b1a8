#include "superkac/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "superkac/atypicality.hpp"

namespace superkac {

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string grid(const Weight& w, const std::map<Position, char>& tags, bool tagged) {
  const AtypMatrix a = atyp_matrix(w);
  const Shape& s = w.shape;

  std::size_t cell = 1, margin = 0;
  for (const auto& x : a.entries) cell = std::max(cell, to_string(x).size());
  for (int i = -s.m; i <= s.n; ++i) {
    const std::size_t len = to_string(w[i]).size();
    if (i < 0) margin = std::max(margin, len);
    if (i > 0) cell = std::max(cell, len);
  }
  const std::size_t col_width = cell + (tagged ? 3 : 2);
  const std::string indent(margin + 1, ' ');

  std::ostringstream out;
  out << to_string(s) << "  a_0 = " << to_string(w[0]) << '\n';
  for (int b = 1; b <= a.rows(); ++b) {
    out << indent;
    for (int c = 1; c <= a.cols(); ++c) {
      out << pad_left(to_string(a.at(b, c)), col_width - (tagged ? 1 : 0));
      if (tagged) {
        auto it = tags.find({b, c});
        out << (it == tags.end() ? ' ' : it->second);
      }
    }
    out << '\n';
    if (b < a.rows()) out << pad_left(to_string(w[-(s.m - b + 1)]), margin) << '\n';
  }
  if (s.n > 0) {
    // Each label is centred under the gap between columns c and c+1.
    out << indent << std::string(col_width / 2, ' ');
    for (int c = 1; c <= s.n; ++c) out << pad_left(to_string(w[c]), col_width);
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_matrix(const Weight& w) { return grid(w, {}, false); }

std::string render_chains(const Weight& w, const std::vector<ChainSet>& chains) {
  std::map<Position, char> tags;
  for (const auto& ch : chains) {
    tags.emplace(ch.start, '*');
    for (std::size_t k = 1; k < ch.west.size(); ++k) tags.emplace(ch.west[k], '<');
    for (std::size_t k = 1; k < ch.south.size(); ++k) tags.emplace(ch.south[k], 'v');
  }
  std::string out = grid(w, tags, true);
  for (const auto& ch : chains) out += "SW(" + std::to_string(ch.s) + ") = " + to_string(ch.sw) + '\n';
  return out;
}

std::string to_string(const Position& p) {
  return "(" + std::to_string(p.b) + "," + std::to_string(p.c) + ")";
}

std::string to_string(const PositionSet& cells) {
  std::string out = "{";
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out += ',';
    out += to_string(cells[k]);
  }
  return out + "}";
}

std::string to_string(const RootIndex& r) {
  return "alpha(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

}  // namespace superkac
