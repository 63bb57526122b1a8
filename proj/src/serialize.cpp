#include "superkac/serialize.hpp"

#include <stdexcept>

#include "superkac/format.hpp"

namespace superkac {

namespace {

Json to_json(const Position& p) { return Json::array({p.b, p.c}); }

Position position_from_json(const Json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

Json to_json(const std::vector<Position>& cells) {
  Json out = Json::array();
  for (const auto& p : cells) out.push_back(to_json(p));
  return out;
}

std::vector<Position> positions_from_json(const Json& j) {
  std::vector<Position> out;
  for (const auto& p : j) out.push_back(position_from_json(p));
  return out;
}

Json to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Monomial single_monomial(const Shape& s, const std::string& text) {
  if (text.empty() || text == "1") return {};
  const Element x = parse_element(s, text);
  if (x.size() != 1 || x.terms().begin()->second != 1) {
    throw std::invalid_argument("expected a single monomial, got '" + text + "'");
  }
  return x.terms().begin()->first;
}

}  // namespace

Json to_json(const Weight& w) {
  return {{"shape", {w.shape.m, w.shape.n}}, {"labels", to_json(w.labels)}, {"text", to_string(w)}};
}

Weight weight_from_json(const Json& j) {
  const Shape s{j.at("shape").at(0).get<int>(), j.at("shape").at(1).get<int>()};
  Weight w = Weight::zero(s);
  const auto& labels = j.at("labels");
  if (labels.size() != static_cast<std::size_t>(s.rank())) throw std::invalid_argument("label count does not match shape");
  for (int k = 0; k < s.rank(); ++k) w.labels[k] = parse_rational(labels.at(k).get<std::string>());
  return w;
}

Json to_json(const Code& code) { return code.columns; }

Code code_from_json(const Json& j) { return {j.get<std::vector<std::vector<int>>>()}; }

Json to_json(const ChainSet& ch) {
  return {{"s", ch.s},
          {"start", to_json(ch.start)},
          {"west_ext", to_json(ch.west_ext)},
          {"south_ext", to_json(ch.south_ext)},
          {"west", to_json(ch.west)},
          {"south", to_json(ch.south)},
          {"sw", to_json(ch.sw)}};
}

ChainSet chain_set_from_json(const Json& j) {
  ChainSet ch;
  ch.s = j.at("s").get<int>();
  ch.start = position_from_json(j.at("start"));
  ch.west_ext = positions_from_json(j.at("west_ext"));
  ch.south_ext = positions_from_json(j.at("south_ext"));
  ch.west = positions_from_json(j.at("west"));
  ch.south = positions_from_json(j.at("south"));
  ch.sw = positions_from_json(j.at("sw"));
  return ch;
}

Json to_json(const Element& x, const Basis& basis) { return to_string(x, basis); }

Element element_from_json(const Shape& s, const Json& j) { return parse_element(s, j.get<std::string>()); }

Json to_json(const KacVector& v, const Basis& basis) {
  Json terms = Json::array();
  for (const auto& [odd, part] : v.parts) {
    const std::string b = odd.empty() ? "1" : to_string(Element::monomial(odd), basis);
    for (const auto& [state, c] : part) {
      Json masks = Json::array();
      for (char ch : state) masks.push_back(static_cast<unsigned char>(ch));
      terms.push_back({{"odd", b}, {"state", masks}, {"coeff", to_string(c)}});
    }
  }
  return terms;
}

KacVector kac_vector_from_json(const Shape& s, const Json& j) {
  KacVector v;
  for (const auto& t : j) {
    EvenModule::State state;
    for (const auto& m : t.at("state")) state.push_back(static_cast<char>(m.get<unsigned>()));
    v.add(single_monomial(s, t.at("odd").get<std::string>()), state, parse_rational(t.at("coeff").get<std::string>()));
  }
  return v;
}

Json to_json(const ConstructionTrace& t) {
  Json pieces = Json::array();
  for (const auto& p : t.pieces) {
    Json levels = Json::array();
    for (const auto& l : p.levels) {
      Json roots = Json::array(), steps = Json::array();
      for (const auto& r : l.roots) roots.push_back({r.i, r.j});
      for (const auto& st : l.steps) steps.push_back({{"J", st.J}, {"C", to_json(st.C)}});
      levels.push_back({{"level", {l.level.m, l.level.n}},
                        {"x", l.x},
                        {"y", l.y},
                        {"branch", std::string(1, l.branch)},
                        {"tie", l.tie},
                        {"roots", roots},
                        {"steps", steps}});
    }
    pieces.push_back({{"code", to_json(p.code)},
                      {"cells", to_json(p.cells)},
                      {"start", to_json(p.start)},
                      {"levels", levels}});
  }
  return {{"lambda", to_json(t.lambda)}, {"code", to_json(t.code)}, {"attempts", t.attempts}, {"pieces", pieces}};
}

}  // namespace superkac
