#include "fibpoly/json_io.hpp"

namespace fibpoly {

using nlohmann::json;

void to_json(json& j, const FinSet& s) {
  j = json{{"size", s.size}};
  if (s.labels) j["labels"] = *s.labels;
}

void from_json(const json& j, FinSet& s) {
  int size = j.at("size").get<int>();
  if (j.contains("labels"))
    s = FinSet(size, j.at("labels").get<std::vector<std::string>>());
  else
    s = FinSet(size);
}

void to_json(json& j, const FinMap& f) {
  j = json{{"dom", f.dom}, {"cod", f.cod}, {"table", f.table}};
}

void from_json(const json& j, FinMap& f) {
  f = FinMap(j.at("dom").get<FinSet>(), j.at("cod").get<FinSet>(),
             j.at("table").get<std::vector<int>>());
}

void to_json(json& j, const SliceObj& x) {
  j = json{{"base", x.base}, {"total", x.total}, {"proj", x.proj}};
}

void from_json(const json& j, SliceObj& x) {
  x = SliceObj(j.at("base").get<FinSet>(), j.at("total").get<FinSet>(),
               j.at("proj").get<FinMap>());
}

void to_json(json& j, const SliceMap& f) {
  j = json{{"src", f.src}, {"dst", f.dst}, {"map", f.map}};
}

void to_json(json& j, const Span& s) {
  j = json{{"I", s.left_base}, {"M", s.apex}, {"K", s.fiber_base}, {"p", s.p}, {"q", s.q}};
}

void from_json(const json& j, Span& s) {
  s = Span(j.at("I").get<FinSet>(), j.at("M").get<FinSet>(), j.at("K").get<FinSet>(),
           j.at("p").get<FinMap>(), j.at("q").get<FinMap>());
}

void to_json(json& j, const SpanMap& f) {
  j = json{{"src", f.src}, {"dst", f.dst}, {"v", f.v}, {"w", f.w}};
}

void to_json(json& j, const PullbackSquare& sq) {
  j = json{{"u", sq.u}, {"b", sq.b}, {"v", sq.v}, {"a", sq.a}};
}

void from_json(const json& j, PullbackSquare& sq) {
  sq = PullbackSquare{j.at("u").get<FinMap>(), j.at("b").get<FinMap>(), j.at("v").get<FinMap>(),
                      j.at("a").get<FinMap>()};
}

void to_json(json& j, const Polynomial& p) {
  j = json{{"I", p.I}, {"E", p.E}, {"B", p.B}, {"J", p.J}, {"s", p.s}, {"p", p.p}, {"t", p.t}};
}

void from_json(const json& j, Polynomial& p) {
  p = Polynomial(j.at("I").get<FinSet>(), j.at("E").get<FinSet>(), j.at("B").get<FinSet>(),
                 j.at("J").get<FinSet>(), j.at("s").get<FinMap>(), j.at("p").get<FinMap>(),
                 j.at("t").get<FinMap>());
}

void to_json(json& j, const FinGraph& g) {
  j = json{{"V", g.vertices}, {"E", g.edges}, {"src", g.src}, {"tgt", g.tgt}};
}

void from_json(const json& j, FinGraph& g) {
  g = FinGraph(j.at("V").get<FinSet>(), j.at("E").get<FinSet>(), j.at("src").get<FinMap>(),
               j.at("tgt").get<FinMap>());
}

void to_json(json& j, const GSet& g) {
  j = json{{"table", g.group.table}, {"carrier", g.carrier}, {"action", g.action}};
}

void from_json(const json& j, GSet& g) {
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  const int order = static_cast<int>(table.size());
  Group group(FinSet(order), std::move(table));
  g = GSet(std::move(group), j.at("carrier").get<FinSet>(), j.at("action").get<FinMap>());
}

}  // namespace fibpoly
