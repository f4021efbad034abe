#pragma once

// JSON formats shared by every module and the CLI:
//   FinSet    {"size": n, "labels": [...]?}
//   FinMap    {"dom": ..., "cod": ..., "table": [...]}
//   SliceObj  {"base": ..., "total": ..., "proj": ...}
//   Span      {"I": ..., "M": ..., "K": ..., "p": ..., "q": ...}
//   Polynomial{"I","E","B","J","s","p","t"}
//   FinGraph  {"V","E","src","tgt","length"?}
//   GSet      {"table","carrier","action"}
//   PullbackSquare {"u","b","v","a"}

#include <json.hpp>

#include "fibpoly/counterexamples.hpp"
#include "fibpoly/fibspan.hpp"
#include "fibpoly/poly.hpp"

namespace fibpoly {

void to_json(nlohmann::json& j, const FinSet& s);
void from_json(const nlohmann::json& j, FinSet& s);

void to_json(nlohmann::json& j, const FinMap& f);
void from_json(const nlohmann::json& j, FinMap& f);

void to_json(nlohmann::json& j, const SliceObj& x);
void from_json(const nlohmann::json& j, SliceObj& x);

void to_json(nlohmann::json& j, const SliceMap& f);

void to_json(nlohmann::json& j, const Span& s);
void from_json(const nlohmann::json& j, Span& s);

void to_json(nlohmann::json& j, const SpanMap& f);

void to_json(nlohmann::json& j, const PullbackSquare& sq);
void from_json(const nlohmann::json& j, PullbackSquare& sq);

void to_json(nlohmann::json& j, const Polynomial& p);
void from_json(const nlohmann::json& j, Polynomial& p);

void to_json(nlohmann::json& j, const FinGraph& g);
void from_json(const nlohmann::json& j, FinGraph& g);

void to_json(nlohmann::json& j, const GSet& g);
void from_json(const nlohmann::json& j, GSet& g);

}  // namespace fibpoly
