#pragma once

// JSON, DOT and plain-text renderings of the module results. Every collection is
// emitted in a sorted order so output is byte-identical between runs.

#include <optional>
#include <string>

#include <json.hpp>

#include "nash/grassmann.hpp"
#include "nash/nashcore.hpp"
#include "nash/peterson.hpp"
#include "nash/zelevinsky.hpp"

namespace nash {

using json = nlohmann::ordered_json;

json roots_json(const std::vector<Root>& roots);
json box_json(const CoessBox& b);
json flag_json(const CoordFlag& f);

json nash_json(const SchubertDatum& d, const NashData& data);
std::string nash_text(const SchubertDatum& d, const NashData& data);

// One row per state: v (the fixed point of X_w^Q mapping to it, when a cominuscule
// datum is supplied), v~ and N.
struct TranslateRow {
  std::optional<WeylElement> v;
  PetersonState state;
};
std::vector<TranslateRow> translate_rows(const TranslationGraph& g, const SchubertDatum* d);

json peterson_json(const WeylGroup& W, const ParabolicSubset& P, const TranslationGraph& g,
                   const SchubertDatum* d);
std::string peterson_text(const WeylGroup& W, const TranslationGraph& g, const SchubertDatum* d);
std::string peterson_dot(const WeylGroup& W, const TranslationGraph& g);

json grassmann_json(const ConfigDescription& c);
std::string grassmann_text(const ConfigDescription& c);

json conjecture_json(const ConjectureReport& r);
std::string conjecture_text(const ConjectureReport& r);

}  // namespace nash
