#include "nash/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nash {

namespace {

json int_list(const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(x);
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string set_text(const std::vector<Root>& roots) {
  std::vector<std::string> parts;
  for (const auto& r : roots) parts.push_back(r.to_string());
  return "{" + join(parts, ", ") + "}";
}

std::string ints_text(const std::vector<int>& xs) {
  std::vector<std::string> parts;
  for (int x : xs) parts.push_back(std::to_string(x));
  return "{" + join(parts, ",") + "}";
}

std::string box_text(const CoessBox& b) {
  return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ") r=" + std::to_string(b.r);
}

std::string subset_text(std::uint32_t s) {
  std::vector<std::string> parts;
  for (int i = 0; i < 32; ++i)
    if ((s >> i) & 1u) parts.push_back(std::to_string(i + 1));
  return "{" + join(parts, ",") + "}";
}

json subset_json(std::uint32_t s) {
  json a = json::array();
  for (int i = 0; i < 32; ++i)
    if ((s >> i) & 1u) a.push_back(i + 1);
  return a;
}

}  // namespace

json roots_json(const std::vector<Root>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back(r.to_string());
  return a;
}

json box_json(const CoessBox& b) { return {{"p", b.p}, {"q", b.q}, {"r", b.r}}; }

json flag_json(const CoordFlag& f) {
  json a = json::array();
  for (auto s : f.sets) a.push_back(subset_json(s));
  return a;
}

// ---- nash -------------------------------------------------------------------

json nash_json(const SchubertDatum& d, const NashData& data) {
  const WeylGroup& W = d.group();
  json j;
  j["type"] = d.root_system().cartan_type().name();
  j["levi"] = int_list(d.parabolic().levi());
  j["cominuscule_index"] = d.cominuscule_index();
  j["w"] = W.word_string(d.element());
  j["delta_w"] = int_list(data.delta_w);
  j["Q_levi"] = int_list(data.Q.levi());
  j["fixed_point_count"] = data.fixed_points.size();
  json fps = json::array();
  for (const auto& z : data.fixed_points) fps.push_back(W.word_string(z));
  j["fixed_points"] = fps;
  j["E"] = roots_json(data.E);
  json fibers = json::array();
  json singular = json::array();
  for (const auto& f : data.fibers) {
    json words = json::array();
    for (const auto& p : f.points) words.push_back(W.word_string(p));
    fibers.push_back({{"v_word", W.word_string(f.v)}, {"fiber_words", words}, {"smooth", f.smooth}});
    if (!f.smooth) singular.push_back(W.word_string(f.v));
  }
  j["fibers"] = fibers;
  j["singular"] = singular;
  return j;
}

std::string nash_text(const SchubertDatum& d, const NashData& data) {
  const WeylGroup& W = d.group();
  std::ostringstream os;
  os << "type " << d.root_system().cartan_type().name() << ", P levi " << ints_text(d.parabolic().levi())
     << " (cominuscule alpha_" << d.cominuscule_index() << "), w = " << W.word_string(d.element()) << "\n";
  std::vector<std::string> dw;
  for (int i : data.delta_w) dw.push_back("alpha_" + std::to_string(i));
  os << "Delta_w = {" << join(dw, ", ") << "}\n";
  os << "Q levi = " << ints_text(data.Q.levi()) << "\n";
  os << "E = " << set_text(data.E) << "\n";
  os << "fixed points of the Nash blow-up: " << data.fixed_points.size() << "\n";
  for (const auto& f : data.fibers) {
    std::vector<std::string> words;
    for (const auto& p : f.points) words.push_back(W.word_string(p));
    os << "  over " << W.word_string(f.v) << ": " << f.points.size() << " [" << join(words, " ") << "] "
       << (f.smooth ? "smooth" : "singular") << "\n";
  }
  return os.str();
}

// ---- peterson ---------------------------------------------------------------

std::vector<TranslateRow> translate_rows(const TranslationGraph& g, const SchubertDatum* d) {
  std::map<PetersonState, WeylElement> preimage;
  if (d)
    for (const auto& z : nash_fixed_points(*d)) preimage.emplace(theorem2_map(*d, z), z);
  std::vector<TranslateRow> rows;
  for (const auto& s : g.nodes) {
    TranslateRow row{std::nullopt, s};
    if (auto it = preimage.find(s); it != preimage.end()) row.v = it->second;
    rows.push_back(std::move(row));
  }
  return rows;
}

json peterson_json(const WeylGroup& W, const ParabolicSubset& P, const TranslationGraph& g,
                   const SchubertDatum* d) {
  json j;
  j["type"] = W.root_system().cartan_type().name();
  j["levi"] = int_list(P.levi());
  j["w"] = W.word_string(g.nodes.at(g.root).z);
  json rows = json::array();
  std::size_t id = 0;
  for (const auto& row : translate_rows(g, d)) {
    json r;
    r["id"] = id++;
    r["v"] = row.v ? json(W.word_string(*row.v)) : json(nullptr);
    r["v_tilde"] = W.word_string(row.state.z);
    r["N"] = roots_json(row.state.M);
    rows.push_back(r);
  }
  j["translates"] = rows;
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"source", e.source}, {"target", e.target}, {"label", reflection_label(e.label)},
                     {"root", e.label.to_string()}});
  j["edges"] = edges;
  return j;
}

std::string peterson_text(const WeylGroup& W, const TranslationGraph& g, const SchubertDatum* d) {
  std::ostringstream os;
  os << "v\tv~\tN\n";
  for (const auto& row : translate_rows(g, d))
    os << (row.v ? W.word_string(*row.v) : std::string("-")) << "\t" << W.word_string(row.state.z) << "\t"
       << set_text(row.state.M) << "\n";
  os << "edges:\n";
  for (const auto& e : g.edges)
    os << "  " << e.source << " -> " << e.target << "  " << reflection_label(e.label) << "\n";
  return os.str();
}

std::string peterson_dot(const WeylGroup& W, const TranslationGraph& g) {
  std::ostringstream os;
  os << "digraph translates {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << W.word_string(g.nodes[i].z) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  n" << e.source << " -> n" << e.target << " [label=\"" << reflection_label(e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

// ---- grassmann --------------------------------------------------------------

json grassmann_json(const ConfigDescription& c) {
  json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["w"] = c.w.to_string();
  json coess = json::array();
  for (const auto& b : c.coess) coess.push_back(box_json(b));
  j["coess"] = coess;
  j["lambda"] = int_list(c.lambda.parts);
  j["corners"] = int_list(c.corners);
  j["delta_w"] = int_list(c.delta_w);
  j["flag_steps"] = int_list(c.flag_steps);
  j["nash_smooth"] = c.smoothness.smooth;
  j["non_inclusion_boxes"] = c.smoothness.non_inclusion_boxes;
  json conds = json::array();
  for (const auto& cc : c.conditions) conds.push_back(cc.text());
  j["conditions"] = conds;
  j["top_degenerate"] = c.top_degenerate;
  j["bottom_degenerate"] = c.bottom_degenerate;
  return j;
}

std::string grassmann_text(const ConfigDescription& c) {
  std::ostringstream os;
  os << "w = " << c.w.to_string() << " in Gr(" << c.k << "," << c.n << ")\n";
  std::vector<std::string> boxes;
  for (const auto& b : c.coess) boxes.push_back(box_text(b));
  os << "Coess(v_P(w)) = " << join(boxes, ", ") << "\n";
  std::vector<std::string> parts;
  for (int x : c.lambda.parts) parts.push_back(std::to_string(x));
  os << "lambda = (" << join(parts, ",") << "), inner corners " << ints_text(c.corners) << "\n";
  std::vector<std::string> dw;
  for (int i : c.delta_w) dw.push_back("alpha_" + std::to_string(i));
  os << "Delta_w = {" << join(dw, ", ") << "}\n";
  parts.clear();
  for (int x : c.flag_steps) parts.push_back(std::to_string(x));
  os << "Nash blow-up lives in Fl(" << join(parts, ",") << ")\n";
  for (const auto& cc : c.conditions) os << "  " << cc.text() << "\n";
  os << "Nash blow-up " << (c.smoothness.smooth ? "smooth" : "NOT smooth") << " ("
     << c.smoothness.non_inclusion_boxes << " non-inclusion boxes)\n";
  return os.str();
}

// ---- conjecture -------------------------------------------------------------

json conjecture_json(const ConjectureReport& r) {
  json j;
  j["w"] = r.w.to_string();
  j["covexillary"] = r.covexillary;
  j["seed"] = r.seed.to_string();
  j["seed_rule"] = "minimal coset representative of wW_P";
  j["levi"] = int_list(r.levi);
  json boxes = json::array();
  for (const auto& b : r.boxes) boxes.push_back(box_json(b));
  j["boxes"] = boxes;
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"v", p.v.to_string()},
                   {"flag", flag_json(p.flag)},
                   {"z_count", p.z_count},
                   {"zdual_count", p.zdual_count},
                   {"product", p.product},
                   {"peterson_count", p.peterson_count},
                   {"match", p.match}});
  j["points"] = pts;
  j["mismatches"] = r.mismatches;
  j["verdict"] = r.verdict;
  return j;
}

std::string conjecture_text(const ConjectureReport& r) {
  std::ostringstream os;
  os << "w = " << r.w.to_string() << " (seed " << r.seed.to_string() << ", levi " << ints_text(r.levi) << ")\n";
  std::vector<std::string> boxes;
  for (const auto& b : r.boxes) boxes.push_back(box_text(b));
  os << "Coess(w) = " << join(boxes, ", ") << "\n";
  for (const auto& p : r.points) {
    std::vector<std::string> steps;
    for (auto s : p.flag.sets) steps.push_back(subset_text(s));
    os << "  " << p.v.to_string() << "  " << join(steps, " < ") << "  Z " << p.z_count << " x Z' "
       << p.zdual_count << " = " << p.product << ", translates " << p.peterson_count
       << (p.match ? "" : "  MISMATCH") << "\n";
  }
  os << r.verdict << "\n";
  return os.str();
}

}  // namespace nash
