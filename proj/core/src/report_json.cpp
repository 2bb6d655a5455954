#include "spex/report_json.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace spex {

using nlohmann::json;

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

double round12(double v) { return std::strtod(format12(v).c_str(), nullptr); }

namespace {

json base_search_json(const SearchReport& r, bool include_runtime) {
  json j;
  j["n"] = r.n;
  j["pattern"] = r.pattern;
  j["max_rho"] = round12(r.max_rho);
  j["argmax"] = r.argmax;
  j["examined"] = r.examined;
  j["tie_tolerance"] = r.tie_tolerance;
  if (r.matches_paper_family) j["matches_paper_family"] = *r.matches_paper_family;
  if (r.best_smaller_n) {
    j["best_smaller"] = {{"n", *r.best_smaller_n},
                         {"max_rho", round12(*r.best_smaller_rho)},
                         {"argmax", r.best_smaller_argmax}};
  }
  if (include_runtime) j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace

std::string to_json_string(const SearchReport& r, bool include_runtime, int indent) {
  return base_search_json(r, include_runtime).dump(indent);
}

std::string to_json_string(const StructureWitness& w, int indent) {
  json j;
  j["found"] = true;
  j["u1"] = w.u1;
  j["u2"] = w.u2;
  j["r"] = w.r.to_vector();
  j["hub_edge"] = w.hub_edge;
  j["r_class"] = to_string(w.r_class);
  json comps = json::array();
  for (const auto& c : w.components)
    comps.push_back({{"kind", to_string(c.kind)}, {"size", c.size}});
  j["components"] = comps;
  j["consistent"] = w.consistent;
  return j.dump(indent);
}

std::string to_json_string(const TheoremReport& r, bool include_runtime, int indent) {
  json j;
  j["theorem"] = to_string(r.which);
  j["n"] = r.n;
  j["k"] = r.k;
  j["family_g6"] = r.family_g6;
  j["planar"] = r.planar;
  j["pattern_free"] = r.pattern_free;
  if (r.matching) {
    j["matching_number"] = *r.matching;
    j["matching_ok"] = r.matching_ok;
  }
  j["rho"] = round12(r.rho);
  if (r.closed_form) {
    j["closed_form_rho"] = round12(*r.closed_form);
    j["closed_form_ok"] = r.closed_form_ok;
  }
  j["hard_assertions_pass"] = r.hard_assertions_pass;
  j["search_ran"] = r.search_ran;
  if (r.argmax_is_family) j["argmax_is_family"] = *r.argmax_is_family;
  if (r.search)
    j["search"] = json::parse(to_json_string(*r.search, include_runtime));
  return j.dump(indent);
}

std::string to_json_string(const Lemma9Record& r, int indent) {
  json j;
  j["rho_before"] = round12(r.rho_before);
  j["rho_after"] = round12(r.rho_after);
  j["strict_increase"] = r.strict_increase;
  return j.dump(indent);
}

std::string to_json_string(const EigenWindowReport& r, int indent) {
  json j;
  j["rho"] = round12(r.spectrum.rho);
  j["window_lo"] = round12(r.window_lo);
  j["window_hi"] = round12(r.window_hi);
  j["hubs_at_one"] = r.hubs_at_one;
  j["all_inside"] = r.all_inside;
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"vertex", e.vertex},
                       {"value", round12(e.value)},
                       {"inside", e.inside}});
  j["entries"] = entries;
  return j.dump(indent);
}

}  // namespace spex
