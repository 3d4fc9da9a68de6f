#include "gainspec/json_io.hpp"

namespace gainspec {

nlohmann::ordered_json spectrum_to_json(const Spectrum& s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (auto [value, mult] : s.grouped())
    out.push_back({{"value", value}, {"multiplicity", mult}});
  return out;
}

nlohmann::ordered_json profile_to_json(const ClassProfile& p) {
  const FiniteGroup& grp = *p.group;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const std::vector<int>& cls : grp.classes()) classes.push_back(grp.name(cls.front()));
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (const std::vector<Int>& row : p.counts) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const Int& v : row) jrow.push_back(v.str());
    counts.push_back(jrow);
  }
  return {{"hmax", p.hmax}, {"classes", classes}, {"counts", counts}};
}

nlohmann::ordered_json cycle_report_to_json(const CycleReport& r) {
  const FiniteGroup& grp = *r.group;
  nlohmann::ordered_json walk = nlohmann::ordered_json::array();
  for (int v : r.walk) walk.push_back(v + 1);
  return {{"length", r.n},
          {"walk", walk},
          {"gain", r.gain_name},
          {"gain_class", grp.name(grp.classes()[r.gain_class].front())},
          {"inverse_class", grp.name(grp.classes()[r.inverse_class].front())},
          {"gain_order", r.gain_order}};
}

}  // namespace gainspec
