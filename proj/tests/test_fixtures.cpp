#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "gainspec/json_io.hpp"
#include "gainspec/representation.hpp"
#include "gainspec/spectral.hpp"

#include "test_util.hpp"

using namespace gainspec;
using nlohmann::json;

namespace {

void check_expectations(const std::string& gg_path, const json& expect) {
  GainGraph g = load_gain_graph(gg_path);

  if (expect.contains("balanced")) CHECK(is_balanced(g) == expect["balanced"].get<bool>());

  if (expect.contains("switching_classes"))
    CHECK(count_switching_classes(g).str() ==
          expect["switching_classes"].get<std::string>());

  if (expect.contains("spectra")) {
    for (const json& item : expect["spectra"]) {
      Representation p =
          representation_by_name(g.group(), item["rep"].get<std::string>());
      auto grouped = pi_spectrum(g, p).grouped();
      const json& evs = item["eigenvalues"];
      REQUIRE_MESSAGE(grouped.size() == evs.size(),
                      gg_path << " rep " << p.name << ": eigenvalue group count");
      for (size_t i = 0; i < grouped.size(); ++i) {
        CHECK_MESSAGE(std::abs(grouped[i].first - evs[i][0].get<double>()) < 1e-8,
                      gg_path << " rep " << p.name << " eigenvalue " << i);
        CHECK_MESSAGE(grouped[i].second == evs[i][1].get<int>(),
                      gg_path << " rep " << p.name << " multiplicity " << i);
      }
    }
  }

  if (expect.contains("profile")) {
    const json& ep = expect["profile"];
    ClassProfile prof = walk_class_profile(g, ep["hmax"].get<int>());
    nlohmann::ordered_json got = profile_to_json(prof);
    CHECK(got["hmax"].get<int>() == ep["hmax"].get<int>());
    CHECK(got["classes"].get<std::vector<std::string>>() ==
          ep["classes"].get<std::vector<std::string>>());
    REQUIRE(got["counts"].size() == ep["counts"].size());
    for (size_t h = 0; h < got["counts"].size(); ++h)
      CHECK_MESSAGE(got["counts"][h].get<std::vector<std::string>>() ==
                        ep["counts"][h].get<std::vector<std::string>>(),
                    gg_path << " profile row " << h);
  }

  if (expect.contains("cover")) {
    CoverGraph cover = cover_graph(g);
    CHECK(cover.graph.n() == expect["cover"]["vertices"].get<int>());
    CHECK(cover.graph.m() == expect["cover"]["edges"].get<int>());
    CHECK(int(components(cover.graph).size()) ==
          expect["cover"]["components"].get<int>());
  }
}

}  // namespace

TEST_CASE("every bundled fixture matches its expected output") {
  namespace fs = std::filesystem;
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(GAINSPEC_FIXTURES_DIR)) {
    if (entry.path().extension() != ".gg") continue;
    fs::path expect_path = entry.path();
    expect_path.replace_extension(".expected.json");
    // every graph fixture must at least parse
    GainGraph g = load_gain_graph(entry.path().string());
    CHECK(g.n() >= 1);
    if (!fs::exists(expect_path)) continue;
    std::ifstream in(expect_path);
    json expect = json::parse(in);
    INFO("fixture ", entry.path().filename().string());
    check_expectations(entry.path().string(), expect);
    ++checked;
  }
  CHECK(checked >= 12);
}
