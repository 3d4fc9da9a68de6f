#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "gainspec/representation.hpp"
#include "gainspec/spectral.hpp"

#include "test_util.hpp"

using namespace gainspec;

namespace {

GainGraph from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_gain_graph(in);
}

}  // namespace

TEST_CASE("walk profiles match exhaustive enumeration") {
  std::mt19937 rng(21);
  for (GroupPtr grp : {build_cyclic(5), build_symmetric(4)}) {
    for (int trial = 0; trial < 6; ++trial) {
      GainGraph g = testutil::random_connected_graph(grp, 5, 2, rng);
      ClassProfile fast = walk_class_profile(g, 5);
      ClassProfile brute = testutil::brute_profile(g, 5);
      CHECK(fast.counts == brute.counts);
    }
  }
}

TEST_CASE("profile basics") {
  GainGraph g = from_text(
      "group symmetric 4\nvertices 3\nedge 1 2 (12)\nedge 2 3\nedge 1 3 (1234)\n");
  ClassProfile p = walk_class_profile(g, 2);
  int id_class = g.group()->class_of(g.group()->identity());
  CHECK(p.counts[0][id_class] == 3);  // one trivial walk per vertex
  for (size_t c = 0; c < p.counts[1].size(); ++c) CHECK(p.counts[1][c] == 0);
  CHECK(p.counts[2][id_class] == 6);  // out and back along each edge end
  CHECK_THROWS_AS(walk_class_profile(g, -1), Error);
}

TEST_CASE("default trace horizon") {
  GainGraph a = from_text("group cyclic 5\nvertices 6\nedge 1 2\n");
  GainGraph b = from_text("group cyclic 5\nvertices 4\nedge 1 2\n");
  CHECK(default_trace_horizon(a, b) == 18);  // 6 * ceil(sqrt(5))
  GainGraph c = from_text("group symmetric 4\nvertices 9\nedge 1 2\n");
  CHECK(default_trace_horizon(c, c) == 45);  // 9 * ceil(sqrt(24))
}

TEST_CASE("walk profiles are switching invariant") {
  std::mt19937 rng(22);
  GroupPtr s4 = build_symmetric(4);
  for (int trial = 0; trial < 5; ++trial) {
    GainGraph g = testutil::random_connected_graph(s4, 5, 3, rng);
    SwitchingFunction f = testutil::random_switching(s4, 5, rng);
    GainGraph h = apply_switching(g, f);
    CHECK(walk_class_profile(g, 6).counts == walk_class_profile(h, 6).counts);
    CHECK(g_cospectral(g, h));
  }
}

TEST_CASE("exact cospectrality discrepancies") {
  GainGraph a = from_text("group cyclic 5\nvertices 3\nedge 1 2\nedge 2 3\nedge 1 3 g\n");
  GainGraph b = from_text("group cyclic 5\nvertices 3\nedge 1 2\nedge 2 3\nedge 1 3 g^2\n");
  std::optional<int> d = g_cospectral_discrepancy(a, b);
  REQUIRE(d.has_value());
  CHECK(*d == 3);  // triangles differ in their length-3 walk gains
  CHECK_FALSE(g_cospectral(a, b));
  CHECK(g_cospectral(a, a));
  // inverse gains: every closed walk pairs with its reversal, so profiles
  // are inversion-symmetric and the pair is cospectral without being
  // switching equivalent
  GainGraph c = from_text("group cyclic 5\nvertices 3\nedge 1 2\nedge 2 3\nedge 1 3 g^4\n");
  CHECK(g_cospectral(a, c));
  CHECK_FALSE(switching_equivalent(a, c).has_value());
}

TEST_CASE("spectrum grouping") {
  Spectrum s;
  s.values = {-1.0, -1.0 + 1e-12, 0.5, 2.0, 2.0 + 5e-9};
  auto grouped = s.grouped();
  REQUIRE(grouped.size() == 3);
  CHECK(grouped[0].second == 2);
  CHECK(grouped[1].second == 1);
  CHECK(grouped[2].second == 2);
  CHECK(grouped[0].first == doctest::Approx(-1.0));
}

TEST_CASE("pi spectra of small graphs") {
  GainGraph k2 = from_text("group cyclic 2\nvertices 2\nedge 1 2 g\n");
  Spectrum s = pi_spectrum(k2, representation_by_name(k2.group(), "sign"));
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.values[1] == doctest::Approx(1.0).epsilon(1e-12));

  // balanced 4-cycle under the regular representation: five copies of the
  // underlying cycle spectrum
  GainGraph c4 = from_text(
      "group cyclic 5\nvertices 4\nedge 1 2 g\nedge 2 3 g\nedge 3 4 g^3\nedge 1 4\n");
  Spectrum r = pi_spectrum(c4, representation_by_name(c4.group(), "regular"));
  auto grouped = r.grouped();
  REQUIRE(grouped.size() == 3);
  CHECK(grouped[0].first == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(grouped[0].second == 5);
  CHECK(grouped[1].second == 10);
  CHECK(grouped[2].second == 5);
}

TEST_CASE("pi spectra are switching invariant") {
  std::mt19937 rng(23);
  GroupPtr s4 = build_symmetric(4);
  GainGraph g = testutil::random_connected_graph(s4, 5, 3, rng);
  SwitchingFunction f = testutil::random_switching(s4, 5, rng);
  GainGraph h = apply_switching(g, f);
  for (const char* rep : {"trivial", "s4-standard", "s4-standard-alt", "regular"}) {
    Spectrum a = pi_spectrum(g, representation_by_name(s4, rep));
    Spectrum b = pi_spectrum(h, representation_by_name(s4, rep));
    REQUIRE(a.values.size() == b.values.size());
    for (size_t i = 0; i < a.values.size(); ++i)
      CHECK(std::abs(a.values[i] - b.values[i]) < 1e-8);
  }
}

TEST_CASE("characteristic polynomials snap to integers") {
  GainGraph a = load_gain_graph(testutil::fixture("t5_pair_a.gg"));
  GainGraph b = load_gain_graph(testutil::fixture("t5_pair_b.gg"));
  Representation triv = representation_by_name(a.group(), "trivial");
  std::vector<double> expect = {1, 0, -7, -4, 7, 4, -1};
  CHECK(pi_char_poly(a, triv) == expect);  // exact: integer snapping
  CHECK(pi_char_poly(b, triv) == expect);
}

TEST_CASE("representation cospectrality") {
  GainGraph a = load_gain_graph(testutil::fixture("t5_pair_a.gg"));
  GainGraph b = load_gain_graph(testutil::fixture("t5_pair_b.gg"));
  GroupPtr t5 = a.group();
  for (const char* rep : {"trivial", "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4",
                          "regular"})
    CHECK(pi_cospectral(a, b, representation_by_name(t5, rep)));
  CHECK(g_cospectral(a, b));
  CHECK(lambda_cospectral(a, b));
}

TEST_CASE("lambda cospectrality is weaker than full cospectrality") {
  // same underlying triangle, gains of equal order in different classes:
  // identity-walk counts agree at every length but class profiles differ
  GainGraph a = from_text("group cyclic 5\nvertices 3\nedge 1 2\nedge 2 3\nedge 1 3 g\n");
  GainGraph c = from_text("group cyclic 5\nvertices 3\nedge 1 2\nedge 2 3\nedge 1 3 g^2\n");
  CHECK(lambda_cospectral(a, c));
  CHECK_FALSE(g_cospectral(a, c));
}

TEST_CASE("cover graphs double as regular-representation transforms") {
  GainGraph g = load_gain_graph(testutil::fixture("c4_t5_unbalanced.gg"));
  CoverGraph cover = cover_graph(g);
  CHECK(cover.graph.n() == 20);
  CHECK(cover.graph.m() == 20);
  CHECK(cover.vertex_names[0] == "1@e");
  CHECK(cover.vertex_names[19] == "4@g^4");
  // adjacency of the cover equals the regular-representation image, 0/1-wise
  RepresentedMatrix reg =
      fourier_transform(representation_by_name(g.group(), "regular"), adjacency_matrix(g));
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      bool edge = cover.graph.has_edge(i, j);
      CHECK(reg.mat(i, j) == std::complex<double>(edge ? 1 : 0, 0));
    }
  // round-trip through the file format
  std::istringstream in(format_cover(cover));
  GainGraph parsed = parse_gain_graph(in);
  CHECK(parsed.n() == 20);
  CHECK(parsed.edges() == cover.graph.edges());
  CHECK(parsed.group()->order() == 1);
}

TEST_CASE("cycle classification") {
  GainGraph c5 = load_gain_graph(testutil::fixture("c5_t5_xi.gg"));
  CycleReport r = cycle_classify(c5);
  CHECK(r.n == 5);
  CHECK(r.walk == Walk{0, 1, 2, 3, 4, 0});
  CHECK(r.gain_name == "g");
  CHECK(r.gain_order == 5);

  GainGraph c3 = load_gain_graph(testutil::fixture("c3_s4_12.gg"));
  CycleReport r3 = cycle_classify(c3);
  CHECK(r3.gain_name == "(12)");
  CHECK(r3.gain_order == 2);
  CHECK(r3.gain_class == r3.inverse_class);  // involutions are self-inverse

  CHECK_THROWS_AS(cycle_classify(from_text("group cyclic 2\nvertices 3\n"
                                           "edge 1 2\nedge 2 3\n")),
                  Error);
  CHECK_THROWS_AS(cycle_classify(from_text("group cyclic 2\nvertices 6\n"
                                           "edge 1 2\nedge 2 3\nedge 1 3\n"
                                           "edge 4 5\nedge 5 6\nedge 4 6\n")),
                  Error);
}

TEST_CASE("cycle predicates agree with the general algorithms") {
  GroupPtr t5 = build_cyclic(5);
  auto cycle = [&](int n, int gain) {
    std::vector<GainEdge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 0});
    edges.push_back({0, n - 1, t5->inv(gain)});  // psi(n-1, 0) = gain
    return GainGraph(t5, n, std::move(edges));
  };
  GainGraph a = cycle(4, 1), b = cycle(4, 4), c = cycle(4, 2);
  CycleReport ra = cycle_classify(a), rb = cycle_classify(b), rc = cycle_classify(c);
  // g and g^-1: switching isomorphic (reversal), not switching equivalent
  CHECK_FALSE(cycles_switching_equivalent(ra, rb));
  CHECK(cycles_switching_isomorphic(ra, rb));
  CHECK(cycles_g_cospectral(ra, rb));
  CHECK(cycles_lambda_cospectral(ra, rb));
  CHECK_FALSE(switching_equivalent(a, b).has_value());
  CHECK(switching_isomorphic(a, b).has_value());
  CHECK(g_cospectral(a, b));
  CHECK(lambda_cospectral(a, b));
  // g and g^2: same order, different class up to inversion
  CHECK_FALSE(cycles_switching_isomorphic(ra, rc));
  CHECK(cycles_lambda_cospectral(ra, rc));
  CHECK_FALSE(switching_isomorphic(a, c).has_value());
  CHECK(lambda_cospectral(a, c));
  CHECK_FALSE(g_cospectral(a, c));
}

TEST_CASE("hermiticity guard on broken representations") {
  GainGraph k2 = from_text("group cyclic 3\nvertices 2\nedge 1 2 g\n");
  Representation p = cyclic_irrep(k2.group(), 1);
  p.images[2](0, 0) = std::complex<double>(0.3, 0.1);  // no longer conj-paired
  CHECK_THROWS_AS(pi_spectrum(k2, p), Error);
}
