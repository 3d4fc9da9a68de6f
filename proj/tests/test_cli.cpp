#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gainspec/gain_graph.hpp"

#include "test_util.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  std::string out_path = "/tmp/gainspec_cli_out.txt";
  std::string cmd = std::string("\"") + GAINSPEC_CLI_PATH + "\" " + args + " > " +
                    out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  CliResult r;
#ifdef _WIN32
  r.exit_code = status;
#else
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
  r.out = slurp(out_path);
  return r;
}

std::string fx(const std::string& name) { return testutil::fixture(name); }

}  // namespace

TEST_CASE("cli spectrum output") {
  CliResult r = run_cli("spectrum " + fx("k8_sigma.gg") + " --rep sign");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("4.12310562562") != std::string::npos);
  CHECK(r.out.find("2.2360679775") != std::string::npos);
  CHECK(r.out.find("(x2)") != std::string::npos);
}

TEST_CASE("cli predicates use exit codes for the answer") {
  CHECK(run_cli("cospectral " + fx("k8_sigma.gg") + " " + fx("k8_sigma_neg.gg") +
                " --mode g").exit_code == 0);
  CliResult no = run_cli("cospectral " + fx("s4_fig2.gg") + " " + fx("s4_fig3.gg") +
                         " --mode g");
  CHECK(no.exit_code == 1);
  CHECK(no.out.find("h = 3") != std::string::npos);
  CHECK(run_cli("cospectral " + fx("s4_fig2.gg") + " " + fx("s4_fig3.gg") +
                " --mode rep:s4-standard").exit_code == 0);
  CHECK(run_cli("cospectral " + fx("s4_fig2.gg") + " " + fx("s4_fig3.gg") +
                " --mode rep:s4-standard-alt").exit_code == 1);
  CHECK(run_cli("balance " + fx("tree.gg")).exit_code == 0);
  CHECK(run_cli("balance " + fx("k8_sigma.gg")).exit_code == 1);
  CHECK(run_cli("sweq " + fx("t5_pair_a.gg") + " " + fx("t5_pair_b.gg")).exit_code == 1);
  CHECK(run_cli("sweq " + fx("t5_pair_a.gg") + " " + fx("t5_pair_a.gg")).exit_code == 0);
}

TEST_CASE("cli error exit codes") {
  CHECK(run_cli("bogus-subcommand").exit_code == 64);
  CHECK(run_cli("cospectral a b --mode banana").exit_code == 64);
  CHECK(run_cli("balance /nonexistent/file.gg").exit_code == 65);
  CHECK(run_cli("swiso " + fx("k8_sigma.gg") + " " + fx("k8_sigma_neg.gg") +
                " --max-n 4").exit_code == 66);
  CHECK(run_cli("cospectral " + fx("k8_sigma.gg") + " " + fx("t5_pair_a.gg")).exit_code ==
        65);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("spectrum --help").exit_code == 0);
}

TEST_CASE("cli json output round-trips") {
  CliResult r = run_cli("profile " + fx("s4_fig2.gg") + " --hmax 3 --json");
  CHECK(r.exit_code == 0);
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.dump(2) + "\n" == r.out);
  CHECK(parsed["classes"][0] == "e");
  CHECK(parsed["counts"][3][3] == "6");

  CliResult c = run_cli("classes " + fx("k8_sigma.gg") + " --json");
  nlohmann::ordered_json cj = nlohmann::ordered_json::parse(c.out);
  CHECK(cj["switching_classes"] == "2097152");
  CHECK(cj.dump(2) + "\n" == c.out);

  CliResult s = run_cli("spectrum " + fx("k8_sigma.gg") + " --rep sign --json");
  nlohmann::ordered_json sj = nlohmann::ordered_json::parse(s.out);
  REQUIRE(sj.is_array());
  REQUIRE(sj.size() == 6);
  CHECK(sj[0]["multiplicity"] == 1);
  CHECK(sj[1]["multiplicity"] == 2);
  CHECK(sj.dump(2) + "\n" == s.out);
}

TEST_CASE("cli cover writes a loadable file") {
  std::string out_path = "/tmp/gainspec_cover_test.gg";
  CliResult r = run_cli("cover " + fx("c4_t5_unbalanced.gg") + " -o " + out_path);
  CHECK(r.exit_code == 0);
  gainspec::GainGraph cover = gainspec::load_gain_graph(out_path);
  CHECK(cover.n() == 20);
  CHECK(cover.m() == 20);
  CHECK(cover.group()->order() == 1);
  std::remove(out_path.c_str());
}

TEST_CASE("cli cycle report") {
  CliResult r = run_cli("cycle " + fx("c5_t5_xi.gg") + " " + fx("c5_t5_xi.gg"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("switching equivalent: yes") != std::string::npos);
  CHECK(r.out.find("lambda-cospectral: yes") != std::string::npos);

  CliResult j = run_cli("cycle " + fx("c3_s4_12.gg") + " --json");
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(j.out);
  CHECK(parsed["gain"] == "(12)");
  CHECK(parsed["gain_order"] == 2);

  CHECK(run_cli("cycle " + fx("tree.gg")).exit_code == 65);
}

TEST_CASE("cli sweq prints a witness") {
  CliResult r = run_cli("sweq " + fx("c4_t5_balanced.gg") + " " +
                        fx("c4_t5_balanced.gg") + " --json");
  CHECK(r.exit_code == 0);
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed["switching_equivalent"] == true);
  CHECK(parsed["switching"].size() == 4);
}
