#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gainspec/errors.hpp"
#include "gainspec/gain_graph.hpp"
#include "gainspec/group.hpp"
#include "gainspec/json_io.hpp"
#include "gainspec/representation.hpp"
#include "gainspec/spectral.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_spectrum(const std::string& file, const std::string& rep, bool json) {
  gainspec::GainGraph g = gainspec::load_gain_graph(file);
  gainspec::Representation p = gainspec::representation_by_name(g.group(), rep);
  gainspec::Spectrum s = gainspec::pi_spectrum(g, p);
  if (json) {
    print_json(gainspec::spectrum_to_json(s));
    return 0;
  }
  std::cout << "pi-spectrum under '" << p.name << "' (" << s.values.size()
            << " eigenvalues):\n";
  for (auto [value, mult] : s.grouped()) {
    std::cout << "  " << fmt(value);
    if (mult > 1) std::cout << "  (x" << mult << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_cospectral(const std::string& fa, const std::string& fb, const std::string& mode,
                   int hmax, double tol, bool json) {
  gainspec::GainGraph a = gainspec::load_gain_graph(fa);
  gainspec::GainGraph b = gainspec::load_gain_graph(fb);
  std::optional<int> disc;
  if (mode == "g") {
    disc = gainspec::g_cospectral_discrepancy(a, b, hmax);
  } else if (mode == "lambda") {
    disc = gainspec::lambda_cospectral_discrepancy(a, b);
  } else {
    gainspec::Representation p =
        gainspec::representation_by_name(a.group(), mode.substr(4));
    disc = gainspec::pi_cospectral_discrepancy(a, b, p, tol);
  }
  bool yes = !disc.has_value();
  if (json) {
    ordered_json j{{"mode", mode}, {"cospectral", yes}};
    if (disc) j["first_discrepancy"] = *disc;
    print_json(j);
  } else {
    std::cout << "cospectral (" << mode << "): " << (yes ? "yes" : "no");
    if (disc) std::cout << " (traces differ first at h = " << *disc << ")";
    std::cout << "\n";
  }
  return yes ? 0 : 1;
}

int run_sweq(const std::string& fa, const std::string& fb, bool json) {
  gainspec::GainGraph a = gainspec::load_gain_graph(fa);
  gainspec::GainGraph b = gainspec::load_gain_graph(fb);
  std::optional<gainspec::SwitchingFunction> f = gainspec::switching_equivalent(a, b);
  if (json) {
    ordered_json j{{"switching_equivalent", f.has_value()}};
    if (f) {
      ordered_json sw = ordered_json::array();
      for (int x : f->values) sw.push_back(a.group()->name(x));
      j["switching"] = sw;
    }
    print_json(j);
  } else {
    std::cout << "switching equivalent: " << (f ? "yes" : "no") << "\n";
    if (f)
      for (int u = 0; u < a.n(); ++u)
        std::cout << "  f(" << u + 1 << ") = " << a.group()->name(f->values[u]) << "\n";
  }
  return f ? 0 : 1;
}

int run_swiso(const std::string& fa, const std::string& fb, int max_n, bool json) {
  gainspec::GainGraph a = gainspec::load_gain_graph(fa);
  gainspec::GainGraph b = gainspec::load_gain_graph(fb);
  std::optional<gainspec::SwitchingIsomorphism> w =
      gainspec::switching_isomorphic(a, b, max_n);
  if (json) {
    ordered_json j{{"switching_isomorphic", w.has_value()}};
    if (w) {
      ordered_json phi = ordered_json::array();
      for (int v : w->phi) phi.push_back(v + 1);
      ordered_json sw = ordered_json::array();
      for (int x : w->switching.values) sw.push_back(a.group()->name(x));
      j["phi"] = phi;
      j["switching"] = sw;
    }
    print_json(j);
  } else {
    std::cout << "switching isomorphic: " << (w ? "yes" : "no") << "\n";
    if (w)
      for (int u = 0; u < a.n(); ++u)
        std::cout << "  " << u + 1 << " -> " << w->phi[u] + 1
                  << "   f(" << u + 1 << ") = " << a.group()->name(w->switching.values[u])
                  << "\n";
  }
  return w ? 0 : 1;
}

int run_balance(const std::string& file, bool json) {
  gainspec::GainGraph g = gainspec::load_gain_graph(file);
  bool bal = gainspec::is_balanced(g);
  if (json)
    print_json(ordered_json{{"balanced", bal}});
  else
    std::cout << "balanced: " << (bal ? "yes" : "no") << "\n";
  return bal ? 0 : 1;
}

int run_classes(const std::string& file, bool json) {
  gainspec::GainGraph g = gainspec::load_gain_graph(file);
  gainspec::Int count = gainspec::count_switching_classes(g);
  if (json)
    print_json(ordered_json{{"switching_classes", count.str()}});
  else
    std::cout << "switching classes: " << count.str() << "\n";
  return 0;
}

int run_cover(const std::string& file, const std::string& out, bool json) {
  gainspec::GainGraph g = gainspec::load_gain_graph(file);
  gainspec::CoverGraph c = gainspec::cover_graph(g);
  std::string text = gainspec::format_cover(c);
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw gainspec::Error("cannot open '" + out + "' for writing");
    os << text;
  }
  int comps = int(gainspec::components(c.graph).size());
  if (json) {
    ordered_json j{{"vertices", c.graph.n()},
                   {"edges", c.graph.m()},
                   {"components", comps}};
    if (!out.empty())
      j["output"] = out;
    else
      j["text"] = text;
    print_json(j);
  } else if (!out.empty()) {
    std::cout << "cover graph: " << c.graph.n() << " vertices, " << c.graph.m()
              << " edges, " << comps << " components -> " << out << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

void print_cycle_report(const gainspec::CycleReport& r) {
  const gainspec::FiniteGroup& grp = *r.group;
  std::cout << "  length: " << r.n << "\n  walk:";
  for (int v : r.walk) std::cout << " " << v + 1;
  std::cout << "\n  gain: " << r.gain_name
            << " (class " << grp.name(grp.classes()[r.gain_class].front())
            << ", inverse class " << grp.name(grp.classes()[r.inverse_class].front())
            << ", order " << r.gain_order << ")\n";
}

int run_cycle(const std::string& fa, const std::string& fb, bool json) {
  gainspec::GainGraph a = gainspec::load_gain_graph(fa);
  gainspec::CycleReport ra = gainspec::cycle_classify(a);
  if (fb.empty()) {
    if (json)
      print_json(gainspec::cycle_report_to_json(ra));
    else {
      std::cout << "cycle:\n";
      print_cycle_report(ra);
    }
    return 0;
  }
  gainspec::GainGraph b = gainspec::load_gain_graph(fb);
  gainspec::CycleReport rb = gainspec::cycle_classify(b);
  bool sweq = gainspec::cycles_switching_equivalent(ra, rb);
  bool swiso = gainspec::cycles_switching_isomorphic(ra, rb);
  bool gcosp = gainspec::cycles_g_cospectral(ra, rb);
  bool lcosp = gainspec::cycles_lambda_cospectral(ra, rb);
  if (json) {
    print_json(ordered_json{{"a", gainspec::cycle_report_to_json(ra)},
                            {"b", gainspec::cycle_report_to_json(rb)},
                            {"switching_equivalent", sweq},
                            {"switching_isomorphic", swiso},
                            {"g_cospectral", gcosp},
                            {"lambda_cospectral", lcosp}});
  } else {
    std::cout << "cycle a:\n";
    print_cycle_report(ra);
    std::cout << "cycle b:\n";
    print_cycle_report(rb);
    std::cout << "switching equivalent: " << (sweq ? "yes" : "no") << "\n"
              << "switching isomorphic: " << (swiso ? "yes" : "no") << "\n"
              << "g-cospectral: " << (gcosp ? "yes" : "no") << "\n"
              << "lambda-cospectral: " << (lcosp ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_profile(const std::string& file, int hmax, bool json) {
  gainspec::GainGraph g = gainspec::load_gain_graph(file);
  int H = hmax >= 0 ? hmax : gainspec::default_trace_horizon(g, g);
  gainspec::ClassProfile p = gainspec::walk_class_profile(g, H);
  if (json) {
    print_json(gainspec::profile_to_json(p));
    return 0;
  }
  const gainspec::FiniteGroup& grp = *p.group;
  std::cout << "closed-walk counts by gain class, h = 0.." << H << "\nclasses:";
  for (const std::vector<int>& cls : grp.classes()) std::cout << " " << grp.name(cls.front());
  std::cout << "\n";
  for (int h = 0; h <= H; ++h) {
    std::cout << "h=" << h << ":";
    for (const gainspec::Int& v : p.counts[h]) std::cout << " " << v.str();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral analysis of gain graphs over finite groups"};
  app.require_subcommand(1);

  std::string sp_file, sp_rep;
  bool sp_json = false;
  CLI::App* sp = app.add_subcommand("spectrum", "eigenvalues of the represented adjacency matrix");
  sp->add_option("file", sp_file, "gain-graph file")->required();
  sp->add_option("--rep", sp_rep, "representation name (e.g. trivial, sign, regular, cyclic:1)")->required();
  sp->add_flag("--json", sp_json, "machine-readable output");

  std::string co_a, co_b, co_mode = "g";
  int co_hmax = 0;
  double co_tol = 1e-8;
  bool co_json = false;
  CLI::App* co = app.add_subcommand("cospectral", "test cospectrality of two gain graphs");
  co->add_option("file_a", co_a, "first gain-graph file")->required();
  co->add_option("file_b", co_b, "second gain-graph file")->required();
  co->add_option("--mode", co_mode, "g | lambda | rep:<NAME> (default g)")
      ->check([](const std::string& s) -> std::string {
        if (s == "g" || s == "lambda" || (s.rfind("rep:", 0) == 0 && s.size() > 4))
          return {};
        return std::string("must be g, lambda, or rep:<NAME>");
      });
  co->add_option("--hmax", co_hmax, "walk-length horizon override for mode g (0 = automatic)");
  co->add_option("--tol", co_tol, "trace comparison tolerance for rep mode");
  co->add_flag("--json", co_json, "machine-readable output");

  std::string se_a, se_b;
  bool se_json = false;
  CLI::App* se = app.add_subcommand("sweq", "test switching equivalence of two gain graphs");
  se->add_option("file_a", se_a, "first gain-graph file")->required();
  se->add_option("file_b", se_b, "second gain-graph file")->required();
  se->add_flag("--json", se_json, "machine-readable output");

  std::string si_a, si_b;
  int si_max_n = 10;
  bool si_json = false;
  CLI::App* si = app.add_subcommand("swiso", "test switching isomorphism of two gain graphs");
  si->add_option("file_a", si_a, "first gain-graph file")->required();
  si->add_option("file_b", si_b, "second gain-graph file")->required();
  si->add_option("--max-n", si_max_n, "vertex cap for the isomorphism search (default 10)");
  si->add_flag("--json", si_json, "machine-readable output");

  std::string ba_file;
  bool ba_json = false;
  CLI::App* ba = app.add_subcommand("balance", "test whether a gain graph is balanced");
  ba->add_option("file", ba_file, "gain-graph file")->required();
  ba->add_flag("--json", ba_json, "machine-readable output");

  std::string cl_file;
  bool cl_json = false;
  CLI::App* cl = app.add_subcommand("classes", "count switching classes on the underlying graph");
  cl->add_option("file", cl_file, "gain-graph file")->required();
  cl->add_flag("--json", cl_json, "machine-readable output");

  std::string cv_file, cv_out;
  bool cv_json = false;
  CLI::App* cv = app.add_subcommand("cover", "construct the cover graph");
  cv->add_option("file", cv_file, "gain-graph file")->required();
  cv->add_option("-o,--output", cv_out, "write the cover to this file instead of stdout");
  cv->add_flag("--json", cv_json, "machine-readable output");

  std::string cy_a, cy_b;
  bool cy_json = false;
  CLI::App* cy = app.add_subcommand("cycle", "classify cycle gain graphs (one or two files)");
  cy->add_option("file_a", cy_a, "gain-graph file (underlying graph must be a cycle)")->required();
  cy->add_option("file_b", cy_b, "optional second cycle to compare against");
  cy->add_flag("--json", cy_json, "machine-readable output");

  std::string pr_file;
  int pr_hmax = -1;
  bool pr_json = false;
  CLI::App* pr = app.add_subcommand("profile", "closed-walk gain counts by conjugacy class");
  pr->add_option("file", pr_file, "gain-graph file")->required();
  pr->add_option("--hmax", pr_hmax, "walk-length horizon (default: cospectrality horizon)");
  pr->add_flag("--json", pr_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (sp->parsed()) return run_spectrum(sp_file, sp_rep, sp_json);
    if (co->parsed()) return run_cospectral(co_a, co_b, co_mode, co_hmax, co_tol, co_json);
    if (se->parsed()) return run_sweq(se_a, se_b, se_json);
    if (si->parsed()) return run_swiso(si_a, si_b, si_max_n, si_json);
    if (ba->parsed()) return run_balance(ba_file, ba_json);
    if (cl->parsed()) return run_classes(cl_file, cl_json);
    if (cv->parsed()) return run_cover(cv_file, cv_out, cv_json);
    if (cy->parsed()) return run_cycle(cy_a, cy_b, cy_json);
    if (pr->parsed()) return run_profile(pr_file, pr_hmax, pr_json);
  } catch (const gainspec::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 66;
  } catch (const gainspec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 70;
  }
  return 64;
}
