#include "gainspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

namespace gainspec {

namespace {

int ceil_sqrt(int n) {
  int s = 0;
  while (s * s < n) ++s;
  return s;
}

// Character values rounded to exact integers when the whole character is
// integer-valued within 1e-9; empty result otherwise.
std::vector<Int> integral_character(const ClassFunction& chi) {
  std::vector<Int> out;
  out.reserve(chi.values.size());
  for (std::complex<double> v : chi.values) {
    double r = std::round(v.real());
    if (std::abs(v.imag()) > 1e-9 || std::abs(v.real() - r) > 1e-9) return {};
    out.push_back(Int(static_cast<long long>(r)));
  }
  return out;
}

// Exact trace sequence of the represented adjacency matrix for an
// integer-valued character: t_h = sum_c counts[h][c] * chi(c).
std::vector<Int> integral_trace_sequence(const ClassProfile& prof,
                                         const std::vector<Int>& chi) {
  std::vector<Int> t(prof.hmax + 1);
  for (int h = 0; h <= prof.hmax; ++h)
    for (size_t c = 0; c < chi.size(); ++c) t[h] += prof.counts[h][c] * chi[c];
  return t;
}

std::vector<std::complex<long double>> complex_trace_sequence(const ClassProfile& prof,
                                                              const ClassFunction& chi) {
  std::vector<std::complex<long double>> t(prof.hmax + 1);
  for (int h = 0; h <= prof.hmax; ++h) {
    std::complex<long double> s = 0;
    for (size_t c = 0; c < chi.values.size(); ++c)
      s += prof.counts[h][c].convert_to<long double>() *
           std::complex<long double>(chi.values[c].real(), chi.values[c].imag());
    t[h] = s;
  }
  return t;
}

}  // namespace

ClassProfile walk_class_profile(const GainGraph& g, int hmax) {
  if (hmax < 0) throw Error("profile horizon must be >= 0");
  const FiniteGroup& grp = *g.group();
  int n = g.n(), N = grp.order();
  int C = int(grp.classes().size());
  ClassProfile prof{g.group(), hmax, {}};
  prof.counts.assign(hmax + 1, std::vector<Int>(C));

  // Incoming gains per column: entry (k, psi(k, j)) for every neighbor k of j.
  std::vector<std::vector<std::pair<int, int>>> into(n);
  for (int j = 0; j < n; ++j)
    for (auto [k, gain_jk] : g.neighbors(j)) into[j].emplace_back(k, grp.inv(gain_jk));

  // Dense power of the adjacency matrix over the group ring, entry (i, j)
  // stored as a coefficient vector of length |G|.
  auto idx = [n](int i, int j) { return size_t(i) * n + j; };
  std::vector<std::vector<Int>> power(size_t(n) * n, std::vector<Int>(N));
  for (int i = 0; i < n; ++i) power[idx(i, i)][grp.identity()] = 1;

  auto record = [&](int h) {
    std::vector<Int>& row = prof.counts[h];
    for (int i = 0; i < n; ++i) {
      const std::vector<Int>& diag = power[idx(i, i)];
      for (int x = 0; x < N; ++x)
        if (diag[x] != 0) row[grp.class_of(x)] += diag[x];
    }
  };
  record(0);

  std::vector<std::vector<Int>> next(size_t(n) * n, std::vector<Int>(N));
  for (int h = 1; h <= hmax; ++h) {
    for (auto& cell : next) std::fill(cell.begin(), cell.end(), Int(0));
    for (int j = 0; j < n; ++j)
      for (auto [k, x] : into[j]) {
        // next(., j) += power(., k) * x
        for (int i = 0; i < n; ++i) {
          const std::vector<Int>& src = power[idx(i, k)];
          std::vector<Int>& dst = next[idx(i, j)];
          for (int a = 0; a < N; ++a)
            if (src[a] != 0) dst[grp.mul(a, x)] += src[a];
        }
      }
    power.swap(next);
    record(h);
  }
  return prof;
}

int default_trace_horizon(const GainGraph& a, const GainGraph& b) {
  return std::max(a.n(), b.n()) * ceil_sqrt(a.group()->order());
}

std::optional<int> g_cospectral_discrepancy(const GainGraph& a, const GainGraph& b,
                                            int hmax) {
  check_same_group(*a.group(), *b.group(), "cospectrality");
  int H = hmax > 0 ? hmax : default_trace_horizon(a, b);
  ClassProfile pa = walk_class_profile(a, H);
  ClassProfile pb = walk_class_profile(b, H);
  for (int h = 0; h <= H; ++h)
    if (pa.counts[h] != pb.counts[h]) return h;
  return std::nullopt;
}

bool g_cospectral(const GainGraph& a, const GainGraph& b, int hmax) {
  return !g_cospectral_discrepancy(a, b, hmax).has_value();
}

std::vector<std::pair<double, int>> Spectrum::grouped() const {
  std::vector<std::pair<double, int>> out;
  size_t i = 0;
  while (i < values.size()) {
    size_t j = i + 1;
    while (j < values.size() &&
           values[j] - values[j - 1] <= kSpectrumGroupTol * (1 + std::abs(values[j])))
      ++j;
    double mean = 0;
    for (size_t k = i; k < j; ++k) mean += values[k];
    mean /= double(j - i);
    out.emplace_back(mean, int(j - i));
    i = j;
  }
  return out;
}

Spectrum pi_spectrum(const GainGraph& g, const Representation& p) {
  RepresentedMatrix r = fourier_transform(p, adjacency_matrix(g));
  double scale = r.mat.size() ? r.mat.cwiseAbs().maxCoeff() : 0.0;
  double herm_dev = r.mat.size() ? (r.mat - r.mat.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  if (herm_dev > 1e-8 * (1 + scale))
    throw Error("represented adjacency matrix is not Hermitian (deviation " +
                std::to_string(herm_dev) + "); the representation looks broken");
  Eigen::MatrixXcd sym = 0.5 * (r.mat + r.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  if (es.info() != Eigen::Success) throw Error("eigenvalue computation failed");
  Spectrum s;
  s.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + sym.rows());
  return s;
}

std::optional<int> pi_cospectral_discrepancy(const GainGraph& a, const GainGraph& b,
                                             const Representation& p, double tol) {
  check_same_group(*a.group(), *b.group(), "cospectrality");
  check_same_group(*a.group(), *p.group, "cospectrality");
  int H = std::max(a.n(), b.n()) * p.degree;
  ClassProfile pa = walk_class_profile(a, H);
  ClassProfile pb = walk_class_profile(b, H);
  ClassFunction chi = character(p);
  std::vector<Int> ichi = integral_character(chi);
  if (!ichi.empty()) {
    std::vector<Int> ta = integral_trace_sequence(pa, ichi);
    std::vector<Int> tb = integral_trace_sequence(pb, ichi);
    for (int h = 0; h <= H; ++h)
      if (ta[h] != tb[h]) return h;
    return std::nullopt;
  }
  std::vector<std::complex<long double>> ta = complex_trace_sequence(pa, chi);
  std::vector<std::complex<long double>> tb = complex_trace_sequence(pb, chi);
  for (int h = 0; h <= H; ++h) {
    long double diff = std::abs(ta[h] - tb[h]);
    if (diff > tol * (1 + std::abs(ta[h]))) return h;
  }
  return std::nullopt;
}

bool pi_cospectral(const GainGraph& a, const GainGraph& b, const Representation& p,
                   double tol) {
  return !pi_cospectral_discrepancy(a, b, p, tol).has_value();
}

std::vector<double> pi_char_poly(const GainGraph& g, const Representation& p) {
  check_same_group(*g.group(), *p.group, "characteristic polynomial");
  int N = g.n() * p.degree;
  ClassProfile prof = walk_class_profile(g, N);
  ClassFunction chi = character(p);
  std::vector<std::complex<long double>> t;
  std::vector<Int> ichi = integral_character(chi);
  if (!ichi.empty()) {
    std::vector<Int> ti = integral_trace_sequence(prof, ichi);
    t.reserve(ti.size());
    for (const Int& v : ti) t.emplace_back(v.convert_to<long double>(), 0.0L);
  } else {
    t = complex_trace_sequence(prof, chi);
  }
  // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} t_i,
  // accumulated with compensated summation.
  std::vector<std::complex<long double>> e(N + 1);
  e[0] = 1;
  for (int k = 1; k <= N; ++k) {
    std::complex<long double> sum = 0, comp = 0;
    for (int i = 1; i <= k; ++i) {
      std::complex<long double> term = e[k - i] * t[i];
      if (i % 2 == 0) term = -term;
      std::complex<long double> y = term - comp;
      std::complex<long double> s = sum + y;
      comp = (s - sum) - y;
      sum = s;
    }
    e[k] = sum / static_cast<long double>(k);
  }
  std::vector<double> coeffs(N + 1);
  for (int j = 0; j <= N; ++j) {
    std::complex<long double> c = (j % 2 == 0) ? e[j] : -e[j];
    double value = double(c.real());
    double r = std::round(value);
    if (std::abs(value - r) <= kCharPolyIntTol) value = r;
    coeffs[j] = value;
  }
  return coeffs;
}

std::optional<int> lambda_cospectral_discrepancy(const GainGraph& a, const GainGraph& b) {
  check_same_group(*a.group(), *b.group(), "cospectrality");
  const FiniteGroup& grp = *a.group();
  int H = std::max(a.n(), b.n()) * grp.order();
  ClassProfile pa = walk_class_profile(a, H);
  ClassProfile pb = walk_class_profile(b, H);
  int id_class = grp.class_of(grp.identity());
  for (int h = 0; h <= H; ++h)
    if (pa.counts[h][id_class] != pb.counts[h][id_class]) return h;
  return std::nullopt;
}

bool lambda_cospectral(const GainGraph& a, const GainGraph& b) {
  return !lambda_cospectral_discrepancy(a, b).has_value();
}

CoverGraph cover_graph(const GainGraph& g) {
  const FiniteGroup& grp = *g.group();
  int N = grp.order();
  GroupPtr trivial = build_cyclic(1);
  std::vector<GainEdge> edges;
  edges.reserve(size_t(g.m()) * N);
  for (const GainEdge& e : g.edges())
    for (int b = 0; b < N; ++b) {
      int a = grp.mul(e.gain, b);
      edges.push_back({e.u * N + a, e.v * N + b, 0});
    }
  CoverGraph cover{GainGraph(trivial, g.n() * N, std::move(edges)), {}};
  cover.vertex_names.reserve(size_t(g.n()) * N);
  for (int v = 0; v < g.n(); ++v)
    for (int b = 0; b < N; ++b)
      cover.vertex_names.push_back(std::to_string(v + 1) + "@" + grp.name(b));
  return cover;
}

std::string format_cover(const CoverGraph& c) {
  std::vector<std::string> comments;
  comments.reserve(c.vertex_names.size());
  for (size_t i = 0; i < c.vertex_names.size(); ++i)
    comments.push_back("vertex " + std::to_string(i + 1) + " = " + c.vertex_names[i]);
  return format_gain_graph(c.graph, comments);
}

CycleReport cycle_classify(const GainGraph& g) {
  if (g.n() < 3) throw Error("cycle classification needs at least three vertices");
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2)
      throw Error("underlying graph is not a cycle: vertex " + std::to_string(v + 1) +
                  " has degree " + std::to_string(g.degree(v)));
  if (components(g).size() != 1)
    throw Error("underlying graph is not a cycle: it is disconnected");
  CycleReport r;
  r.group = g.group();
  r.n = g.n();
  r.walk.push_back(0);
  int prev = 0, cur = g.neighbors(0).front().first;
  while (cur != 0) {
    r.walk.push_back(cur);
    auto& nb = g.neighbors(cur);
    int next = nb.front().first == prev ? nb.back().first : nb.front().first;
    prev = cur;
    cur = next;
  }
  r.walk.push_back(0);
  const FiniteGroup& grp = *g.group();
  r.gain = gain_of_walk(g, r.walk);
  r.gain_name = grp.name(r.gain);
  r.gain_class = grp.class_of(r.gain);
  r.inverse_class = grp.class_of(grp.inv(r.gain));
  r.gain_order = grp.element_order(r.gain);
  return r;
}

bool cycles_switching_equivalent(const CycleReport& a, const CycleReport& b) {
  check_same_group(*a.group, *b.group, "cycle comparison");
  return a.walk == b.walk && a.gain_class == b.gain_class;
}

bool cycles_switching_isomorphic(const CycleReport& a, const CycleReport& b) {
  check_same_group(*a.group, *b.group, "cycle comparison");
  return a.n == b.n && (a.gain_class == b.gain_class || a.gain_class == b.inverse_class);
}

bool cycles_g_cospectral(const CycleReport& a, const CycleReport& b) {
  // For cycles the full walk profile pins down exactly the switching
  // isomorphism class, so the two predicates coincide.
  return cycles_switching_isomorphic(a, b);
}

bool cycles_lambda_cospectral(const CycleReport& a, const CycleReport& b) {
  check_same_group(*a.group, *b.group, "cycle comparison");
  return a.n == b.n && a.gain_order == b.gain_order;
}

}  // namespace gainspec
