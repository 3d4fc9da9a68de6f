#pragma once

#include <optional>

#include "gainspec/gain_graph.hpp"
#include "gainspec/representation.hpp"

namespace gainspec {

/// Closed-walk counts split by the conjugacy class of the walk gain: row h
/// (0..hmax) holds, per class, the exact number of closed walks of length h
/// whose gain lies in that class.  Row 0 puts n on the identity class.
struct ClassProfile {
  GroupPtr group;
  int hmax = 0;
  std::vector<std::vector<Int>> counts;
};

/// Exact profile via integer powers of the adjacency matrix over the group
/// ring: row h is the class projection of the trace of A^h.
ClassProfile walk_class_profile(const GainGraph& g, int hmax);

/// Trace horizon that decides cospectrality over the whole group:
/// max(n_a, n_b) * ceil(sqrt(|G|)), since no irreducible degree exceeds
/// sqrt(|G|) and traces up to the matrix size pin a Hermitian spectrum.
int default_trace_horizon(const GainGraph& a, const GainGraph& b);

/// First h at which the walk class profiles differ, or nullopt when they
/// agree everywhere up to the horizon (hmax = 0 picks the default horizon).
/// The comparison is exact integer arithmetic throughout.
std::optional<int> g_cospectral_discrepancy(const GainGraph& a, const GainGraph& b,
                                            int hmax = 0);
bool g_cospectral(const GainGraph& a, const GainGraph& b, int hmax = 0);

/// Eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> values;
  /// Groups eigenvalues closer than 1e-8 * (1 + |value|) into
  /// (representative, multiplicity) pairs; representatives are group means.
  std::vector<std::pair<double, int>> grouped() const;
};

/// Relative gap under which adjacent eigenvalues count as one.
inline constexpr double kSpectrumGroupTol = 1e-8;

/// Spectrum of the represented adjacency matrix.  The matrix is checked to
/// be Hermitian within 1e-8 (anything worse signals a broken representation)
/// and symmetrized before the self-adjoint eigensolve.
Spectrum pi_spectrum(const GainGraph& g, const Representation& p);

/// Compares the trace sequences of the represented adjacency matrices for
/// h = 0..max(n_a, n_b)*degree, computed from the exact class profiles and
/// the character.  Integer-valued characters (detected within 1e-9) make the
/// comparison exact; otherwise traces match within tol * (1 + |t|).
std::optional<int> pi_cospectral_discrepancy(const GainGraph& a, const GainGraph& b,
                                             const Representation& p, double tol = 1e-8);
bool pi_cospectral(const GainGraph& a, const GainGraph& b, const Representation& p,
                   double tol = 1e-8);

/// Characteristic polynomial of the represented adjacency matrix via
/// Newton's identities over the exact trace sequence, compensated summation,
/// long-double accumulation.  Coefficients are returned leading-first
/// (monic) and snapped to integers when within 1e-6.
std::vector<double> pi_char_poly(const GainGraph& g, const Representation& p);

/// Near-integer snapping threshold for characteristic polynomials.
inline constexpr double kCharPolyIntTol = 1e-6;

/// Compares balanced closed-walk counts for h = 0..max(n_a, n_b)*|G|, which
/// decides cospectrality of the regular-representation transforms.
std::optional<int> lambda_cospectral_discrepancy(const GainGraph& a, const GainGraph& b);
bool lambda_cospectral(const GainGraph& a, const GainGraph& b);

/// The |G|-fold cover: vertices V x G with (u, x*b) ~ (v, b) for every edge
/// (u, v) with gain x.  Its plain adjacency matrix equals the
/// regular-representation transform of the base graph read as 0/1.  The
/// result is a gain graph over the trivial group; vertex (v, b) has index
/// v*|G| + b and display name "v@name(b)".
struct CoverGraph {
  GainGraph graph;
  std::vector<std::string> vertex_names;
};
CoverGraph cover_graph(const GainGraph& g);

/// Renders a cover in the gain-graph file format (group cyclic 1), with the
/// vertex names as leading comments.
std::string format_cover(const CoverGraph& c);

/// Invariants of the gain of one trip around a cycle graph.  The traversal
/// starts at vertex 0 toward its smaller neighbor, so graphs with identical
/// underlying cycles classify along the same walk.
struct CycleReport {
  GroupPtr group;
  int n = 0;
  Walk walk;              ///< the closed traversal used
  int gain = 0;           ///< gain of the traversal
  std::string gain_name;
  int gain_class = 0;     ///< conjugacy class of the gain
  int inverse_class = 0;  ///< conjugacy class of its inverse
  int gain_order = 0;     ///< order of the gain in G
};
CycleReport cycle_classify(const GainGraph& g);

/// The four pairwise predicates a cycle report decides in constant time:
/// switching equivalence needs the same class along the same labeled cycle,
/// switching isomorphism (equivalently cospectrality over the whole group)
/// allows inversion, and balanced-walk cospectrality only compares orders.
bool cycles_switching_equivalent(const CycleReport& a, const CycleReport& b);
bool cycles_switching_isomorphic(const CycleReport& a, const CycleReport& b);
bool cycles_g_cospectral(const CycleReport& a, const CycleReport& b);
bool cycles_lambda_cospectral(const CycleReport& a, const CycleReport& b);

}  // namespace gainspec
