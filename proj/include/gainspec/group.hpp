#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gainspec/errors.hpp"

namespace gainspec {

/// Arbitrary-precision integer used for coefficients and counts.
using Int = boost::multiprecision::cpp_int;

/// How a group was constructed.  Decides which element-literal syntax the
/// parsers accept: `e`/`g^k` for cyclic groups, disjoint-cycle notation such
/// as `(12)(34)` for symmetric groups, `#index` for table-built groups.
enum class GroupKind { cyclic, symmetric, table };

/// How much validation a multiplication table receives at construction.
enum class TableCheck { full, skip_associativity };

/// A finite group presented by its full multiplication table.
///
/// Elements are the indices 0..order()-1.  The identity, all inverses and
/// the conjugacy classes are computed once at construction.  Classes are
/// ordered by their smallest member and every element knows its class index,
/// so conjugacy queries are lookups.
class FiniteGroup {
 public:
  /// Validates `table` as a group law (identity and inverses always; the
  /// O(N^3) associativity scan unless `check` says to skip it) and
  /// precomputes inverses and conjugacy classes.  Throws NotAGroupError with
  /// the offending elements when an axiom fails.
  FiniteGroup(GroupKind kind, int kind_param, std::vector<std::vector<int>> table,
              std::vector<std::string> names, TableCheck check);

  int order() const { return order_; }
  GroupKind kind() const { return kind_; }
  /// m for cyclic groups, n for symmetric groups, 0 for table groups.
  int kind_param() const { return kind_param_; }

  /// Product a*b.  Arguments must be valid element indices.
  int mul(int a, int b) const { return mul_[size_t(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  /// a^k for any integer k; negative exponents go through the inverse.
  int power(int a, long long k) const;
  /// x^-1 a x
  int conjugate(int a, int x) const { return mul(mul(inv(x), a), x); }
  int element_order(int a) const;

  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find_element(const std::string& name) const;
  /// Parses an element literal in the syntax matching kind(); throws
  /// ParseError for anything unrecognized or out of range.
  int parse_element(const std::string& literal) const;

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  /// |C_G(a)|, via the orbit-stabilizer relation |C_G(a)| = |G| / |class|.
  int centralizer_size(int a) const {
    return order_ / int(classes_[class_of_[a]].size());
  }
  bool abelian() const { return abelian_; }

 private:
  void compute_identity_and_inverses(TableCheck check);
  void compute_classes();

  GroupKind kind_;
  int kind_param_ = 0;
  int order_ = 0;
  std::vector<int> mul_;  // order x order, flattened row-major
  std::vector<int> inv_;
  int identity_ = -1;
  bool abelian_ = false;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Cyclic group of order m >= 1 with elements named e, g, g^2, ...
GroupPtr build_cyclic(int m);

/// Symmetric group on {1..n}, 1 <= n <= 8, in lexicographic one-line order,
/// composed left to right: (a*b)(x) = b(a(x)).  Elements are named in
/// disjoint-cycle notation, the identity as "e".
GroupPtr build_symmetric(int n);

/// Group from an explicit table; `names` may be empty (defaults to #i).
/// Associativity checking is mandatory but may be skipped for orders > 256
/// via the flag.
GroupPtr build_from_table(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> names = {},
                          bool skip_associativity_for_large = false);

/// Table file: order N, then N lines of N element indices, then optionally
/// N names.  `#` starts a comment.
GroupPtr parse_group_table(std::istream& in);
GroupPtr load_group_table(const std::string& path);

/// Structural equality: same order and same multiplication table.  Distinct
/// instances of the same construction are interchangeable.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

/// Whether every element is conjugate to its inverse.
bool is_ambivalent(const FiniteGroup& g);

/// Smallest x (by index) with x^-1 a_i x = b_i for all i, if one exists.
std::optional<int> simultaneously_conjugate(const FiniteGroup& g,
                                            const std::vector<int>& a,
                                            const std::vector<int>& b);

/// Number of orbits of G acting on G^k by simultaneous conjugation,
/// counted exactly via Burnside's lemma: (1/|G|) sum_g |C_G(g)|^k.
Int count_simultaneous_conjugacy_classes(const FiniteGroup& g, int k);

}  // namespace gainspec
