#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gainspec/group.hpp"

namespace gainspec {

/// Throws GroupMismatchError unless a and b present the same group.
void check_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* what);

/// An element of the integral group ring Z[G]: one arbitrary-precision
/// integer coefficient per group element.  Products are convolutions over
/// the group law; star() is the involution sending sum c_x x to sum c_x x^-1.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupPtr g);
  static GroupAlgebraElement basis(GroupPtr g, int x, Int coeff = 1);

  const GroupPtr& group() const { return group_; }
  const Int& coeff(int x) const { return coeffs_[x]; }
  Int& coeff(int x) { return coeffs_[x]; }
  bool is_zero() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement operator-() const;
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a += b;
    return a;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a -= b;
    return a;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b);
  bool operator==(const GroupAlgebraElement& o) const;
  bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

  GroupAlgebraElement star() const;
  /// Readable form such as "2*(12)(34) - (34)"; "0" when zero.
  std::string format() const;

 private:
  GroupPtr group_;
  std::vector<Int> coeffs_;
};

/// A complex value per conjugacy class (characters, class projections).
struct ClassFunction {
  GroupPtr group;
  std::vector<std::complex<double>> values;
  std::complex<double> at_element(int x) const { return values[group->class_of(x)]; }
};

/// Projection of a ring element onto conjugacy classes: the value at a class
/// is the sum of the coefficients of its members.
ClassFunction mu(const GroupAlgebraElement& f);

/// Exact integer form of mu: per-class coefficient sums.
std::vector<Int> class_sums(const GroupAlgebraElement& f);

/// Dense matrix with group-ring entries.  star() is the conjugate transpose
/// under the ring involution, so adjacency matrices of gain graphs satisfy
/// A.star() == A.
class GroupAlgebraMatrix {
 public:
  GroupAlgebraMatrix(GroupPtr g, int rows, int cols);
  static GroupAlgebraMatrix identity(GroupPtr g, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const GroupPtr& group() const { return group_; }
  GroupAlgebraElement& at(int i, int j) { return entries_[size_t(i) * cols_ + j]; }
  const GroupAlgebraElement& at(int i, int j) const {
    return entries_[size_t(i) * cols_ + j];
  }

  friend GroupAlgebraMatrix operator*(const GroupAlgebraMatrix& a,
                                      const GroupAlgebraMatrix& b);
  bool operator==(const GroupAlgebraMatrix& o) const;
  bool operator!=(const GroupAlgebraMatrix& o) const { return !(*this == o); }

  GroupAlgebraMatrix star() const;
  GroupAlgebraElement trace() const;

 private:
  GroupPtr group_;
  int rows_ = 0, cols_ = 0;
  std::vector<GroupAlgebraElement> entries_;
};

}  // namespace gainspec
