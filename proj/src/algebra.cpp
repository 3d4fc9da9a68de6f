#include "gainspec/algebra.hpp"

#include <sstream>

namespace gainspec {

void check_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* what) {
  if (!same_group(a, b))
    throw GroupMismatchError(std::string(what) + ": operands live over different groups");
}

GroupAlgebraElement::GroupAlgebraElement(GroupPtr g)
    : group_(std::move(g)), coeffs_(group_->order()) {}

GroupAlgebraElement GroupAlgebraElement::basis(GroupPtr g, int x, Int coeff) {
  GroupAlgebraElement f(std::move(g));
  f.coeffs_[x] = std::move(coeff);
  return f;
}

bool GroupAlgebraElement::is_zero() const {
  for (const Int& c : coeffs_)
    if (c != 0) return false;
  return true;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  check_same_group(*group_, *o.group_, "group ring addition");
  for (size_t x = 0; x < coeffs_.size(); ++x) coeffs_[x] += o.coeffs_[x];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  check_same_group(*group_, *o.group_, "group ring subtraction");
  for (size_t x = 0; x < coeffs_.size(); ++x) coeffs_[x] -= o.coeffs_[x];
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement r(group_);
  for (size_t x = 0; x < coeffs_.size(); ++x) r.coeffs_[x] = -coeffs_[x];
  return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_group(*a.group_, *b.group_, "group ring product");
  const FiniteGroup& g = *a.group_;
  GroupAlgebraElement r(a.group_);
  for (int x = 0; x < g.order(); ++x) {
    if (a.coeffs_[x] == 0) continue;
    for (int y = 0; y < g.order(); ++y) {
      if (b.coeffs_[y] == 0) continue;
      r.coeffs_[g.mul(x, y)] += a.coeffs_[x] * b.coeffs_[y];
    }
  }
  return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  return same_group(*group_, *o.group_) && coeffs_ == o.coeffs_;
}

GroupAlgebraElement GroupAlgebraElement::star() const {
  GroupAlgebraElement r(group_);
  for (int x = 0; x < group_->order(); ++x) r.coeffs_[group_->inv(x)] = coeffs_[x];
  return r;
}

std::string GroupAlgebraElement::format() const {
  std::ostringstream out;
  bool first = true;
  for (int x = 0; x < group_->order(); ++x) {
    const Int& c = coeffs_[x];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << "*";
    out << group_->name(x);
  }
  if (first) out << "0";
  return out.str();
}

ClassFunction mu(const GroupAlgebraElement& f) {
  std::vector<Int> sums = class_sums(f);
  ClassFunction cf{f.group(), {}};
  cf.values.reserve(sums.size());
  for (const Int& s : sums) cf.values.emplace_back(s.convert_to<double>(), 0.0);
  return cf;
}

std::vector<Int> class_sums(const GroupAlgebraElement& f) {
  const FiniteGroup& g = *f.group();
  std::vector<Int> sums(g.classes().size());
  for (int x = 0; x < g.order(); ++x) sums[g.class_of(x)] += f.coeff(x);
  return sums;
}

GroupAlgebraMatrix::GroupAlgebraMatrix(GroupPtr g, int rows, int cols)
    : group_(std::move(g)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("matrix dimensions must be nonnegative");
  entries_.assign(size_t(rows) * cols, GroupAlgebraElement(group_));
}

GroupAlgebraMatrix GroupAlgebraMatrix::identity(GroupPtr g, int n) {
  GroupAlgebraMatrix m(g, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i).coeff(g->identity()) = 1;
  return m;
}

GroupAlgebraMatrix operator*(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  check_same_group(*a.group_, *b.group_, "matrix product");
  if (a.cols_ != b.rows_)
    throw Error("matrix product dimension mismatch: " + std::to_string(a.cols_) +
                " vs " + std::to_string(b.rows_));
  GroupAlgebraMatrix r(a.group_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const GroupAlgebraElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * b.at(k, j);
      }
    }
  return r;
}

bool GroupAlgebraMatrix::operator==(const GroupAlgebraMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !same_group(*group_, *o.group_))
    return false;
  return entries_ == o.entries_;
}

GroupAlgebraMatrix GroupAlgebraMatrix::star() const {
  GroupAlgebraMatrix r(group_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).star();
  return r;
}

GroupAlgebraElement GroupAlgebraMatrix::trace() const {
  if (rows_ != cols_) throw Error("trace of a non-square matrix");
  GroupAlgebraElement t(group_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

}  // namespace gainspec
