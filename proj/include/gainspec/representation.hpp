#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gainspec/algebra.hpp"

namespace gainspec {

/// A unitary matrix representation stored as one image per group element.
struct Representation {
  GroupPtr group;
  int degree = 0;
  std::vector<Eigen::MatrixXcd> images;
  std::string name;
};

/// Degree-1 representation sending everything to 1.
Representation trivial_rep(GroupPtr g);

/// Left-regular representation by permutation matrices: the image of a sends
/// basis vector e_x to e_{a*x}.  Its character is |G| at the identity and 0
/// elsewhere.
Representation regular_rep(GroupPtr g);

/// Degree-1 representation of a cyclic group of order m sending the
/// generator to exp(2*pi*i*j/m), 0 <= j < m.  Faithful iff gcd(j, m) = 1.
/// Images of inverse elements are exact complex conjugates.
Representation cyclic_irrep(GroupPtr g, int j);
Representation cyclic_irrep(int m, int j);

/// The 3-dimensional standard representation of the symmetric group on four
/// points, generated from fixed orthogonal images of (12) and (1234); the
/// remaining images come from breadth-first factorization into those
/// generators, multiplying left to right.
Representation s4_standard(GroupPtr g);
Representation s4_standard();

/// Standard representation twisted by the sign character.
Representation s4_standard_alt(GroupPtr g);
Representation s4_standard_alt();

/// Block-diagonal sum of two representations of the same group.
Representation direct_sum(const Representation& a, const Representation& b);

/// Worst deviations found when checking a representation.
struct RepVerification {
  double identity_dev = 0;      ///< |image(e) - I|
  double homomorphism_dev = 0;  ///< max |image(ab) - image(a)image(b)|
  double unitarity_dev = 0;     ///< max |image(a)^H image(a) - I|
  double tol = 0;
  bool pass = false;
};
RepVerification verify_representation(const Representation& p, double tol);

/// Default verification tolerances.
inline constexpr double kBuiltinRepTol = 1e-12;
inline constexpr double kUserRepTol = 1e-9;

/// Character of p as a class function.  Throws Error if the trace is not
/// constant on some class within class_tol.
ClassFunction character(const Representation& p, double class_tol = 1e-9);

/// Result of substituting images into a group-ring matrix, block by block.
struct RepresentedMatrix {
  Eigen::MatrixXcd mat;
  int block = 0;          ///< block size = representation degree
  bool hermitian = false; ///< whether the input satisfied A.star() == A
};

/// Blockwise substitution: entry (i,j) of a becomes the degree-sized block
/// sum_x coeff_x * image(x).  When the input is Hermitian (A.star() == A)
/// and the images are exactly unitary, the result equals its own conjugate
/// transpose exactly; with floating-point images it does so within 1e-12.
RepresentedMatrix fourier_transform(const Representation& p, const GroupAlgebraMatrix& a);

/// Representation file: degree k, then per element 2*k*k reals (row-major,
/// re/im interleaved).  The result is verified at the user tolerance.
Representation parse_representation(GroupPtr g, std::istream& in, const std::string& name);
Representation load_representation(GroupPtr g, const std::string& path);

/// Name registry used by the command line: `trivial`, `regular`, `sign`
/// (cyclic groups of order 2), `cyclic:<j>`, `s4-standard`,
/// `s4-standard-alt`, `file:<path>`, and `+`-joined direct sums.
Representation representation_by_name(GroupPtr g, const std::string& name);

}  // namespace gainspec
