#include "gainspec/representation.hpp"

#include <cmath>
#include <deque>
#include <fstream>
#include <numbers>
#include <sstream>

namespace gainspec {

namespace {

void require_group(const Representation& p, const FiniteGroup& g, const char* what) {
  check_same_group(*p.group, g, what);
}

std::complex<double> root_of_unity(int t, int m) {
  // Exact conjugate pairing: the value at m - t is the conjugate of the value
  // at t, and the half-turn is exactly -1, so inverse elements always get
  // exactly conjugate images.
  if (t == 0) return {1.0, 0.0};
  if (2 * t == m) return {-1.0, 0.0};
  if (2 * t > m) return std::conj(root_of_unity(m - t, m));
  double ang = 2.0 * std::numbers::pi * t / m;
  return {std::cos(ang), std::sin(ang)};
}

Representation s4_from_generators(GroupPtr g, const Eigen::Matrix3cd& img12,
                                  const Eigen::Matrix3cd& img1234,
                                  const std::string& name) {
  if (g->kind() != GroupKind::symmetric || g->order() != 24)
    throw Error(name + " requires the symmetric group on four points");
  int a12 = *g->find_element("(12)");
  int a1234 = *g->find_element("(1234)");
  Representation p{g, 3, std::vector<Eigen::MatrixXcd>(24), name};
  std::vector<bool> known(24, false);
  p.images[g->identity()] = Eigen::Matrix3cd::Identity();
  known[g->identity()] = true;
  std::deque<int> queue{g->identity()};
  const int gens[2] = {a12, a1234};
  const Eigen::Matrix3cd gen_imgs[2] = {img12, img1234};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int k = 0; k < 2; ++k) {
      int y = g->mul(x, gens[k]);
      if (!known[y]) {
        p.images[y] = p.images[x] * gen_imgs[k];
        known[y] = true;
        queue.push_back(y);
      }
    }
  }
  return p;
}

}  // namespace

Representation trivial_rep(GroupPtr g) {
  Representation p{g, 1, {}, "trivial"};
  p.images.assign(g->order(), Eigen::MatrixXcd::Ones(1, 1));
  return p;
}

Representation regular_rep(GroupPtr g) {
  int n = g->order();
  Representation p{g, n, {}, "regular"};
  p.images.reserve(n);
  for (int a = 0; a < n; ++a) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x) m(g->mul(a, x), x) = 1.0;
    p.images.push_back(std::move(m));
  }
  return p;
}

Representation cyclic_irrep(GroupPtr g, int j) {
  if (g->kind() != GroupKind::cyclic)
    throw Error("cyclic_irrep requires a cyclic group");
  int m = g->order();
  if (j < 0 || j >= m)
    throw Error("cyclic_irrep index " + std::to_string(j) + " out of range 0.." +
                std::to_string(m - 1));
  Representation p{g, 1, {}, "cyclic:" + std::to_string(j)};
  p.images.reserve(m);
  for (int a = 0; a < m; ++a) {
    Eigen::MatrixXcd v(1, 1);
    v(0, 0) = root_of_unity((a * j) % m, m);
    p.images.push_back(std::move(v));
  }
  return p;
}

Representation cyclic_irrep(int m, int j) { return cyclic_irrep(build_cyclic(m), j); }

Representation s4_standard(GroupPtr g) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  Eigen::Matrix3cd img12, img1234;
  img12 << -1, 0, 0,
            0, 1, 0,
            0, 0, 1;
  img1234 << -0.5,      s3 / 2,     0,
             -s3 / 6,   -1.0 / 6,   2 * s2 / 3,
             -s6 / 3,   -s2 / 3,    -1.0 / 3;
  return s4_from_generators(std::move(g), img12, img1234, "s4-standard");
}

Representation s4_standard() { return s4_standard(build_symmetric(4)); }

Representation s4_standard_alt(GroupPtr g) {
  // Twisting by the sign character negates the images of both generators,
  // which are odd permutations.
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  Eigen::Matrix3cd img12, img1234;
  img12 << 1, 0, 0,
           0, -1, 0,
           0, 0, -1;
  img1234 << 0.5,      -s3 / 2,    0,
             s3 / 6,   1.0 / 6,    -2 * s2 / 3,
             s6 / 3,   s2 / 3,     1.0 / 3;
  return s4_from_generators(std::move(g), img12, img1234, "s4-standard-alt");
}

Representation s4_standard_alt() { return s4_standard_alt(build_symmetric(4)); }

Representation direct_sum(const Representation& a, const Representation& b) {
  check_same_group(*a.group, *b.group, "direct sum");
  Representation p{a.group, a.degree + b.degree, {}, a.name + "+" + b.name};
  p.images.reserve(a.group->order());
  for (int x = 0; x < a.group->order(); ++x) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(p.degree, p.degree);
    m.topLeftCorner(a.degree, a.degree) = a.images[x];
    m.bottomRightCorner(b.degree, b.degree) = b.images[x];
    p.images.push_back(std::move(m));
  }
  return p;
}

RepVerification verify_representation(const Representation& p, double tol) {
  const FiniteGroup& g = *p.group;
  RepVerification r;
  r.tol = tol;
  if (int(p.images.size()) != g.order())
    throw Error("representation has " + std::to_string(p.images.size()) +
                " images for a group of order " + std::to_string(g.order()));
  for (const auto& m : p.images)
    if (m.rows() != p.degree || m.cols() != p.degree)
      throw Error("representation image has wrong dimensions");
  Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(p.degree, p.degree);
  r.identity_dev = (p.images[g.identity()] - eye).cwiseAbs().maxCoeff();
  for (int a = 0; a < g.order(); ++a) {
    double u = (p.images[a].adjoint() * p.images[a] - eye).cwiseAbs().maxCoeff();
    r.unitarity_dev = std::max(r.unitarity_dev, u);
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      double h =
          (p.images[g.mul(a, b)] - p.images[a] * p.images[b]).cwiseAbs().maxCoeff();
      r.homomorphism_dev = std::max(r.homomorphism_dev, h);
    }
  r.pass = r.identity_dev <= tol && r.homomorphism_dev <= tol && r.unitarity_dev <= tol;
  return r;
}

ClassFunction character(const Representation& p, double class_tol) {
  const FiniteGroup& g = *p.group;
  ClassFunction chi{p.group, {}};
  chi.values.reserve(g.classes().size());
  for (const auto& cls : g.classes()) {
    std::complex<double> v = p.images[cls.front()].trace();
    for (int x : cls) {
      std::complex<double> w = p.images[x].trace();
      if (std::abs(w - v) > class_tol)
        throw Error("representation '" + p.name +
                    "' has a non-constant trace on the class of " + g.name(cls.front()));
    }
    chi.values.push_back(v);
  }
  return chi;
}

RepresentedMatrix fourier_transform(const Representation& p, const GroupAlgebraMatrix& a) {
  check_same_group(*p.group, *a.group(), "fourier transform");
  const FiniteGroup& g = *a.group();
  int k = p.degree;
  RepresentedMatrix r;
  r.block = k;
  r.hermitian = a.rows() == a.cols() && a.star() == a;
  r.mat = Eigen::MatrixXcd::Zero(a.rows() * k, a.cols() * k);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const GroupAlgebraElement& f = a.at(i, j);
      auto block = r.mat.block(i * k, j * k, k, k);
      // Accumulate inverse pairs together so that the blocks at (i,j) and
      // (j,i) of a Hermitian input are built from term-by-term conjugate
      // transposes in the same order.
      for (int x = 0; x < g.order(); ++x) {
        int xi = g.inv(x);
        if (xi < x) continue;
        if (f.coeff(x) != 0) block += f.coeff(x).convert_to<double>() * p.images[x];
        if (xi != x && f.coeff(xi) != 0)
          block += f.coeff(xi).convert_to<double>() * p.images[xi];
      }
    }
  return r;
}

Representation parse_representation(GroupPtr g, std::istream& in, const std::string& name) {
  std::vector<double> nums;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) {
      try {
        size_t used = 0;
        nums.push_back(std::stod(t, &used));
        if (used != t.size()) throw std::invalid_argument("");
      } catch (...) {
        throw ParseError("representation file: bad number '" + t + "'");
      }
    }
  }
  if (nums.empty()) throw ParseError("representation file is empty");
  double kd = nums[0];
  int k = int(kd);
  if (k < 1 || double(k) != kd)
    throw ParseError("representation file: bad degree");
  size_t need = 1 + size_t(g->order()) * 2 * k * k;
  if (nums.size() != need)
    throw ParseError("representation file: expected " + std::to_string(need - 1) +
                     " numbers after the degree, got " + std::to_string(nums.size() - 1));
  Representation p{g, k, {}, name};
  size_t pos = 1;
  for (int x = 0; x < g->order(); ++x) {
    Eigen::MatrixXcd m(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        double re = nums[pos++], im = nums[pos++];
        m(r, c) = {re, im};
      }
    p.images.push_back(std::move(m));
  }
  RepVerification v = verify_representation(p, kUserRepTol);
  if (!v.pass) {
    std::ostringstream msg;
    msg << "representation '" << name << "' fails verification (identity "
        << v.identity_dev << ", homomorphism " << v.homomorphism_dev << ", unitarity "
        << v.unitarity_dev << ", tolerance " << v.tol << ")";
    throw Error(msg.str());
  }
  return p;
}

Representation load_representation(GroupPtr g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open representation file '" + path + "'");
  return parse_representation(std::move(g), in, "file:" + path);
}

Representation representation_by_name(GroupPtr g, const std::string& name) {
  // Direct sums: split on '+'.
  if (name.find('+') != std::string::npos) {
    std::vector<Representation> parts;
    std::string atom;
    std::istringstream in(name);
    while (std::getline(in, atom, '+')) {
      size_t a = atom.find_first_not_of(" \t");
      size_t b = atom.find_last_not_of(" \t");
      if (a == std::string::npos) throw Error("empty summand in representation name");
      parts.push_back(representation_by_name(g, atom.substr(a, b - a + 1)));
    }
    Representation p = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) p = direct_sum(p, parts[i]);
    p.name = name;
    return p;
  }
  if (name == "trivial") return trivial_rep(g);
  if (name == "regular") return regular_rep(g);
  if (name == "sign") {
    if (g->kind() != GroupKind::cyclic || g->order() != 2)
      throw Error("representation 'sign' requires the cyclic group of order 2");
    Representation p = cyclic_irrep(g, 1);
    p.name = "sign";
    return p;
  }
  if (name.rfind("cyclic:", 0) == 0) {
    int j;
    try {
      size_t used = 0;
      j = std::stoi(name.substr(7), &used);
      if (used != name.size() - 7) throw std::invalid_argument("");
    } catch (...) {
      throw Error("bad representation name '" + name + "'");
    }
    return cyclic_irrep(g, j);
  }
  if (name == "s4-standard") return s4_standard(g);
  if (name == "s4-standard-alt") return s4_standard_alt(g);
  if (name.rfind("file:", 0) == 0) return load_representation(g, name.substr(5));
  throw Error("unknown representation '" + name + "'");
}

}  // namespace gainspec
