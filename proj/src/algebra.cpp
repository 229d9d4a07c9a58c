#include "dsign/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "dsign/error.hpp"

namespace dsign {

namespace {

bool supported_dim(int n) { return n == 1 || n == 2 || n == 4 || n == 8; }

void require_vec(const Algebra& a, const Vec& x, const char* what) {
  if (x.size() != a.dim()) {
    std::ostringstream os;
    os << what << " has length " << x.size() << ", algebra has dimension " << a.dim();
    throw Error(ErrorKind::BadInput, os.str());
  }
}

void require_square(const Algebra& a, const Mat& m, const char* what) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) {
    std::ostringstream os;
    os << what << " must be " << a.dim() << "x" << a.dim();
    throw Error(ErrorKind::BadInput, os.str());
  }
}

void require_invertible(const Mat& m, double tol, const char* what) {
  const double d = det(m);
  if (!(std::abs(d) > tol)) {
    std::ostringstream os;
    os << what << " is not invertible (|det| = " << std::abs(d) << ")";
    throw Error(ErrorKind::SingularOperator, os.str());
  }
}

// Columns p of the returned n^2 x n matrix hold vec(op(e_p)).
template <class Op>
Mat operator_stack(const Algebra& a, Op op) {
  const int n = a.dim();
  Mat g(n * n, n);
  for (int p = 0; p < n; ++p) {
    const Mat m = op(a, basis_vec(n, p));
    g.col(p) = Eigen::Map<const Vec>(m.data(), n * n);
  }
  return g;
}

std::optional<Vec> solve_exact(const Mat& g, const Vec& rhs, double tol) {
  const Vec x = g.completeOrthogonalDecomposition().solve(rhs);
  const double scale = std::max(1.0, max_abs(g) * x.cwiseAbs().sum());
  if (!x.allFinite() || (g * x - rhs).cwiseAbs().maxCoeff() > tol * scale) return std::nullopt;
  return x;
}

Mat null_space(const Mat& g, double tol) {
  const int n = static_cast<int>(g.cols());
  Eigen::JacobiSVD<Mat> svd(g, Eigen::ComputeFullV);
  const Vec& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s.size() ? s(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

using Q4 = Eigen::Vector4d;

Q4 qmul(const Q4& p, const Q4& q) {
  return {p(0) * q(0) - p(1) * q(1) - p(2) * q(2) - p(3) * q(3),
          p(0) * q(1) + p(1) * q(0) + p(2) * q(3) - p(3) * q(2),
          p(0) * q(2) - p(1) * q(3) + p(2) * q(0) + p(3) * q(1),
          p(0) * q(3) + p(1) * q(2) - p(2) * q(1) + p(3) * q(0)};
}

Q4 qconj(const Q4& q) { return {q(0), -q(1), -q(2), -q(3)}; }

// Cayley-Dickson doubling: (a, b)(c, d) = (ac - d* b, d a + b c*).
Vec octonion_mul(const Vec& x, const Vec& y) {
  const Q4 a = x.head<4>(), b = x.tail<4>(), c = y.head<4>(), d = y.tail<4>();
  Vec out(8);
  out.head<4>() = qmul(a, c) - qmul(qconj(d), b);
  out.tail<4>() = qmul(d, a) + qmul(b, qconj(c));
  return out;
}

}  // namespace

Vec basis_vec(int n, int i) { return Vec::Unit(n, i); }

Algebra::Algebra(int dim, std::vector<double> structure, std::string label)
    : dim_(dim), structure_(std::move(structure)), label_(std::move(label)) {
  if (!supported_dim(dim)) {
    throw Error(ErrorKind::BadDimension, "algebra dimension must be 1, 2, 4 or 8, got " + std::to_string(dim));
  }
  if (structure_.size() != static_cast<std::size_t>(dim) * dim * dim) {
    throw Error(ErrorKind::BadInput, "structure tensor has " + std::to_string(structure_.size()) +
                                         " entries, expected dim^3");
  }
  for (double v : structure_)
    if (!std::isfinite(v)) throw Error(ErrorKind::BadInput, "structure tensor has a non-finite entry");
}

Algebra Algebra::relabel(std::string label) const { return Algebra(dim_, structure_, std::move(label)); }

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  require_vec(*this, x, "left factor");
  require_vec(*this, y, "right factor");
  Vec out = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      const double w = x(i) * y(j);
      if (w == 0.0) continue;
      for (int k = 0; k < dim_; ++k) out(k) += w * c(i, j, k);
    }
  }
  return out;
}

Vec Algebra::product(int i, int j) const {
  Vec out(dim_);
  for (int k = 0; k < dim_; ++k) out(k) = c(i, j, k);
  return out;
}

double tensor_distance(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::BadInput, "tensor_distance: dimensions differ");
  double d = 0.0;
  for (std::size_t i = 0; i < a.structure().size(); ++i)
    d = std::max(d, std::abs(a.structure()[i] - b.structure()[i]));
  return d;
}

SignPair parse_block(std::string_view label) {
  if (label.size() != 2) throw Error(ErrorKind::BadInput, "block label must be two characters");
  auto one = [](char c) {
    if (c == '+') return Sign::Plus;
    if (c == '-') return Sign::Minus;
    throw Error(ErrorKind::BadInput, "block label characters must be '+' or '-'");
  };
  return {one(label[0]), one(label[1])};
}

Mat left_mult(const Algebra& a, const Vec& x) {
  require_vec(a, x, "multiplier");
  const int n = a.dim();
  Mat m = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(k, j) += x(i) * a.c(i, j, k);
  }
  return m;
}

Mat right_mult(const Algebra& a, const Vec& x) {
  require_vec(a, x, "multiplier");
  const int n = a.dim();
  Mat m = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    if (x(j) == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) m(k, i) += x(j) * a.c(i, j, k);
  }
  return m;
}

SignPair sign_pair(const Algebra& a, const SignOptions& opt) {
  const int n = a.dim();
  if (n == 1) throw Error(ErrorKind::DimensionOne, "the double sign is undefined in dimension one");
  Rng rng(opt.seed);
  std::optional<SignPair> first;
  auto visit = [&](const Vec& x, int index) {
    const SignPair p{sign_det(left_mult(a, x), opt.tol), sign_det(right_mult(a, x), opt.tol)};
    if (!first) {
      first = p;
    } else if (!(p == *first)) {
      std::ostringstream os;
      os << "sample " << index << " has signs " << p.label() << " but sample 0 has " << first->label();
      throw Error(ErrorKind::SignInconsistent, os.str());
    }
  };
  for (int i = 0; i < n; ++i) visit(basis_vec(n, i), i);
  for (int s = 0; s < opt.samples; ++s) {
    Vec x = rng.uniform_vec(n);
    while (x.squaredNorm() < 1e-6) x = rng.uniform_vec(n);
    visit(x, n + s);
  }
  return *first;
}

std::string block_of(const Algebra& a, const SignOptions& opt) { return sign_pair(a, opt).label(); }

Algebra isotope(const Algebra& a, const Mat& s, const Mat& t, double tol) {
  require_square(a, s, "isotope: S");
  require_square(a, t, "isotope: T");
  require_invertible(s, tol, "isotope: S");
  require_invertible(t, tol, "isotope: T");
  return Algebra::from_products(
      a.dim(), [&](int i, int j) { return a.mul(s.col(i), t.col(j)); }, a.label().empty() ? "" : a.label() + "_iso");
}

Algebra opposite(const Algebra& a) {
  const int n = a.dim();
  std::vector<double> c(a.structure().size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c[(static_cast<std::size_t>(i) * n + j) * n + k] = a.c(j, i, k);
  return Algebra(n, std::move(c), a.label().empty() ? "" : a.label() + "_op");
}

Algebra transport(const Algebra& a, const Mat& f, double tol) {
  require_square(a, f, "transport: F");
  require_invertible(f, tol, "transport: F");
  const Mat finv = f.inverse();
  return Algebra::from_products(
      a.dim(), [&](int i, int j) { return Vec(f * a.mul(finv.col(i), finv.col(j))); },
      a.label().empty() ? "" : a.label() + "_tr");
}

double morphism_residual(const Mat& f, const Algebra& a, const Algebra& b) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) throw Error(ErrorKind::BadInput, "morphism matrix has the wrong shape");
  if (!(max_abs(f) > kDefaultTol)) throw Error(ErrorKind::ZeroMap, "morphisms are non-zero linear maps");
  double worst = 0.0, scale = 1.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Vec lhs = f * a.product(i, j);
      const Vec rhs = b.mul(f.col(i), f.col(j));
      worst = std::max(worst, (lhs - rhs).norm());
      scale = std::max(scale, lhs.norm());
    }
  return worst / scale;
}

bool is_morphism(const Mat& f, const Algebra& a, const Algebra& b, double tol) {
  return morphism_residual(f, a, b) <= tol;
}

std::string_view to_string(DivisionVerdict v) {
  switch (v) {
    case DivisionVerdict::Division: return "division";
    case DivisionVerdict::NotDivision: return "not_division";
    case DivisionVerdict::ProbablyDivision: return "probably_division";
  }
  return "unknown";
}

DivisionReport is_division(const Algebra& a, DivisionMode mode, int samples, double tol, std::uint64_t seed) {
  const int n = a.dim();
  if (mode == DivisionMode::Exact2d) {
    if (n > 2) throw Error(ErrorKind::ModeMismatch, "exact2d applies to dimension <= 2 only");
    if (n == 1) {
      const double c = std::abs(a.c(0, 0, 0));
      return {c > tol ? DivisionVerdict::Division : DivisionVerdict::NotDivision, c};
    }
    // det(x1 M1 + x2 M2) = x^t Q x with Q symmetric; division iff both Q are definite.
    auto form_margin = [&](auto op) {
      const Mat m1 = op(a, basis_vec(2, 0)), m2 = op(a, basis_vec(2, 1));
      const double d1 = det(m1), d2 = det(m2), mixed = det(m1 + m2) - d1 - d2;
      Eigen::Matrix2d q;
      q << d1, 0.5 * mixed, 0.5 * mixed, d2;
      const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(q).eigenvalues();
      return ev(0) * ev(1) > 0 ? std::min(std::abs(ev(0)), std::abs(ev(1))) : 0.0;
    };
    const double margin = std::min(form_margin(left_mult), form_margin(right_mult));
    return {margin > tol ? DivisionVerdict::Division : DivisionVerdict::NotDivision, margin};
  }
  Rng rng(seed);
  double smallest = std::numeric_limits<double>::infinity();
  int sign_l = 0, sign_r = 0;
  bool consistent = true;
  for (int s = 0; s < samples; ++s) {
    const Vec x = rng.unit_vec(n);
    const double dl = det(left_mult(a, x)), dr = det(right_mult(a, x));
    smallest = std::min({smallest, std::abs(dl), std::abs(dr)});
    const int sl = dl > 0 ? 1 : -1, sr = dr > 0 ? 1 : -1;
    if (s == 0) {
      sign_l = sl;
      sign_r = sr;
    } else if (n > 1 && (sl != sign_l || sr != sign_r)) {
      consistent = false;
    }
  }
  const bool ok = consistent && smallest > tol;
  return {ok ? DivisionVerdict::ProbablyDivision : DivisionVerdict::NotDivision, smallest};
}

Unities find_unities(const Algebra& a, double tol) {
  const int n = a.dim();
  const Mat gl = operator_stack(a, left_mult);
  const Mat gr = operator_stack(a, right_mult);
  const Mat id = Mat::Identity(n, n);
  const Vec vid = Eigen::Map<const Vec>(id.data(), n * n);
  Unities u;
  u.left = solve_exact(gl, vid, tol);
  u.right = solve_exact(gr, vid, tol);
  if (u.left && u.right) {
    Mat g(2 * n * n, n);
    g << gl, gr;
    Vec rhs(2 * n * n);
    rhs << vid, vid;
    u.two_sided = solve_exact(g, rhs, tol);
  }
  return u;
}

Mat center(const Algebra& a, double tol) {
  return null_space(operator_stack(a, left_mult) - operator_stack(a, right_mult), tol);
}

Mat associative_center(const Algebra& a, double tol) {
  const int n = a.dim();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  Mat g(static_cast<Eigen::Index>(n2 + 3 * n2 * n), n);
  g.topRows(static_cast<Eigen::Index>(n2)) = operator_stack(a, left_mult) - operator_stack(a, right_mult);
  // Associators (z,x,y), (x,z,y), (x,y,z) are linear in z.
  Eigen::Index row = static_cast<Eigen::Index>(n2);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Vec ex = basis_vec(n, x), ey = basis_vec(n, y), xy = a.product(x, y);
      for (int p = 0; p < n; ++p) {
        const Vec z = basis_vec(n, p);
        g.block(row, p, n, 1) = a.mul(a.mul(z, ex), ey) - a.mul(z, xy);
        g.block(row + n, p, n, 1) = a.mul(a.mul(ex, z), ey) - a.mul(ex, a.mul(z, ey));
        g.block(row + 2 * n, p, n, 1) = a.mul(xy, z) - a.mul(ex, a.mul(ey, z));
      }
      row += 3 * n;
    }
  return null_space(g, tol);
}

Classical parse_classical(std::string_view name) {
  if (name == "C") return Classical::C;
  if (name == "H") return Classical::H;
  if (name == "O") return Classical::O;
  throw Error(ErrorKind::BadInput, "classical algebra name must be C, H or O");
}

Algebra classical(Classical which) {
  switch (which) {
    case Classical::C:
      return Algebra::from_products(
          2,
          [](int i, int j) {
            Vec v = Vec::Zero(2);
            if (i == 1 && j == 1) v(0) = -1.0;
            else v(i + j) = 1.0;
            return v;
          },
          "C");
    case Classical::H:
      return Algebra::from_products(
          4, [](int i, int j) { return Vec(qmul(Q4::Unit(i), Q4::Unit(j))); }, "H");
    case Classical::O:
      return Algebra::from_products(
          8, [](int i, int j) { return octonion_mul(basis_vec(8, i), basis_vec(8, j)); }, "O");
  }
  throw Error(ErrorKind::BadInput, "unknown classical algebra");
}

}  // namespace dsign
