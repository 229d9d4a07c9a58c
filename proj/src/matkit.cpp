#include "dsign/matkit.hpp"

#include <cmath>
#include <sstream>

#include "dsign/error.hpp"

namespace dsign {

Vec Rng::uniform_vec(int n, double lo, double hi) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Mat Rng::uniform_mat(int rows, int cols, double lo, double hi) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = uniform(lo, hi);
  return m;
}

Vec Rng::unit_vec(int n) {
  for (;;) {
    Vec v = uniform_vec(n);
    const double r2 = v.squaredNorm();
    if (r2 > 1e-4 && r2 <= 1.0) return v / std::sqrt(r2);
  }
}

double det(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::BadInput, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

Sign sign_det(const Mat& m, double tol) {
  const double d = det(m);
  if (!(std::abs(d) > tol)) {
    std::ostringstream os;
    os << "|det| = " << std::abs(d) << " <= " << tol;
    throw Error(ErrorKind::DegenerateSign, os.str());
  }
  return d > 0 ? Sign::Plus : Sign::Minus;
}

Polar polar_decompose(const Mat& m, double rel_tol) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::BadInput, "polar decomposition of a non-square matrix");
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec& s = svd.singularValues();
  if (s.size() == 0 || !(s(s.size() - 1) > rel_tol * s(0))) {
    throw Error(ErrorKind::SingularInput, "matrix is numerically singular");
  }
  const Mat& u = svd.matrixU();
  Mat p = u * s.asDiagonal() * u.transpose();
  p = 0.5 * (p + p.transpose());
  return {std::move(p), u * svd.matrixV().transpose()};
}

bool is_spd1(const Mat& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (!m.allFinite()) return false;
  if (max_abs(m - m.transpose()) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (m + m.transpose()), Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > tol)) return false;
  return std::abs(det(m) - 1.0) <= tol;
}

Mat clean_spd1(const Mat& m) {
  Mat s = 0.5 * (m + m.transpose());
  const double d = det(s);
  if (!(d > 0)) throw Error(ErrorKind::SingularInput, "matrix is not positive definite");
  return s * std::pow(d, -1.0 / static_cast<double>(s.rows()));
}

Mat random_spd1(int n, Rng& rng) {
  if (n != 1 && n != 2 && n != 4 && n != 8) throw Error(ErrorKind::BadDimension, "random_spd1 supports n in {1,2,4,8}");
  const Mat w = rng.uniform_mat(n, n);
  const Mat g = w * w.transpose() + 0.1 * Mat::Identity(n, n);
  return clean_spd1(g);
}

Mat random_spd1(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_spd1(n, rng);
}

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace dsign
