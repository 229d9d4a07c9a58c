#include "dsign/decorated.hpp"

#include <cmath>

#include "dsign/error.hpp"
#include "dsign/generators.hpp"

namespace dsign {

DecoratedAlgebra decorate(Algebra a, Mat u, Mat v, double tol) {
  const int n = a.dim();
  const int m = static_cast<int>(u.cols());
  if (u.rows() != n || v.rows() != n) throw Error(ErrorKind::BadSplit, "U and V columns must have length dim");
  if (m % 2 == 0 || m >= n) throw Error(ErrorKind::BadSplit, "dim U must be odd and smaller than dim A");
  if (v.cols() != n - m) throw Error(ErrorKind::BadSplit, "dim U + dim V must equal dim A");
  Mat b(n, n);
  b << u, v;
  const Vec s = Eigen::JacobiSVD<Mat>(b).singularValues();
  if (!(s(n - 1) > tol * std::max(1.0, s(0)))) throw Error(ErrorKind::BadSplit, "U and V are not supplementary");
  return DecoratedAlgebra(std::move(a), std::move(u), std::move(v));
}

Mat kappa(const DecoratedAlgebra& x) {
  const int n = x.n(), m = x.m();
  Mat b(n, n);
  b << x.u(), x.v();
  Vec d = Vec::Ones(n);
  d.tail(n - m).setConstant(-1.0);
  // kappa B = B diag(I, -I), solved rather than inverted.
  const Mat rhs = (b * d.asDiagonal()).transpose();
  return b.transpose().partialPivLu().solve(rhs).transpose();
}

DecoratedAlgebra functor_I(int i, int j, const DecoratedAlgebra& x) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) throw Error(ErrorKind::BadInput, "functor_I exponents must be 0 or 1");
  if (i == 0 && j == 0) return x;
  const int n = x.n();
  const Mat k = kappa(x);
  const Mat id = Mat::Identity(n, n);
  return decorate(isotope(x.alg(), i ? k : id, j ? k : id), x.u(), x.v());
}

DecoratedAlgebra transport(const DecoratedAlgebra& x, const Mat& f) {
  return decorate(transport(x.alg(), f), f * x.u(), f * x.v());
}

DecoratedAlgebra random_decoration(const Algebra& a, int m, Rng& rng) {
  const Mat b = random_invertible(a.dim(), rng, 0.1);
  return decorate(a, b.leftCols(m), b.rightCols(a.dim() - m));
}

}  // namespace dsign
