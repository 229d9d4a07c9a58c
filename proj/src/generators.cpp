#include "dsign/generators.hpp"

#include "dsign/error.hpp"

namespace dsign {

namespace {

Classical classical_of_dim(int dim) {
  switch (dim) {
    case 2: return Classical::C;
    case 4: return Classical::H;
    case 8: return Classical::O;
    default: throw Error(ErrorKind::BadDimension, "classical isotopes exist in dimensions 2, 4 and 8");
  }
}

}  // namespace

Mat random_invertible(int n, Rng& rng, double min_ratio) {
  for (;;) {
    Mat m = rng.uniform_mat(n, n);
    const Vec s = Eigen::JacobiSVD<Mat>(m).singularValues();
    if (s(n - 1) >= min_ratio * s(0)) return m;
  }
}

Mat random_orthogonal(int n, Rng& rng, Sign det_sign) {
  Mat q = Eigen::HouseholderQR<Mat>(rng.uniform_mat(n, n)).householderQ();
  if ((det(q) > 0) != (det_sign == Sign::Plus)) q.col(0) = -q.col(0);
  return q;
}

Algebra random_classical_isotope(int dim, Rng& rng) {
  const Algebra base = classical(classical_of_dim(dim));
  const Mat s = random_invertible(dim, rng);
  const Mat t = random_invertible(dim, rng);
  return isotope(base, s, t).relabel(base.label() + "_random_isotope");
}

Algebra random_2d_division(Rng& rng) {
  for (;;) {
    std::vector<double> c(8);
    for (double& v : c) v = rng.uniform(-2.0, 2.0);
    Algebra a(2, std::move(c), "random2d");
    if (is_division(a, DivisionMode::Exact2d, 0, 1e-3).verdict == DivisionVerdict::Division) return a;
  }
}

Algebra random_division_algebra(int dim, Rng& rng) {
  const int kind = rng.index(dim == 2 ? 3 : 2);
  if (kind == 2) return random_2d_division(rng);
  Algebra a = random_classical_isotope(dim, rng);
  if (kind == 1) a = transport(a, random_invertible(dim, rng)).relabel(a.label() + "_transported");
  return a;
}

}  // namespace dsign
