#include "dsign/equadratic.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <map>
#include <sstream>

#include "dsign/error.hpp"

namespace dsign {

namespace {

double idempotent_residual(const Algebra& a, const Vec& z) { return (a.mul(z, z) - z).norm(); }

double tensor_scale(const Algebra& a) {
  double m = 0.0;
  for (double v : a.structure()) m = std::max(m, std::abs(v));
  return m;
}

// Orthonormal basis of the column span of x.
Mat orthonormal_span(const Mat& x) {
  Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeThinU);
  const Vec& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > 1e-12 * std::max(1.0, s(0))) ++rank;
  return svd.matrixU().leftCols(rank);
}

// Real roots of c0 + c1 s + c2 s^2 + c3 s^3, ignoring vanishing leading terms.
std::vector<double> real_roots(std::array<double, 4> c) {
  const double big = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
  int deg = 3;
  while (deg > 0 && std::abs(c[deg]) <= 1e-12 * big) --deg;
  std::vector<double> roots;
  if (deg == 0) return roots;
  Mat companion = Mat::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  const Eigen::VectorXcd ev = Eigen::EigenSolver<Mat>(companion, false).eigenvalues();
  for (int i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i).imag()) <= 1e-7 * (1.0 + std::abs(ev(i).real()))) roots.push_back(ev(i).real());
  return roots;
}

// Newton refinement of z o z = z for z = basis * coords.
Vec polish_idempotent(const Algebra& a, const Mat& basis, Vec coords) {
  const int d = static_cast<int>(basis.cols());
  for (int it = 0; it < 8; ++it) {
    const Vec z = basis * coords;
    const Vec f = basis.transpose() * (a.mul(z, z) - z);
    if (f.norm() <= 1e-15 * std::max(1.0, z.norm())) break;
    Mat jac(d, d);
    for (int c = 0; c < d; ++c) {
      const Vec bc = basis.col(c);
      jac.col(c) = basis.transpose() * (a.mul(bc, z) + a.mul(z, bc)) - Vec::Unit(d, c);
    }
    const Vec step = jac.fullPivLu().solve(f);
    if (!step.allFinite()) break;
    coords -= step;
  }
  return basis * coords;
}

Mat hyperplane_basis(const Vec& f) {
  const int n = static_cast<int>(f.size());
  int p = 0;
  f.cwiseAbs().maxCoeff(&p);
  Mat k(n, n - 1);
  int col = 0;
  for (int q = 0; q < n; ++q) {
    if (q == p) continue;
    Vec v = Vec::Unit(n, q);
    v(p) = -f(q) / f(p);
    k.col(col++) = v;
  }
  return k;
}

Mat gram_schmidt_complement(const Vec& e) {
  const int n = static_cast<int>(e.size());
  int p = 0;
  e.cwiseAbs().maxCoeff(&p);
  Mat k(n, n - 1);
  int col = 0;
  for (int q = 0; q < n; ++q) {
    if (q == p) continue;
    k.col(col++) = Vec::Unit(n, q) - (e(q) / e.squaredNorm()) * e;
  }
  return k;
}

}  // namespace

std::vector<Vec> central_idempotents(const Algebra& a, double tol) {
  const Mat z = center(a, tol);
  const int d = static_cast<int>(z.cols());
  if (d > 2) throw Error(ErrorKind::CenterTooLarge, "centre has dimension " + std::to_string(d));
  std::vector<Vec> out;
  if (d == 0) return out;

  // Directions w in the centre with w o w parallel to w; each yields z = w / lambda.
  std::vector<Vec> directions;
  if (d == 1) {
    directions.push_back(z.col(0));
  } else {
    Vec g[2][2];
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) g[p][q] = z.transpose() * a.mul(z.col(p), z.col(q));
    // det[coords(w o w), w] for w = (1, s) expands to c0 + c1 s + c2 s^2 + c3 s^3.
    const std::array<double, 4> c{-g[0][0](1), g[0][0](0) - g[0][1](1) - g[1][0](1),
                                  g[0][1](0) + g[1][0](0) - g[1][1](1), g[1][1](0)};
    const double big = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
    if (big <= tol * std::max(1.0, tensor_scale(a))) {
      throw Error(ErrorKind::DegenerateCenter, "every central direction squares into itself");
    }
    if (std::abs(c[3]) <= 1e-12 * big) directions.push_back(z.col(1));
    for (double s : real_roots(c)) directions.push_back(z.col(0) + s * z.col(1));
  }

  for (const Vec& w : directions) {
    const Vec ww = a.mul(w, w);
    const double lambda = w.dot(ww) / w.squaredNorm();
    if (!(std::abs(lambda) > tol)) continue;
    const Vec coords = z.transpose() * (w / lambda);
    const Vec e = polish_idempotent(a, z, coords);
    if (idempotent_residual(a, e) > tol * std::max(1.0, e.squaredNorm())) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Vec& f) {
      return (f - e).norm() <= 1e-8 * std::max(1.0, e.norm());
    });
    if (!seen) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const Vec& x, const Vec& y) {
    return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size(),
                                        [](double u, double v) { return u > v + 1e-12; });
  });
  return out;
}

bool is_e_quadratic(const Algebra& a, const Vec& e, double tol) {
  const int n = a.dim();
  if (e.size() != n) throw Error(ErrorKind::BadInput, "idempotent has the wrong length");
  if (idempotent_residual(a, e) > tol * std::max(1.0, e.squaredNorm())) {
    throw Error(ErrorKind::NotIdempotent, "e o e differs from e");
  }
  if (n < 3) return true;
  const Mat le = left_mult(a, e);
  const double scale = std::max(1.0, e.cwiseAbs().maxCoeff() * max_abs(le) * tensor_scale(a));

  // det of rows (r0, r1, r2) of [e | L_e x | x^2] = sum_{a,b,c} T[a][b][c] x_a x_b x_c.
  std::vector<double> t(static_cast<std::size_t>(n) * n * n);
  constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  constexpr int parity[6] = {1, 1, 1, -1, -1, -1};
  for (int r0 = 0; r0 < n; ++r0)
    for (int r1 = r0 + 1; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2) {
        const int rows[3] = {r0, r1, r2};
        std::fill(t.begin(), t.end(), 0.0);
        for (int s = 0; s < 6; ++s) {
          const int p0 = rows[perms[s][0]], p1 = rows[perms[s][1]], p2 = rows[perms[s][2]];
          const double ep = parity[s] * e(p0);
          if (ep == 0.0) continue;
          for (int i = 0; i < n; ++i) {
            const double w = ep * le(p1, i);
            if (w == 0.0) continue;
            for (int j = 0; j < n; ++j)
              for (int k = 0; k < n; ++k) t[(static_cast<std::size_t>(i) * n + j) * n + k] += w * a.c(j, k, p2);
          }
        }
        // Coefficient of x_i x_j x_k (i <= j <= k) sums T over all orderings.
        std::map<std::array<int, 3>, double> coeff;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
              std::array<int, 3> key{i, j, k};
              std::sort(key.begin(), key.end());
              coeff[key] += t[(static_cast<std::size_t>(i) * n + j) * n + k];
            }
        for (const auto& [key, v] : coeff)
          if (std::abs(v) > tol * scale) return false;
      }
  return true;
}

Mat im_e(const Algebra& a, const Vec& e, double tol) {
  const int n = a.dim();
  if (n < 2) throw Error(ErrorKind::BadDimension, "Im_e needs dimension at least two");
  if (e.size() != n) throw Error(ErrorKind::BadInput, "idempotent has the wrong length");

  // Components of the projection of x^2 onto the orthogonal complement of e.
  const Mat q = Eigen::HouseholderQR<Mat>(Mat(e)).householderQ();
  const Mat comp = q.rightCols(n - 1);
  std::vector<Mat> forms;
  double biggest = 0.0;
  int pick = 0;
  for (int k = 0; k < n - 1; ++k) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int r = 0; r < n; ++r) s += comp(r, k) * (a.c(i, j, r) + a.c(j, i, r));
        m(i, j) = 0.5 * s;
      }
    const double norm = m.norm();
    if (norm > biggest) {
      biggest = norm;
      pick = k;
    }
    forms.push_back(std::move(m));
  }
  if (biggest <= tol * std::max(1.0, tensor_scale(a))) return gram_schmidt_complement(e);

  Eigen::SelfAdjointEigenSolver<Mat> eig(forms[pick]);
  const Vec& lam = eig.eigenvalues();
  const double lmax = lam.cwiseAbs().maxCoeff();
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (std::abs(lam(i)) > 1e-8 * lmax) kept.push_back(i);

  std::vector<Vec> candidates;
  if (kept.size() == 1) {
    candidates.push_back(eig.eigenvectors().col(kept[0]));
  } else if (kept.size() == 2 && lam(kept[0]) * lam(kept[1]) < 0) {
    const int neg = lam(kept[0]) < 0 ? kept[0] : kept[1];
    const int pos = lam(kept[0]) < 0 ? kept[1] : kept[0];
    const Vec up = std::sqrt(lam(pos)) * eig.eigenvectors().col(pos);
    const Vec un = std::sqrt(-lam(neg)) * eig.eigenvectors().col(neg);
    candidates.push_back(up + un);
    candidates.push_back(up - un);
  } else {
    std::ostringstream os;
    os << "quadratic form of rank " << kept.size() << " does not split into real linear factors";
    throw Error(ErrorKind::NoHyperplane, os.str());
  }

  for (const Vec& f : candidates) {
    if (std::abs(f.dot(e)) <= 1e-8 * f.norm() * e.norm()) continue;
    const Mat k = hyperplane_basis(f);
    const double scale = std::max(1.0, biggest * k.squaredNorm());
    bool ok = true;
    for (const Mat& m : forms)
      if (max_abs(k.transpose() * m * k) > tol * scale) {
        ok = false;
        break;
      }
    if (ok) return k;
  }
  throw Error(ErrorKind::NoHyperplane, "no factor's kernel annihilates every component of x^2 mod R e");
}

EQuadStructure equadratic_structure(const Algebra& a, double tol) {
  if (a.dim() != 4 && a.dim() != 8) throw Error(ErrorKind::BadDimension, "functor G is defined for dimensions 4 and 8");
  std::vector<Vec> qualifying;
  for (Vec& e : central_idempotents(a, tol))
    if (is_e_quadratic(a, e, tol)) qualifying.push_back(std::move(e));
  if (qualifying.empty()) throw Error(ErrorKind::NotEQuadratic, "no central idempotent e with x^2 in span{e, ex}");
  if (qualifying.size() > 1) {
    throw Error(ErrorKind::NonUniqueIdempotent, std::to_string(qualifying.size()) + " qualifying idempotents");
  }
  EQuadStructure s{qualifying.front(), im_e(a, qualifying.front(), tol)};
  Mat split(a.dim(), a.dim());
  split << s.e, s.im_basis;
  if (std::abs(det(split)) <= tol) throw Error(ErrorKind::NoHyperplane, "R e and Im_e(A) are not supplementary");
  return s;
}

DecoratedAlgebra functor_G(const Algebra& a, double tol) {
  EQuadStructure s = equadratic_structure(a, tol);
  return decorate(a, Mat(s.e), std::move(s.im_basis), tol);
}

double subspace_distance(const Mat& x, const Mat& y) {
  const Mat qx = orthonormal_span(x), qy = orthonormal_span(y);
  if (qx.cols() != qy.cols()) return std::numeric_limits<double>::infinity();
  const double a = (qx - qy * (qy.transpose() * qx)).norm();
  const double b = (qy - qx * (qx.transpose() * qy)).norm();
  return std::max(a, b);
}

}  // namespace dsign
