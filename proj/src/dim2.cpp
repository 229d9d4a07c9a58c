#include "dsign/dim2.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "dsign/error.hpp"

namespace dsign {

namespace {

using cplx = std::complex<double>;

// Matrix of z -> c z on C = R^2 with basis (1, i).
Mat complex_mult(cplx c) {
  Mat m(2, 2);
  m << c.real(), -c.imag(), c.imag(), c.real();
  return m;
}

void require_exponent(int e) {
  if (e != 0 && e != 1) throw Error(ErrorKind::BadInput, "normal form exponents must be 0 or 1");
}

void require_dim2(const Algebra& a) {
  if (a.dim() != 2) throw Error(ErrorKind::BadDimension, "expected a 2-dimensional algebra");
}

Mat k_power(int e) { return e ? conjugation_matrix() : Mat(Mat::Identity(2, 2)); }

}  // namespace

SignPair NormalForm2D::block() const {
  return {j ? Sign::Minus : Sign::Plus, i ? Sign::Minus : Sign::Plus};
}

std::string_view to_string(Group2D g) { return g == Group2D::C2 ? "C2" : "D3"; }

Mat conjugation_matrix() {
  Mat k(2, 2);
  k << 1, 0, 0, -1;
  return k;
}

Mat rotation_matrix() {
  const double h = std::sqrt(3.0) / 2.0;
  Mat r(2, 2);
  r << -0.5, -h, h, -0.5;
  return r;
}

std::vector<GroupElement2D> group_elements(Group2D g) {
  const Mat id = Mat::Identity(2, 2), k = conjugation_matrix(), r = rotation_matrix();
  if (g == Group2D::C2) return {{g, "I", id}, {g, "K", k}};
  const Mat r2 = r * r;
  return {{g, "I", id}, {g, "R", r}, {g, "R2", r2}, {g, "K", k}, {g, "RK", r * k}, {g, "R2K", r2 * k}};
}

Group2D group_of_block(int i, int j) { return (i == 1 && j == 1) ? Group2D::D3 : Group2D::C2; }

Algebra build2d(const NormalForm2D& nf, double tol) {
  require_exponent(nf.i);
  require_exponent(nf.j);
  if (!is_spd1(nf.a, tol) || !is_spd1(nf.b, tol)) {
    throw Error(ErrorKind::BadInput, "normal form matrices must be 2x2 SPD with determinant 1");
  }
  const Algebra c = classical(Classical::C);
  std::ostringstream label;
  label << "J" << nf.i << nf.j;
  if (nf.i == 1 && nf.j == 1) {
    const Mat k = conjugation_matrix();
    return isotope(c, k * nf.a, k * nf.b).relabel(label.str());
  }
  return isotope(c, nf.a * k_power(nf.i), nf.b * k_power(nf.j)).relabel(label.str());
}

std::vector<GroupElement2D> groupoid_hom(Group2D g, const SpdPair& x, const SpdPair& y, double tol) {
  std::vector<GroupElement2D> out;
  for (GroupElement2D& e : group_elements(g)) {
    const Mat& f = e.matrix;
    if (max_abs(f * x.a * f.transpose() - y.a) <= tol && max_abs(f * x.b * f.transpose() - y.b) <= tol) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<GroupElement2D> hom2d(const NormalForm2D& src, const NormalForm2D& dst, double tol) {
  if (src.i != dst.i || src.j != dst.j) {
    throw Error(ErrorKind::BlockMismatch, "normal forms lie in different blocks; no morphisms exist");
  }
  auto out = groupoid_hom(group_of_block(src.i, src.j), {src.a, src.b}, {dst.a, dst.b}, tol);
  if (!out.empty()) {
    const Algebra from = build2d(src, 1e-8), to = build2d(dst, 1e-8);
    for (const GroupElement2D& e : out) {
      const double res = morphism_residual(e.matrix, from, to);
      if (res > std::max(tol, 1e-9) * 10) {
        throw Error(ErrorKind::VerificationFailed, "group element " + e.name + " fails the morphism check");
      }
    }
  }
  return out;
}

Unitalized unitalize(const Algebra& a, const Vec& x, double tol) {
  if (!(x.norm() > tol)) throw Error(ErrorKind::BadInput, "unitalize needs a nonzero element");
  const Mat la = left_mult(a, x), ra = right_mult(a, x);
  if (!(std::abs(det(la)) > tol) || !(std::abs(det(ra)) > tol)) {
    throw Error(ErrorKind::SingularOperator, "L_a or R_a is singular; the algebra is not a division algebra");
  }
  Algebra b = isotope(a, ra.inverse(), la.inverse(), tol).relabel(a.label().empty() ? "" : a.label() + "_unital");
  Vec unity = a.mul(x, x);
  const int n = a.dim();
  const Mat id = Mat::Identity(n, n);
  const double res = std::max(max_abs(left_mult(b, unity) - id), max_abs(right_mult(b, unity) - id));
  if (res > 1e-8) throw Error(ErrorKind::VerificationFailed, "a a is not a unity of the unitalized isotope");
  return {std::move(b), std::move(unity)};
}

Mat iso_to_C(const Algebra& b, const Vec& u, double tol) {
  require_dim2(b);
  Vec w(2);
  w << -u(1), u(0);
  Mat basis(2, 2);
  basis << u, w;
  // w o w = p u + q w; completing the square gives v o v = -lambda u.
  const Vec pq = basis.partialPivLu().solve(b.mul(w, w));
  Vec v = w - 0.5 * pq(1) * u;
  const double lambda = -(pq(0) + 0.25 * pq(1) * pq(1));
  if (!(lambda > tol)) {
    throw Error(ErrorKind::NoImaginaryUnit, "no element squares to a negative multiple of the unity");
  }
  v /= std::sqrt(lambda);
  if (v(1) < 0 || (std::abs(v(1)) <= 1e-12 && v(0) < 0)) v = -v;
  Mat uv(2, 2);
  uv << u, v;
  const Mat f = uv.inverse();
  if (morphism_residual(f, b, classical(Classical::C)) > 1e-8) {
    throw Error(ErrorKind::VerificationFailed, "iso_to_C produced a non-morphism");
  }
  return f;
}

Classified2D normal_form_2d(const Algebra& a, double tol) {
  require_dim2(a);
  if (is_division(a, DivisionMode::Exact2d, 0, tol).verdict != DivisionVerdict::Division) {
    throw Error(ErrorKind::NotDivision, "input is not a 2-dimensional division algebra");
  }
  const Vec x = basis_vec(2, 0);
  const Unitalized un = unitalize(a, x, tol);
  const Mat phi = iso_to_C(un.alg, un.unity, tol);
  const Mat phi_inv = phi.inverse();
  // phi : A -> C_{sigma, tau}.
  const Mat sigma = phi * right_mult(a, x) * phi_inv;
  const Mat tau = phi * left_mult(a, x) * phi_inv;

  NormalForm2D nf;
  nf.i = det(sigma) < 0 ? 1 : 0;
  nf.j = det(tau) < 0 ? 1 : 0;
  const Mat ki = k_power(nf.i), kj = k_power(nf.j);

  // sigma = rho_s P_s Rot(u_s) K^i with P_s SPD of determinant one, likewise tau.
  const Polar ps = polar_decompose(sigma), pt = polar_decompose(tau);
  const double rho_s = std::sqrt(det(ps.spd)), rho_t = std::sqrt(det(pt.spd));
  const Mat rot_s = ps.orthogonal * ki, rot_t = pt.orthogonal * kj;
  const double arg_s = std::atan2(rot_s(1, 0), rot_s(0, 0));
  const double arg_t = std::atan2(rot_t(1, 0), rot_t(0, 0));

  // psi = L_c maps C_{sigma,tau} onto C_{L_c1 sigma L_c^-1, L_c2 tau L_c^-1}
  // whenever c1 c2 = c. Choosing arguments so both rotations cancel needs
  // (eps_i + eps_j - 1) theta = arg_s + arg_t with eps = +1 (no K) or -1 (K).
  const int eps_i = nf.i ? -1 : 1, eps_j = nf.j ? -1 : 1;
  const int mult = eps_i + eps_j - 1;
  const double theta = (arg_s + arg_t) / mult;
  const cplx c = std::polar(rho_s * rho_t, theta);
  const cplx c1 = std::polar(rho_t, eps_i * theta - arg_s);
  const cplx c2 = std::polar(rho_s, eps_j * theta - arg_t);
  const Mat lc_inv = complex_mult(1.0 / c);
  const Mat sigma2 = complex_mult(c1) * sigma * lc_inv;
  const Mat tau2 = complex_mult(c2) * tau * lc_inv;

  nf.a = clean_spd1(sigma2 * ki);
  nf.b = clean_spd1(tau2 * kj);
  if (nf.i == 1 && nf.j == 1) {
    // A K = K (K A K).
    const Mat k = conjugation_matrix();
    nf.a = clean_spd1(k * nf.a * k);
    nf.b = clean_spd1(k * nf.b * k);
  }

  Mat iso = complex_mult(c) * phi;
  const double residual = morphism_residual(iso, a, build2d(nf, 1e-8));
  if (residual > 1e-8) {
    std::ostringstream os;
    os << "normal form isomorphism residual " << residual << " exceeds 1e-8";
    throw Error(ErrorKind::NonConvergence, os.str());
  }
  return {std::move(nf), std::move(iso), residual};
}

}  // namespace dsign
