#include "dsign/quat.hpp"

#include <cmath>
#include <sstream>

#include "dsign/decorated.hpp"
#include "dsign/error.hpp"

namespace dsign {

namespace {

const Algebra& hamilton() {
  static const Algebra h = classical(Classical::H);
  return h;
}

void require_4x4(const Mat& m, const char* what) {
  if (m.rows() != 4 || m.cols() != 4) throw Error(ErrorKind::BadInput, std::string(what) + " must be 4x4");
}

}  // namespace

Quaternion::Quaternion(const Vec& v) {
  if (v.size() != 4) throw Error(ErrorKind::BadInput, "a quaternion has four coordinates");
  for (int i = 0; i < 4; ++i) q_[i] = v(i);
}

Vec Quaternion::vec() const { return Eigen::Vector4d(q_[0], q_[1], q_[2], q_[3]); }

double Quaternion::norm() const { return std::sqrt(q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3]); }

Quaternion Quaternion::inverse() const {
  const double n2 = q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3];
  if (!(n2 > 0)) throw Error(ErrorKind::ZeroQuaternion, "zero has no inverse");
  return conj() * (1.0 / n2);
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  const auto& p = q_;
  const auto& q = o.q_;
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quaternion Quaternion::representative() const {
  const double n = norm();
  if (!(n > 0)) throw Error(ErrorKind::ZeroQuaternion, "zero has no coset in H*/R*");
  Quaternion r = *this * (1.0 / n);
  for (int i = 0; i < 4; ++i) {
    if (std::abs(r.q_[i]) > 1e-12) {
      if (r.q_[i] < 0) r = -r;
      break;
    }
  }
  return r;
}

Quaternion random_unit_quaternion(Rng& rng) { return Quaternion(rng.unit_vec(4)).representative(); }

Mat quat_left(const Quaternion& q) { return left_mult(hamilton(), q.vec()); }
Mat quat_right(const Quaternion& q) { return right_mult(hamilton(), q.vec()); }

Mat k_map(const Quaternion& s) {
  if (!(s.norm() > 0)) throw Error(ErrorKind::ZeroQuaternion, "K_s needs s != 0");
  const Quaternion u = s * (1.0 / s.norm());
  return quat_left(u) * quat_right(u.conj());
}

const Mat& quaternion_kappa() {
  static const Mat k = [] {
    const Mat id = Mat::Identity(4, 4);
    return kappa(decorate(hamilton(), id.leftCols(1), id.rightCols(3)));
  }();
  return k;
}

ZObject make_zobject(const Quaternion& a, const Quaternion& b, const Mat& c, const Mat& d, double tol) {
  require_4x4(c, "C");
  require_4x4(d, "D");
  if (!is_spd1(c, tol) || !is_spd1(d, tol)) throw Error(ErrorKind::BadInput, "C and D must be SPD of determinant 1");
  return {a.representative(), b.representative(), c, d};
}

ZObject random_zobject(Rng& rng, bool y_object) {
  const Quaternion a = random_unit_quaternion(rng);
  const Quaternion b = random_unit_quaternion(rng);
  if (y_object) return make_zobject(a, b, Mat::Identity(4, 4), Mat::Identity(4, 4));
  const Mat c = random_spd1(4, rng);
  const Mat d = random_spd1(4, rng);
  return make_zobject(a, b, c, d);
}

double zobject_distance(const ZObject& x, const ZObject& y) {
  return std::max({(x.a.vec() - y.a.vec()).norm(), (x.b.vec() - y.b.vec()).norm(), max_abs(x.c - y.c),
                   max_abs(x.d - y.d)});
}

ZObject z_action(const Quaternion& s, const ZObject& x) {
  const Mat k = k_map(s);
  const Mat kt = k.transpose();
  Mat c = k * x.c * kt, d = k * x.d * kt;
  return {Quaternion(Vec(k * x.a.vec())).representative(), Quaternion(Vec(k * x.b.vec())).representative(),
          0.5 * (c + c.transpose()), 0.5 * (d + d.transpose())};
}

std::pair<Mat, Mat> functor_H_operators(Sign alpha, Sign beta, const ZObject& x) {
  const Mat& kap = quaternion_kappa();
  if (alpha == Sign::Plus && beta == Sign::Plus) return {quat_left(x.a) * x.c, quat_right(x.b) * x.d};
  if (alpha == Sign::Plus) return {quat_right(x.a) * x.c * kap, quat_right(x.b) * x.d};
  if (beta == Sign::Plus) return {quat_left(x.a) * x.c, quat_left(x.b) * x.d * kap};
  return {quat_left(x.a) * x.c * kap, quat_right(x.b) * x.d * kap};
}

Algebra functor_H(Sign alpha, Sign beta, const ZObject& x) {
  const auto [sigma, tau] = functor_H_operators(alpha, beta, x);
  return isotope(hamilton(), sigma, tau).relabel(std::string("H") + to_char(alpha) + to_char(beta));
}

Mat functor_H_morphism(const Quaternion& s, const ZObject& x) {
  const Mat k = k_map(s);
  const ZObject y = z_action(s, x);
  const double ea = (k * x.a.vec()).dot(y.a.vec()) < 0 ? -1.0 : 1.0;
  const double eb = (k * x.b.vec()).dot(y.b.vec()) < 0 ? -1.0 : 1.0;
  return ea * eb * k;
}

Isoclinic so4_factor(const Mat& o) {
  require_4x4(o, "so4_factor input");
  const Mat id = Mat::Identity(4, 4);
  if (max_abs(o.transpose() * o - id) > 1e-9 || std::abs(det(o) - 1.0) > 1e-9) {
    throw Error(ErrorKind::NotSpecialOrthogonal, "input is not in SO(4)");
  }
  // The 16 maps x -> e_p x e_q span all 4x4 matrices; in that basis the
  // coordinates of x -> a x b form the rank-one matrix a b^t.
  static const Mat basis = [] {
    Mat g(16, 16);
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        const Mat m = quat_left(Quaternion(basis_vec(4, p))) * quat_right(Quaternion(basis_vec(4, q)));
        g.col(p * 4 + q) = Eigen::Map<const Vec>(m.data(), 16);
      }
    return g;
  }();
  const Vec coords = basis.partialPivLu().solve(Eigen::Map<const Vec>(o.data(), 16));
  Mat assoc(4, 4);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) assoc(p, q) = coords(p * 4 + q);
  Eigen::JacobiSVD<Mat> svd(assoc, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Quaternion a(Vec(svd.matrixU().col(0)));
  Quaternion b(Vec(svd.singularValues()(0) * svd.matrixV().col(0)));
  const Quaternion rep = a.representative();
  if ((rep.vec() - a.vec()).norm() > 1e-9) b = -b;
  a = rep;
  b = b * (1.0 / b.norm());
  const double residual = (quat_left(a) * quat_right(b) - o).norm();
  if (residual > 1e-9) {
    std::ostringstream os;
    os << "isoclinic reconstruction residual " << residual;
    throw Error(ErrorKind::FactorizationFailed, os.str());
  }
  return {a, b, residual};
}

QuatNormalForm quat_normal_form(const Mat& s, const Mat& t, double tol) {
  require_4x4(s, "S");
  require_4x4(t, "T");
  if (!(std::abs(det(s)) > tol) || !(std::abs(det(t)) > tol)) {
    throw Error(ErrorKind::SingularOperator, "S and T must be invertible");
  }
  const Mat& kap = quaternion_kappa();

  // Right polar forms S = O_S P_S, T = O_T P_T; an orientation-reversing O is
  // written W kappa with W in SO(4), and W = (x -> a x b).
  struct Split {
    bool reflect;
    Quaternion a, b;
    Mat spd1;
    double rho;
  };
  auto split = [&](const Mat& m) {
    const Polar lp = polar_decompose(m);
    const Mat& o = lp.orthogonal;
    const Mat p = o.transpose() * lp.spd * o;
    const bool reflect = det(o) < 0;
    const Isoclinic f = so4_factor(reflect ? Mat(o * kap) : o);
    const double rho = std::pow(det(p), 0.25);
    return Split{reflect, f.a, f.b, p / rho, rho};
  };
  const Split ss = split(s), st = split(t);

  QuatNormalForm out;
  out.alpha = st.reflect ? Sign::Minus : Sign::Plus;
  out.beta = ss.reflect ? Sign::Minus : Sign::Plus;

  // The isomorphism is rho_S rho_T (x -> x q): it conjugates the orthogonal
  // parts into the shapes required by the block's row of the functor table.
  const Quaternion &a1 = ss.a, &b1 = ss.b, &a2 = st.a, &b2 = st.b;
  Quaternion q, a, b;
  if (!ss.reflect && !st.reflect) {
    q = b1 * a2;
    a = a1;
    b = q.inverse() * b2 * q;
  } else if (ss.reflect && !st.reflect) {
    q = a1.inverse();
    a = b1 * a2;
    b = q.inverse() * b2 * q;
  } else if (!ss.reflect && st.reflect) {
    q = b2.inverse();
    const Quaternion r = b1.inverse() * q;
    a = a1;
    b = r.inverse() * a2 * q;
  } else {
    const Quaternion r = b1.inverse();
    q = a2.inverse() * r;
    a = a1 * q;
    b = b2 * q;
  }
  q = q * (1.0 / q.norm());
  const Mat psi = quat_right(q);
  const Mat psi_t = psi.transpose();
  Mat c = clean_spd1(psi * ss.spd1 * psi_t);
  Mat d = clean_spd1(psi * st.spd1 * psi_t);
  if (ss.reflect) c = kap * c * kap;
  if (st.reflect) d = kap * d * kap;
  out.x = make_zobject(a, b, c, d, 1e-8);

  const Algebra source = isotope(hamilton(), s, t);
  const Algebra target = functor_H(out.alpha, out.beta, out.x);
  const Mat iso = ss.rho * st.rho * psi;
  const double plus = morphism_residual(iso, source, target);
  const double minus = morphism_residual(-iso, source, target);
  out.iso = plus <= minus ? iso : Mat(-iso);
  out.residual = std::min(plus, minus);
  if (out.residual > 1e-8) {
    std::ostringstream os;
    os << "quaternion normal form residual " << out.residual << " exceeds 1e-8";
    throw Error(ErrorKind::NonConvergence, os.str());
  }
  return out;
}

}  // namespace dsign
