#include "dsign/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "dsign/decorated.hpp"
#include "dsign/dim2.hpp"
#include "dsign/equadratic.hpp"
#include "dsign/error.hpp"
#include "dsign/generators.hpp"
#include "dsign/io.hpp"
#include "dsign/quat.hpp"

namespace dsign {
namespace {

struct CheckSpec {
  const char* module;
  const char* name;
  const char* anchor;
  std::function<void(CheckResult&, Rng&, const VerifyOptions&)> body;
};

void fail_if(CheckResult& r, bool bad, const std::string& why) {
  if (bad && r.pass) {
    r.pass = false;
    r.detail = why;
  }
}

int dims[] = {2, 4, 8};

SignOptions sign_opts(const VerifyOptions& o, std::uint64_t seed) {
  return {o.samples, o.tol, seed};
}

// ---- matkit ----------------------------------------------------------------

void sign_det_multiplicative(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int n : dims)
    for (int k = 0; k < std::max(1, o.samples / 10); ++k) {
      const Mat m = random_invertible(n, rng), p = random_invertible(n, rng);
      fail_if(r, sign_det(m * p, o.tol) != sign_det(m, o.tol) * sign_det(p, o.tol), "sign mismatch");
      ++r.samples;
    }
}

void polar_round_trip(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int n : dims)
    for (int k = 0; k < o.samples; ++k) {
      const Mat m = random_invertible(n, rng);
      const Polar p = polar_decompose(m);
      const double err = (p.spd * p.orthogonal - m).norm() / m.norm();
      const double orth = (p.orthogonal * p.orthogonal.transpose() - Mat::Identity(n, n)).norm();
      r.residual = std::max({r.residual, err, orth});
      ++r.samples;
    }
  fail_if(r, r.residual > 1e-10, "reconstruction above 1e-10");
}

void gram_preserves_spd(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int n : dims)
    for (int k = 0; k < std::max(1, o.samples / 10); ++k) {
      const Mat f = random_invertible(n, rng);
      const Mat g = f * random_spd1(n, rng) * f.transpose();
      const double asym = (g - g.transpose()).norm() / g.norm();
      const double lo = Eigen::SelfAdjointEigenSolver<Mat>(g).eigenvalues().minCoeff();
      r.residual = std::max(r.residual, asym);
      fail_if(r, lo <= 0.0, "non-positive eigenvalue");
      ++r.samples;
    }
  fail_if(r, r.residual > 1e-12, "asymmetric Gram matrix");
}

// ---- algebra-core ----------------------------------------------------------

void sign_constancy(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int n : dims)
    for (int k = 0; k < 6; ++k) {
      const Algebra a = random_division_algebra(n, rng);
      sign_pair(a, sign_opts(o, o.seed + static_cast<std::uint64_t>(r.samples)));
      ++r.samples;
    }
}

void isomorphism_invariance(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int n : dims)
    for (int k = 0; k < 2; ++k) {
      const Algebra a = random_division_algebra(n, rng);
      const SignPair p = sign_pair(a, {100, o.tol, o.seed});
      for (int t = 0; t < std::max(1, o.samples / 10); ++t) {
        const Algebra b = transport(a, random_invertible(n, rng));
        fail_if(r, !(sign_pair(b, {20, o.tol, o.seed}) == p), "transport changed sign pair");
        ++r.samples;
      }
    }
}

void isotope_sign_law(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int k = 0; k < std::max(1, o.samples / 2); ++k) {
    const int n = dims[rng.index(3)];
    const Algebra a = random_division_algebra(n, rng);
    const Mat s = random_invertible(n, rng), t = random_invertible(n, rng);
    const SignPair p = sign_pair(a, {20, o.tol, o.seed});
    const SignPair want{p.ell * sign_det(t, o.tol), p.r * sign_det(s, o.tol)};
    fail_if(r, !(sign_pair(isotope(a, s, t), {20, o.tol, o.seed}) == want), "law violated");
    ++r.samples;
  }
}

void isotope_operator_identities(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (int k = 0; k < 50; ++k) {
    const int n = dims[k % 3];
    const Algebra a = random_division_algebra(n, rng);
    const Mat s = random_invertible(n, rng), t = random_invertible(n, rng);
    const Algebra b = isotope(a, s, t);
    const Vec x = rng.uniform_vec(n);
    const Mat l = left_mult(a, s * x) * t, rm = right_mult(a, t * x) * s;
    r.residual = std::max(r.residual, (left_mult(b, x) - l).cwiseAbs().maxCoeff() / std::max(1.0, max_abs(l)));
    r.residual = std::max(r.residual, (right_mult(b, x) - rm).cwiseAbs().maxCoeff() / std::max(1.0, max_abs(rm)));
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-12, "operator identity above 1e-12");
}

void opposition_involution(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int k = 0; k < 30; ++k) {
    const Algebra a = random_division_algebra(dims[k % 3], rng);
    r.residual = std::max(r.residual, tensor_distance(opposite(opposite(a)), a));
    const SignPair p = sign_pair(a, {50, o.tol, o.seed});
    const SignPair q = sign_pair(opposite(a), {50, o.tol, o.seed});
    fail_if(r, !(q.ell == p.r && q.r == p.ell), "opposite did not swap block");
    ++r.samples;
  }
  fail_if(r, r.residual != 0.0, "opposite is not an exact involution");
}

void unital_blocks(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (Classical c : {Classical::C, Classical::H, Classical::O}) {
    const Algebra a = classical(c);
    fail_if(r, !find_unities(a, o.tol).two_sided, "classical algebra without unity");
    fail_if(r, block_of(a, {100, o.tol, o.seed}) != "++", "classical algebra off ++");
    ++r.samples;
  }
  for (int k = 0; k < 30; ++k) {
    const int n = dims[k % 3];
    const Algebra base = random_division_algebra(n, rng);
    // Unity e with S e (resp. T e) a unit vector keeps both isotopes well scaled.
    const Vec u = rng.unit_vec(n);
    const Mat s = random_invertible(n, rng, 0.2), t = random_invertible(n, rng, 0.2);
    const Algebra left = isotope(base, s, left_mult(base, u).inverse());
    const Algebra right = isotope(base, right_mult(base, u).inverse(), t);
    const Unities ul = find_unities(left, 1e-8), ur = find_unities(right, 1e-8);
    fail_if(r, !ul.left || !ur.right, "constructed unity not detected");
    fail_if(r, sign_pair(left, {50, o.tol, o.seed}).ell != Sign::Plus, "left unity with l = -1");
    fail_if(r, sign_pair(right, {50, o.tol, o.seed}).r != Sign::Plus, "right unity with r = -1");
    r.samples += 2;
  }
}

void morphisms_injective(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  auto record = [&](const Mat& f, const Algebra& a, const Algebra& b) {
    if (is_morphism(f, a, b, 1e-8)) fail_if(r, std::abs(det(f)) <= o.tol, "singular morphism");
    ++r.samples;
  };
  for (int k = 0; k < 30; ++k) {
    const int n = dims[k % 3];
    const Algebra a = random_division_algebra(n, rng);
    const Mat f = random_invertible(n, rng);
    record(f, a, transport(a, f));
  }
  const NormalForm2D kk{1, 1, Mat::Identity(2, 2), Mat::Identity(2, 2)};
  const Algebra c = build2d(kk);
  for (const auto& g : hom2d(kk, kk)) record(g.matrix, c, c);
  const Algebra h = classical(Classical::H);
  for (int k = 0; k < 10; ++k) record(k_map(random_unit_quaternion(rng)), h, h);
}

// ---- decorated -------------------------------------------------------------

DecoratedAlgebra random_decorated(Rng& rng) {
  const int n = rng.index(2) == 0 ? 4 : 8;
  const Algebra a = random_classical_isotope(n, rng);
  const int m = 2 * rng.index(n / 2) + 1;
  return random_decoration(a, m, rng);
}

void klein_four(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (int k = 0; k < 20; ++k) {
    const DecoratedAlgebra x = random_decorated(rng);
    const Algebra i11 = functor_I(1, 1, x).alg();
    r.residual = std::max(r.residual, tensor_distance(functor_I(1, 0, functor_I(0, 1, x)).alg(), i11));
    r.residual = std::max(r.residual, tensor_distance(functor_I(0, 1, functor_I(1, 0, x)).alg(), i11));
    for (auto [i, j] : {std::pair{1, 0}, {0, 1}, {1, 1}})
      r.residual = std::max(r.residual, tensor_distance(functor_I(i, j, functor_I(i, j, x)).alg(), x.alg()));
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-12, "composition table off by more than 1e-12");
}

void block_shift(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int k = 0; k < 20; ++k) {
    const DecoratedAlgebra x = random_decorated(rng);
    const SignPair p = sign_pair(x.alg(), {50, o.tol, o.seed});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const SignPair want{j ? -p.ell : p.ell, i ? -p.r : p.r};
        fail_if(r, !(sign_pair(functor_I(i, j, x).alg(), {50, o.tol, o.seed}) == want), "block shift violated");
        ++r.samples;
      }
  }
}

void kappa_commutation(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (int k = 0; k < 20; ++k) {
    const DecoratedAlgebra x = random_decorated(rng);
    const Mat f = random_invertible(x.n(), rng);
    const Mat kx = kappa(transport(x, f));
    r.residual = std::max(r.residual, max_abs(f * kappa(x) - kx * f) / std::max(1.0, max_abs(kx)));
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-10, "kappa commutation above 1e-10");
}

void morphism_preservation(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (int k = 0; k < 10; ++k) {
    const DecoratedAlgebra x = random_decorated(rng);
    const Mat f = random_invertible(x.n(), rng);
    const DecoratedAlgebra y = transport(x, f);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        r.residual = std::max(r.residual, morphism_residual(f, functor_I(i, j, x).alg(), functor_I(i, j, y).alg()));
        ++r.samples;
      }
  }
  fail_if(r, r.residual > 1e-9, "transported map stopped being a morphism");
}

// ---- equadratic ------------------------------------------------------------

std::vector<Algebra> equad_corpus(Rng& rng, int extra) {
  const Algebra h = classical(Classical::H), oct = classical(Classical::O);
  const Mat kh = kappa(decorate(h, basis_vec(4, 0), Mat::Identity(4, 4).rightCols(3)));
  const Mat ko = kappa(decorate(oct, basis_vec(8, 0), Mat::Identity(8, 8).rightCols(7)));
  std::vector<Algebra> out{h, oct};
  for (int k = 0; k < extra; ++k) {
    const double c = rng.uniform(0.5, 2.0);
    Algebra a = h;
    if (k % 2 == 0) {
      Mat s = c * k_map(random_unit_quaternion(rng));
      if (rng.index(2)) s = s * kh;
      a = isotope(h, s, s);
    } else {
      const Mat s = rng.index(2) ? Mat(c * ko) : Mat(c * Mat::Identity(8, 8));
      a = isotope(oct, s, s);
    }
    if (k % 4 >= 2) a = transport(a, random_invertible(a.dim(), rng, 0.2));
    out.push_back(a);
  }
  return out;
}

void equad_decomposition(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (const Algebra& a : equad_corpus(rng, 10)) {
    const EQuadStructure s = equadratic_structure(a, o.tol);
    Mat b(a.dim(), a.dim());
    b << s.e, s.im_basis;
    const Eigen::JacobiSVD<Mat> svd(b);
    const double ratio = svd.singularValues().minCoeff() / svd.singularValues().maxCoeff();
    fail_if(r, ratio < 1e-8, "[e | Im_e] singular");
    ++r.samples;
  }
}

void equad_uniqueness(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (const Algebra& a : equad_corpus(rng, 10)) {
    int count = 0;
    for (const Vec& e : central_idempotents(a, o.tol))
      if (is_e_quadratic(a, e, 1e-8)) {
        ++count;
        r.residual = std::max(r.residual, (a.mul(e, e) - e).norm());
      }
    fail_if(r, count != 1, "expected exactly one qualifying idempotent");
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-9, "idempotent residual above 1e-9");
}

void equad_functor_compat(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (const Algebra& a : equad_corpus(rng, 10)) {
    const DecoratedAlgebra g = functor_G(a, o.tol);
    const DecoratedAlgebra lhs = functor_I(1, 1, g);
    const Mat k = kappa(g);
    const DecoratedAlgebra rhs = functor_G(isotope(a, k, k), o.tol);
    r.residual = std::max(r.residual, tensor_distance(lhs.alg(), rhs.alg()));
    r.residual = std::max(r.residual, subspace_distance(lhs.u(), rhs.u()));
    r.residual = std::max(r.residual, subspace_distance(lhs.v(), rhs.v()));
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-9, "I11 G differs from G of the kappa isotope");
}

void equad_block_structure(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (const Algebra& a : equad_corpus(rng, 10)) {
    const std::string b = block_of(a, {50, o.tol, o.seed});
    fail_if(r, b != "++" && b != "--", "mixed block " + b);
    const Mat k = kappa(functor_G(a, o.tol));
    const std::string bk = block_of(isotope(a, k, k), {50, o.tol, o.seed});
    fail_if(r, bk != (b == "++" ? "--" : "++"), "kappa isotope did not swap block");
    ++r.samples;
  }
}

// ---- dim2 ------------------------------------------------------------------

std::vector<std::string> names(const std::vector<GroupElement2D>& v) {
  std::vector<std::string> out;
  for (const auto& g : v) out.push_back(g.name);
  std::sort(out.begin(), out.end());
  return out;
}

SpdPair act(const Mat& g, const SpdPair& x) {
  return {clean_spd1(g * x.a * g.transpose()), clean_spd1(g * x.b * g.transpose())};
}

SpdPair random_pair(Rng& rng) { return {random_spd1(2, rng), random_spd1(2, rng)}; }

// Target pair: half the time an image of x under the block's group.
SpdPair related_pair(Rng& rng, Group2D grp, const SpdPair& x) {
  if (rng.index(2)) return random_pair(rng);
  const auto els = group_elements(grp);
  return act(els[static_cast<std::size_t>(rng.index(static_cast<int>(els.size())))].matrix, x);
}

NormalForm2D nf_of(int i, int j, const SpdPair& p) { return {i, j, p.a, p.b}; }

void functor_fidelity(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Group2D grp = group_of_block(i, j);
      for (int k = 0; k < 5; ++k) {
        const SpdPair x = random_pair(rng), y = related_pair(rng, grp, x);
        const auto homs = hom2d(nf_of(i, j, x), nf_of(i, j, y), 1e-8);
        fail_if(r, names(homs) != names(groupoid_hom(grp, x, y, 1e-8)), "hom2d differs from groupoid");
        const Algebra src = build2d(nf_of(i, j, x)), dst = build2d(nf_of(i, j, y));
        for (const auto& g : homs) r.residual = std::max(r.residual, morphism_residual(g.matrix, src, dst));
        ++r.samples;
      }
    }
  fail_if(r, r.residual > 1e-8, "listed element is not a morphism");
}

void block_equivalence_2d(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (int k = 0; k < 10; ++k) {
    const SpdPair x = random_pair(rng), y = related_pair(rng, Group2D::C2, x);
    const auto ref = names(hom2d(nf_of(0, 0, x), nf_of(0, 0, y), 1e-8));
    fail_if(r, names(hom2d(nf_of(0, 1, x), nf_of(0, 1, y), 1e-8)) != ref, "(0,1) hom-set differs");
    fail_if(r, names(hom2d(nf_of(1, 0, x), nf_of(1, 0, y), 1e-8)) != ref, "(1,0) hom-set differs");
    ++r.samples;
  }
}

void separation(CheckResult& r, Rng& rng, const VerifyOptions&) {
  const NormalForm2D kk{1, 1, Mat::Identity(2, 2), Mat::Identity(2, 2)};
  const auto aut = hom2d(kk, kk);
  fail_if(r, aut.size() != 6, "|Aut| at (1,1,I,I) is not 6");
  std::size_t worst = 0;
  for (int k = 0; k < 20; ++k) {
    const int b = rng.index(3);
    const NormalForm2D nf = nf_of(b == 2, b == 1, random_pair(rng));
    worst = std::max(worst, hom2d(nf, nf, 1e-8).size());
    ++r.samples;
  }
  fail_if(r, worst > 2, "C2 block object with more than 2 automorphisms");
  r.residual = static_cast<double>(worst);
  r.detail = "max sampled C2 order " + std::to_string(worst) + ", (1,1,I,I) order " + std::to_string(aut.size());
}

void normal_form_round_trip(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int k = 0; k < 30; ++k) {
    const NormalForm2D nf = nf_of(rng.index(2), rng.index(2), random_pair(rng));
    const Algebra a = transport(build2d(nf), random_invertible(2, rng, 0.2));
    const Classified2D c = normal_form_2d(a, o.tol);
    fail_if(r, c.nf.i != nf.i || c.nf.j != nf.j, "block changed");
    if (c.nf.i == nf.i && c.nf.j == nf.j) fail_if(r, hom2d(c.nf, nf, 1e-7).empty(), "orbit not recovered");
    r.residual = std::max(r.residual, c.residual);
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-8, "isomorphism residual above 1e-8");
}

void density(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int k = 0; k < 30; ++k) {
    const Algebra a = random_2d_division(rng);
    const Classified2D c = normal_form_2d(a, o.tol);
    fail_if(r, !(c.nf.block() == sign_pair(a, {50, o.tol, o.seed})), "block mismatch");
    r.residual = std::max(r.residual, c.residual);
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-8, "isomorphism residual above 1e-8");
}

// ---- quat ------------------------------------------------------------------

const std::pair<Sign, Sign> kBlocks[] = {
    {Sign::Plus, Sign::Plus}, {Sign::Plus, Sign::Minus}, {Sign::Minus, Sign::Plus}, {Sign::Minus, Sign::Minus}};

void functor_h_blocks(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (auto [al, be] : kBlocks)
    for (int k = 0; k < 10; ++k) {
      const SignPair p = sign_pair(functor_H(al, be, random_zobject(rng)), {50, o.tol, o.seed});
      fail_if(r, p.ell != al || p.r != be, "wrong block");
      ++r.samples;
    }
}

void functor_h_functoriality(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (auto [al, be] : kBlocks)
    for (int k = 0; k < 10; ++k) {
      const ZObject x = random_zobject(rng);
      const Quaternion s = random_unit_quaternion(rng) * rng.uniform(0.5, 2.0);
      r.residual = std::max(r.residual, morphism_residual(functor_H_morphism(s, x), functor_H(al, be, x),
                                                          functor_H(al, be, z_action(s, x))));
      ++r.samples;
    }
  fail_if(r, r.residual > 1e-8, "K_s residual above 1e-8");
}

bool same_quat(const Quaternion& p, const Quaternion& q, double tol) { return (p.vec() - q.vec()).norm() <= tol; }

void k_map_faithfulness(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int k = 0; k < o.samples; ++k) {
    const Quaternion s = random_unit_quaternion(rng) * rng.uniform(0.5, 2.0);
    const Quaternion t = k % 2 ? random_unit_quaternion(rng) : s * (rng.index(2) ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
    const bool equal_maps = max_abs(k_map(s) - k_map(t)) <= 1e-12;
    const bool equal_reps = same_quat(s.representative(), t.representative(), 1e-9);
    fail_if(r, equal_maps != equal_reps, "k_map identifies distinct classes");
    ++r.samples;
  }
}

void so4_reconstruction(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int k = 0; k < std::max(1, o.samples / 10); ++k) {
    const Mat m = quat_left(random_unit_quaternion(rng)) * quat_right(random_unit_quaternion(rng));
    const Isoclinic f = so4_factor(m);
    r.residual = std::max(r.residual, (quat_left(f.a) * quat_right(f.b) - m).norm());
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-10, "reconstruction above 1e-10");
}

void quat_round_trip(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  for (int k = 0; k < 30; ++k) {
    const Mat s = random_invertible(4, rng), t = random_invertible(4, rng);
    const QuatNormalForm q = quat_normal_form(s, t, o.tol);
    r.residual = std::max(r.residual, q.residual);
    const SignPair p = sign_pair(isotope(classical(Classical::H), s, t), {50, o.tol, o.seed});
    fail_if(r, p.ell != q.alpha || p.r != q.beta, "normal form in wrong block");
    ++r.samples;
  }
  fail_if(r, r.residual > 1e-8, "round trip residual above 1e-8");
}

void absolute_valued(CheckResult& r, Rng& rng, const VerifyOptions& o) {
  double witness = 0.0;
  for (auto [al, be] : kBlocks) {
    const Algebra y = functor_H(al, be, random_zobject(rng, true));
    const Algebra g = functor_H(al, be, random_zobject(rng, false));
    for (int k = 0; k < std::max(1, o.samples / 4); ++k) {
      const Vec a = rng.uniform_vec(4), b = rng.uniform_vec(4);
      const double nn = a.norm() * b.norm();
      r.residual = std::max(r.residual, std::abs(y.mul(a, b).norm() - nn) / nn);
      witness = std::max(witness, std::abs(g.mul(a, b).norm() - nn) / nn);
      ++r.samples;
    }
  }
  fail_if(r, r.residual > 1e-10, "Y-object algebra not absolute valued");
  fail_if(r, witness < 1e-3, "no violation found for C != I");
}

void block_equivalence_quat(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (int k = 0; k < 10; ++k) {
    const Quaternion q = random_unit_quaternion(rng);
    const bool structured = k % 2 == 0;
    const ZObject x = structured ? make_zobject(q, q, Mat::Identity(4, 4), Mat::Identity(4, 4)) : random_zobject(rng);
    const Vec im = (Vec(4) << 0, q[1], q[2], q[3]).finished().normalized();
    const double th = rng.uniform(0.1, 3.0);
    const Quaternion commuting(Vec(std::cos(th) * basis_vec(4, 0) + std::sin(th) * im));
    for (const Quaternion& s : {commuting, random_unit_quaternion(rng)}) {
      const bool stabilizes = zobject_distance(z_action(s, x), x) <= 1e-9;
      const Mat ks = functor_H_morphism(s, x);
      for (auto [al, be] : kBlocks) {
        const Algebra h = functor_H(al, be, x);
        fail_if(r, (morphism_residual(ks, h, h) <= 1e-8) != stabilizes, "stabilizer differs across blocks");
      }
      ++r.samples;
    }
  }
}

// ---- cli -------------------------------------------------------------------

void json_round_trip(CheckResult& r, Rng& rng, const VerifyOptions&) {
  for (int k = 0; k < 30; ++k) {
    const Algebra a = random_division_algebra(dims[k % 3], rng);
    const Algebra b = io::algebra_from_json(io::json::parse(io::to_json(a).dump()));
    fail_if(r, a.structure() != b.structure(), "algebra tensor changed");
    const DecoratedAlgebra x = random_decorated(rng);
    const DecoratedAlgebra y = io::decorated_from_json(io::json::parse(io::to_json(x).dump()));
    fail_if(r, x.alg().structure() != y.alg().structure() || x.u() != y.u() || x.v() != y.v(),
            "decorated document changed");
    ++r.samples;
  }
}

const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> s = {
      {"matkit", "sign-det-multiplicative", "sign det is a homomorphism to {+1,-1}", sign_det_multiplicative},
      {"matkit", "polar-round-trip", "M = P O with P SPD and O orthogonal", polar_round_trip},
      {"matkit", "gram-preserves-spd", "F S F^t is SPD for SPD S and invertible F", gram_preserves_spd},
      {"algebra-core", "sign-constancy", "sign of det L_a and det R_a constant on nonzero a", sign_constancy},
      {"algebra-core", "isomorphism-invariance", "isomorphic algebras share the double sign", isomorphism_invariance},
      {"algebra-core", "isotope-sign-law", "p(A_{S,T}) = (alpha s(T), beta s(S))", isotope_sign_law},
      {"algebra-core", "isotope-operator-identities", "L'_a = L_{Sa} T and R'_a = R_{Ta} S", isotope_operator_identities},
      {"algebra-core", "opposition-involution", "opposite is an involution swapping the double sign", opposition_involution},
      {"algebra-core", "unital-blocks", "left unity forces l = +1, right unity forces r = +1", unital_blocks},
      {"algebra-core", "morphisms-injective", "morphisms of division algebras are invertible", morphisms_injective},
      {"decorated", "klein-four-group", "I_ij compose as the Klein four-group", klein_four},
      {"decorated", "block-shift", "I_ij maps block (a,b) to ((-1)^j a, (-1)^i b)", block_shift},
      {"decorated", "kappa-commutation", "F kappa = kappa' F for decorated morphisms", kappa_commutation},
      {"decorated", "morphism-preservation", "morphisms X -> X' stay morphisms I_ij X -> I_ij X'", morphism_preservation},
      {"equadratic", "equad-decomposition", "A = R e + Im_e(A)", equad_decomposition},
      {"equadratic", "equad-uniqueness", "the qualifying central idempotent is unique", equad_uniqueness},
      {"equadratic", "equad-functor-compatibility", "I_11 G = G (kappa,kappa)-isotope", equad_functor_compat},
      {"equadratic", "equad-block-structure", "e-quadratic blocks are ++ or --, swapped by the kappa isotope", equad_block_structure},
      {"dim2", "functor-fidelity", "2-d hom-sets are the groupoid hom-sets", functor_fidelity},
      {"dim2", "block-equivalence-2d", "blocks ++, +-, -+ carry identical hom-sets", block_equivalence_2d},
      {"dim2", "separation", "|Aut| is 6 at (1,1,I,I) and at most 2 in C2 blocks", separation},
      {"dim2", "normal-form-round-trip", "normal form recovers the orbit of a transported object", normal_form_round_trip},
      {"dim2", "density", "every 2-d division algebra has a normal form", density},
      {"quat", "functor-h-blocks", "H_{alpha,beta} lands in block (alpha,beta)", functor_h_blocks},
      {"quat", "functor-h-functoriality", "K_s is the image of [s] under H_{alpha,beta}", functor_h_functoriality},
      {"quat", "k-map-faithfulness", "K_s = K_t iff [s] = [t]", k_map_faithfulness},
      {"quat", "so4-factor", "SO(4) maps factor as x -> a x b", so4_reconstruction},
      {"quat", "quat-normal-form-round-trip", "isotopes of H reduce to H_{alpha,beta}(x)", quat_round_trip},
      {"quat", "absolute-valued", "Y-objects give absolute valued algebras", absolute_valued},
      {"quat", "block-equivalence-quat", "stabilizers agree across the four H functors", block_equivalence_quat},
      {"cli", "json-round-trip", "JSON write then read is exact", json_round_trip},
  };
  return s;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

}  // namespace

bool Report::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& invariant_checklist() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : specs()) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

Report run_verify(const VerifyOptions& opt, std::string command) {
  Report rep{std::move(command), opt.seed, opt.tol, opt.samples, {}};
  std::uint64_t idx = 0;
  for (const auto& spec : specs()) {
    CheckResult r{spec.module, spec.name, spec.anchor, true, 0.0, 0, {}};
    // Each check draws from its own stream so results do not depend on order.
    Rng rng(opt.seed * 1000003ULL + ++idx);
    try {
      spec.body(r, rng, opt);
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    rep.results.push_back(std::move(r));
  }

  CheckResult cover{"cli", "checklist", "every module invariant is exercised", true, 0.0, 0, {}};
  std::set<std::string> seen;
  for (const auto& r : rep.results) seen.insert(r.name);
  for (const auto& n : invariant_checklist()) {
    fail_if(cover, !seen.count(n), "missing check " + n);
    ++cover.samples;
  }
  rep.results.push_back(std::move(cover));
  return rep;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.results)
    checks.push_back({{"module", c.module},
                      {"name", c.name},
                      {"anchor", c.anchor},
                      {"pass", c.pass},
                      {"residual", c.residual},
                      {"samples", c.samples},
                      {"detail", c.detail}});
  return {{"command", r.command},
          {"seed", r.seed},
          {"tol", r.tol},
          {"samples", r.samples},
          {"passed", r.passed()},
          {"results", checks}};
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\nseed: " << r.seed << "  tol: " << fmt_double(r.tol)
     << "  samples: " << r.samples << "\n";
  for (const auto& c : r.results) {
    os << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(13) << c.module << std::setw(30) << c.name
       << " residual=" << fmt_double(c.residual) << " n=" << c.samples;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (r.passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

}  // namespace dsign
