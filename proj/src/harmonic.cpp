#include "spherepair/liealg.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

namespace spherepair {

namespace {

// polynomials in x, y, z with real coefficients
using Mono = std::array<int, 3>;
using Poly = std::map<Mono, double>;

void add_to(Poly& p, const Poly& q, double s = 1) {
  for (const auto& [m, c] : q) {
    p[m] += s * c;
    if (p[m] == 0) p.erase(m);
  }
}

Poly mul(const Poly& p, const Poly& q) {
  Poly r;
  for (const auto& [a, ca] : p)
    for (const auto& [b, cb] : q) {
      const Mono m{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      r[m] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

Poly var(int i) {
  Mono m{0, 0, 0};
  m[i] = 1;
  return {{m, 1.0}};
}

Poly constant(double c) { return {{Mono{0, 0, 0}, c}}; }

Poly power(const Poly& p, int e) {
  Poly r = constant(1);
  for (int i = 0; i < e; ++i) r = mul(r, p);
  return r;
}

Poly diff(const Poly& p, int i) {
  Poly r;
  for (const auto& [m, c] : p) {
    if (m[i] == 0) continue;
    Mono d = m;
    d[i] -= 1;
    r[d] += c * m[i];
  }
  return r;
}

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// SO(3)-invariant Fischer product <x^a, x^b> = a! delta_ab
double fischer(const Poly& p, const Poly& q) {
  double s = 0;
  for (const auto& [m, c] : p) {
    auto it = q.find(m);
    if (it != q.end()) s += c * it->second * factorial(m[0]) * factorial(m[1]) * factorial(m[2]);
  }
  return s;
}

// p(B v): x_i -> sum_j B_ij x_j
Poly substitute(const Poly& p, const Eigen::Matrix3d& B) {
  std::array<Poly, 3> lin;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (B(i, j) != 0) add_to(lin[i], var(j), B(i, j));
  Poly r;
  for (const auto& [m, c] : p) {
    Poly t = constant(c);
    for (int i = 0; i < 3; ++i) t = mul(t, power(lin[i], m[i]));
    add_to(r, t);
  }
  return r;
}

// Re/Im (x+iy)^j times g_j(z, x^2+y^2) for j = a..1, then g_0; the factor g_j makes the product
// harmonic: c_{k+1} = -c_k s (s-1) / (4 (k+1)(k+1+j)) with s = a - j - 2k.
std::vector<Poly> harmonic_basis(int a) {
  const Poly rho2 = [] {
    Poly p = mul(var(0), var(0));
    add_to(p, mul(var(1), var(1)));
    return p;
  }();
  std::vector<Poly> out;
  auto zonal_factor = [&](int j) {
    Poly g;
    double c = 1;
    for (int k = 0; a - j - 2 * k >= 0; ++k) {
      const int s = a - j - 2 * k;
      add_to(g, mul(power(var(2), s), power(rho2, k)), c);
      c = -c * s * (s - 1) / (4.0 * (k + 1) * (k + 1 + j));
    }
    return g;
  };
  for (int j = a; j >= 1; --j) {
    Poly re = constant(1), im;
    for (int t = 0; t < j; ++t) {
      Poly nre = mul(re, var(0));
      add_to(nre, mul(im, var(1)), -1);
      Poly nim = mul(re, var(1));
      add_to(nim, mul(im, var(0)));
      re = nre;
      im = nim;
    }
    const Poly g = zonal_factor(j);
    out.push_back(mul(re, g));
    out.push_back(mul(im, g));
  }
  out.push_back(zonal_factor(0));
  return out;
}

// matrix of a linear map on the harmonic basis, in the orthonormal rescaling
AlgebraElement matrix_on_basis(const std::vector<Poly>& basis, const std::vector<Poly>& images) {
  const int l = static_cast<int>(basis.size());
  std::vector<double> nrm(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) nrm[static_cast<std::size_t>(k)] = std::sqrt(fischer(basis[k], basis[k]));
  AlgebraElement M(Field::R, l);
  for (int c = 0; c < l; ++c)
    for (int r = 0; r < l; ++r) {
      const double v = fischer(images[c], basis[r]) / (nrm[static_cast<std::size_t>(r)] * nrm[static_cast<std::size_t>(c)]);
      if (std::abs(v) > 1e-14) M(r, c) = Quat(v);
    }
  return M;
}

AlgebraElement so3_algebra_image(const std::vector<Poly>& basis, const AlgebraElement& X) {
  // d/ds f(exp(-sX) v) = -sum_ij X_ij x_j d_i f
  std::vector<Poly> imgs;
  for (const auto& f : basis) {
    Poly g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (X(i, j).w != 0) add_to(g, mul(var(j), diff(f, i)), -X(i, j).w);
    imgs.push_back(g);
  }
  return matrix_on_basis(basis, imgs);
}

using cplx = std::complex<double>;
using CMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;

// quaternion p + j s acting on H = C^2 by left multiplication
Eigen::Matrix2cd quat_to_su2(const Quat& q) {
  const cplx p(q.w, q.x), s(q.y, -q.z);
  Eigen::Matrix2cd U;
  U << p, -std::conj(s), s, std::conj(p);
  return U;
}

// action on S^3(C^2) in the basis e1^(3-b) e2^b / sqrt((3-b)! b!)
CMat cubic_algebra(const Eigen::Matrix2cd& X) {
  CMat M = CMat::Zero(4, 4);
  for (int b = 0; b <= 3; ++b) {
    const int a = 3 - b;
    M(b, b) += double(a) * X(0, 0) + double(b) * X(1, 1);
    if (b < 3) M(b + 1, b) += double(a) * X(1, 0);
    if (b > 0) M(b - 1, b) += double(b) * X(0, 1);
  }
  return M;
}

CMat cubic_group(const Eigen::Matrix2cd& U) {
  CMat M = CMat::Zero(4, 4);
  for (int b = 0; b <= 3; ++b) {
    // (U e1)^(3-b) (U e2)^b as coefficients of e1^(3-d) e2^d
    std::vector<cplx> poly{1.0};
    auto times = [&](cplx c1, cplx c2) {
      std::vector<cplx> r(poly.size() + 1, 0.0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        r[d] += poly[d] * c1;
        r[d + 1] += poly[d] * c2;
      }
      poly = r;
    };
    for (int t = 0; t < 3 - b; ++t) times(U(0, 0), U(1, 0));
    for (int t = 0; t < b; ++t) times(U(0, 1), U(1, 1));
    for (int d = 0; d <= 3; ++d) M(d, b) = poly[static_cast<std::size_t>(d)];
  }
  return M;
}

// Rescale to the orthonormal basis, reorder to (u1, u2, sigma u1, sigma u2) with
// sigma(v_b) = (-1)^b v_(3-b), and read the result as a 2 x 2 quaternionic matrix.
AlgebraElement cubic_to_quaternionic(const CMat& M) {
  const double nu[4] = {std::sqrt(6.0), std::sqrt(2.0), std::sqrt(2.0), std::sqrt(6.0)};
  CMat N(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) N(i, j) = M(i, j) * nu[i] / nu[j];
  CMat T = CMat::Zero(4, 4);
  T(0, 0) = 1;
  T(1, 1) = 1;
  T(3, 2) = 1;
  T(2, 3) = -1;
  const CMat R = T.adjoint() * N * T;
  AlgebraElement A(Field::H, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const cplx p = R(i, j), s = R(i + 2, j);
      if (std::abs(R(i + 2, j + 2) - std::conj(p)) > 1e-12 || std::abs(R(i, j + 2) + std::conj(s)) > 1e-12)
        throw std::logic_error("S^3(C^2) matrix is not quaternionic in the chosen basis");
      A(i, j) = Quat(p.real(), p.imag(), s.real(), -s.imag());
    }
  return A;
}

}  // namespace

AlgebraElement harmonic_so3_group(int a, const Eigen::Matrix3d& A) {
  const auto basis = harmonic_basis(a);
  const Eigen::Matrix3d Ainv = A.inverse();
  std::vector<Poly> imgs;
  for (const auto& f : basis) imgs.push_back(substitute(f, Ainv));
  return matrix_on_basis(basis, imgs);
}

EmbeddedRep harmonic_so3_embedding(int a) {
  if (a < 1) throw std::invalid_argument("harmonic degree must be at least 1");
  const auto basis = harmonic_basis(a);
  EmbeddedRep r;
  r.source = "SO(3)/SO(2)";
  r.label = (a == 1 ? std::string() : std::to_string(a)) + "w1";
  r.field = Field::R;
  r.l = 2 * a + 1;
  r.m0 = 1;
  r.type = RepType::Real;
  r.k_basis = build_algebra_basis(Field::R, 3);
  for (const auto& X : r.k_basis) r.images.push_back(so3_algebra_image(basis, X));
  // SO(2) rotates the x-y plane
  r.h_basis = {r.k_basis[0]};
  r.h_images = {r.images[0]};
  // diag(1,-1,-1) only flips signs of basis polynomials; remove the Fischer-norm rounding
  r.weyl_x = harmonic_so3_group(a, Eigen::Vector3d(1, -1, -1).asDiagonal());
  for (int i = 0; i < r.l; ++i)
    for (int j = 0; j < r.l; ++j) r.weyl_x(i, j) = Quat(std::round(r.weyl_x(i, j).w));
  return r;
}

EmbeddedRep complexify(const EmbeddedRep& r) {
  if (r.field != Field::R) throw std::invalid_argument("complexify expects a real embedding");
  EmbeddedRep c = r;
  c.field = Field::C;
  for (auto& X : c.images) X = as_field(X, Field::C);
  for (auto& X : c.h_images) X = as_field(X, Field::C);
  c.weyl_x = as_field(r.weyl_x, Field::C);
  return c;
}

EmbeddedRep sp1_cubic_embedding() {
  EmbeddedRep r;
  r.source = "Sp(1)/{1}";
  r.label = "3w1";
  r.field = Field::H;
  r.l = 2;
  r.m0 = 2;
  r.type = RepType::Quaternionic;
  r.k_basis = build_algebra_basis(Field::H, 1);
  for (const auto& X : r.k_basis) r.images.push_back(cubic_to_quaternionic(cubic_algebra(quat_to_su2(X(0, 0)))));
  // x = -1 is central with x^2 = 1
  r.weyl_x = cubic_to_quaternionic(cubic_group(quat_to_su2(Quat(-1))));
  return r;
}

double homomorphism_defect(const EmbeddedRep& r) {
  double worst = 0;
  const std::size_t d = r.k_basis.size();
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) {
      const Eigen::VectorXd c = coords(r.k_basis, bracket(r.k_basis[s], r.k_basis[t]));
      AlgebraElement rhs(r.field, r.l);
      for (std::size_t k = 0; k < d; ++k) rhs = rhs + c(static_cast<Eigen::Index>(k)) * r.images[k];
      worst = std::max(worst, (bracket(r.images[s], r.images[t]) - rhs).max_abs());
    }
  return worst;
}

}  // namespace spherepair
