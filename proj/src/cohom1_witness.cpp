#include "spherepair/cohom1.hpp"
#include "spherepair/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spherepair {

namespace {

// X = Xc + sum z_k Xk and Y = Yc + sum z_k Yk
struct AffinePlane {
  AlgebraElement Xc, Yc;
  std::vector<AlgebraElement> Xk, Yk;
};

AffinePlane witness_template(const MetricFamily& fam) {
  const GroupDiagram& d = *fam.diagram;
  const auto& s = d.sub;
  const Field f = s.field;
  const int n = s.n, m = s.m, p = d.p, beta = d.beta;
  if (n < m + 2) throw std::invalid_argument("the witness plane needs n >= m + 2");
  AffinePlane w;
  w.Xc = AlgebraElement(f, n);
  w.Yc = AlgebraElement(f, n);
  auto row = [&](int a, int u) { return s.r + u * p + a; };
  if (f == Field::R) {
    for (int u = 0; u < beta; ++u) {
      const double Au = fam.A(u, fam.i0);
      w.Xc = w.Xc + Au * basis_E(f, n, row(p - 1, u), m + 1);
      w.Yc = w.Yc + Au * basis_E(f, n, row(p - 1, u), m);
    }
    for (int a = 0; a + 1 < p; ++a) {
      AlgebraElement X(f, n), Y(f, n);
      for (int u = 0; u < beta; ++u) {
        const double Au = fam.A(u, fam.i0);
        X = X + Au * basis_E(f, n, row(a, u), m);
        Y = Y + Au * basis_E(f, n, row(a, u), m + 1);
      }
      w.Xk.push_back(X);
      w.Yk.push_back(Y);
    }
    return w;
  }
  // C and H: one copy, E + F or E + iG + jG + kG on the last row
  const int last = row(p - 1, 0);
  w.Xc = basis_E(f, n, last, m + 1);
  w.Yc = basis_E(f, n, last, m);
  if (f == Field::C) {
    w.Xc = w.Xc + basis_F(n, last, m + 1);
    w.Yc = w.Yc + basis_F(n, last, m);
  } else {
    for (int th = 1; th <= 3; ++th) {
      w.Xc = w.Xc + basis_G(n, last, m + 1, th);
      w.Yc = w.Yc + basis_G(n, last, m, th);
    }
  }
  for (int a = 0; a + 1 < p; ++a) {
    w.Xk.push_back(basis_E(f, n, row(a, 0), m));
    w.Yk.push_back(basis_E(f, n, row(a, 0), m + 1));
  }
  for (int a = 0; a + 1 < p; ++a) {
    if (f == Field::C) {
      w.Xk.push_back(basis_F(n, row(a, 0), m));
      w.Yk.push_back(basis_F(n, row(a, 0), m + 1));
    } else {
      for (int th = 1; th <= 3; ++th) {
        w.Xk.push_back(basis_G(n, row(a, 0), m, th));
        w.Yk.push_back(basis_G(n, row(a, 0), m + 1, th));
      }
    }
  }
  return w;
}

AlgebraElement affine(const AlgebraElement& c, const std::vector<AlgebraElement>& k, const Eigen::VectorXd& z) {
  AlgebraElement out = c;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double zi = z(static_cast<Eigen::Index>(i));
    if (zi != 0) out = out + zi * k[i];
  }
  return out;
}

// null vector with the first free column set to 1 (reduced row echelon form)
Eigen::VectorXd first_null_vector(Eigen::MatrixXd C, int& null_dim) {
  const Eigen::Index rows = C.rows(), cols = C.cols();
  const double tol = 1e-12 * std::max(1.0, C.cwiseAbs().maxCoeff());
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best = r;
    for (Eigen::Index i = r; i < rows; ++i)
      if (std::abs(C(i, c)) > std::abs(C(best, c))) best = i;
    if (std::abs(C(best, c)) <= tol) continue;
    C.row(r).swap(C.row(best));
    C.row(r) /= C(r, c);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r) C.row(i) -= C(i, c) * C.row(r);
    pivots.push_back(c);
    ++r;
  }
  null_dim = static_cast<int>(cols - static_cast<Eigen::Index>(pivots.size()));
  Eigen::VectorXd z = Eigen::VectorXd::Zero(cols);
  if (null_dim == 0) return z;
  Eigen::Index free = 0;
  while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
  z(free) = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) z(pivots[i]) = -C(static_cast<Eigen::Index>(i), free);
  return z;
}

}  // namespace

WitnessPlane build_witness(const MetricFamily& fam) {
  const GroupDiagram& d = *fam.diagram;
  const auto& s = d.sub;
  const AffinePlane tpl = witness_template(fam);
  const std::size_t N = tpl.Xk.size();
  if (N == 0) throw InternalInconsistency("no free coefficients: l = 1");

  // X0 = A+(X, Y) / (h^2 - 1) does not depend on t; read it off at L/2
  const double tref = fam.profile.L / 2;
  const MetricOperator P(fam, tref);
  const double h = fam.profile.h(tref);
  const double scale = h * h - 1;
  auto X0_of = [&](const Eigen::VectorXd& z) {
    return (1 / scale) * a_pm(P, affine(tpl.Xc, tpl.Xk, z), affine(tpl.Yc, tpl.Yk, z)).plus;
  };
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N));
  const AlgebraElement X00 = X0_of(zero);
  if (X00.max_abs() > 1e-12) throw InternalInconsistency("A+(X, Y) has a part independent of b");
  std::vector<AlgebraElement> L;
  for (std::size_t k = 0; k < N; ++k) {
    Eigen::VectorXd e = zero;
    e(static_cast<Eigen::Index>(k)) = 1;
    L.push_back(X0_of(e) - X00);
  }
  Eigen::MatrixXd C(static_cast<Eigen::Index>(s.k_minus.size()), static_cast<Eigen::Index>(N));
  for (std::size_t r = 0; r < s.k_minus.size(); ++r)
    for (std::size_t k = 0; k < N; ++k)
      C(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = innerQ(L[k], s.k_minus[r]);

  WitnessPlane w;
  Eigen::VectorXd z = first_null_vector(C, w.null_dim);
  if (w.null_dim == 0)
    throw InternalInconsistency("X0 cannot be made orthogonal to k-: mu(K') would act transitively");
  const double target = s.field == Field::R ? 1 : (s.field == Field::C ? 2 : 4);
  z *= std::sqrt(target / z.squaredNorm());
  z = z.unaryExpr([](double x) { return x == 0 ? 0.0 : x; });  // no -0 in reports

  w.X = affine(tpl.Xc, tpl.Xk, z);
  w.Y = affine(tpl.Yc, tpl.Yk, z);
  w.X0 = AlgebraElement(s.field, s.n);
  for (std::size_t k = 0; k < N; ++k) w.X0 = w.X0 + z(static_cast<Eigen::Index>(k)) * L[k];
  const int nb = d.p - 1;
  w.b = z.head(nb);
  if (s.field == Field::C) {
    for (int a = 0; a < nb; ++a) w.c.emplace_back(0, z(nb + a));
    w.c_last = Quat(1, 1);
  } else if (s.field == Field::H) {
    for (int a = 0; a < nb; ++a) w.c.emplace_back(0, z(nb + 3 * a), z(nb + 3 * a + 1), z(nb + 3 * a + 2));
    w.c_last = Quat(1, 1, 1, 1);
  } else {
    w.c_last = Quat(1);
  }
  const int beta = d.beta;
  w.dA = s.field == Field::R ? fam.D(fam.i0) * fam.A(beta - 1, fam.i0) : 1.0;
  w.product_scale = s.field == Field::R ? std::pow(w.dA, 4) : (s.field == Field::C ? 4.0 : 16.0);
  w.commutes_exactly = bracket(w.X, w.Y).is_zero(0);
  for (const auto& K : s.k_minus) w.x0_kminus_residual = std::max(w.x0_kminus_residual, std::abs(innerQ(w.X0, K)));
  return w;
}

std::vector<double> interior_samples(double L, int n) {
  std::vector<double> t;
  for (int k = 1; k <= n; ++k) t.push_back(L * k / (n + 1));
  return t;
}

CurvatureReport verify_witness_identities(const MetricFamily& fam, const WitnessPlane& w,
                                          const std::vector<double>& t_samples) {
  CurvatureReport rep;
  rep.example = fam.diagram->name;
  rep.profile = fam.profile.name;
  rep.commutes_exactly = w.commutes_exactly;
  for (double t : t_samples) {
    const MetricOperator P(fam, t);
    const double h = fam.profile.h(t), dh = fam.profile.dh(t);
    const double s = h * h - 1;
    CurvatureSample cs;
    cs.t = t;
    const auto Axy = a_pm(P, w.X, w.Y).plus;
    const auto Axx = a_pm(P, w.X, w.X).plus;
    const auto Ayy = a_pm(P, w.Y, w.Y).plus;
    cs.r1 = (Axy - s * w.X0).max_abs();
    cs.r2 = (Axx - Ayy).max_abs();
    const auto dPX = P.dP(w.X), dPY = P.dP(w.Y);
    cs.r3 = std::abs(innerQ(dPX, w.Y));
    cs.product = -0.25 * innerQ(dPX, w.X) * innerQ(dPY, w.Y);
    const double expected = -w.product_scale * h * h * dh * dh;
    cs.r4 = std::abs(cs.product - expected);
    const auto terms = curvature_components(P, fam.diagram->sub, w.X, w.Y);
    cs.formula_a = terms.a;
    cs.three_term = s * s * innerQ(w.X0, P.Pinv(w.X0)) + expected - innerQ(Axx, P.Pinv(Axx));
    const double scale = std::max(std::abs(cs.formula_a), std::abs(cs.three_term));
    cs.decomposition_rel = scale > 0 ? std::abs(cs.formula_a - cs.three_term) / scale : 0;
    cs.sec = terms.a / terms.norm2;
    rep.samples.push_back(cs);
  }
  return rep;
}

bool CurvatureReport::identities_ok() const {
  for (const auto& s : samples)
    if (!(s.r1 <= tol_identity && s.r2 <= tol_identity && s.r3 <= tol_identity && s.r4 <= tol_identity)) return false;
  return true;
}

bool CurvatureReport::decomposition_ok() const {
  for (const auto& s : samples)
    if (!(s.decomposition_rel <= tol_decomposition)) return false;
  return true;
}

double CurvatureReport::first_negative_t() const {
  for (const auto& s : samples)
    if (s.sec < 0) return s.t;
  return -1;
}

namespace {

bool close_to_identity(const Eigen::MatrixXd& U, double tol) {
  return (U - Eigen::MatrixXd::Identity(U.rows(), U.cols())).cwiseAbs().maxCoeff() <= tol;
}

// U = exp(theta Z) for some theta, Z the realified generator of a circle
bool on_circle(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& U, double tol) {
  if (close_to_identity(U, tol)) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(-Z * Z);
  const Eigen::VectorXd ev = es.eigenvalues();
  Eigen::Index imin = -1;
  double wmax = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 1e-12) continue;
    if (imin < 0) imin = i;
    wmax = std::max(wmax, std::sqrt(ev(i)));
  }
  if (imin < 0) return false;
  const double wmin = std::sqrt(ev(imin));
  const Eigen::VectorXd v = es.eigenvectors().col(imin);
  const Eigen::VectorXd u = Z * v / wmin;
  const double phi = std::atan2(u.dot(U * v), v.dot(U * v));
  const int K = std::min(1000, static_cast<int>(std::ceil(wmax / wmin)) + 1);
  for (int k = 0; k < K; ++k) {
    const double theta = (phi + 2 * std::numbers::pi * k) / wmin;
    const Eigen::MatrixXd E = (theta * Z).exp();
    if ((E - U).cwiseAbs().maxCoeff() <= tol) return true;
  }
  return false;
}

}  // namespace

bool in_H(const GroupDiagram& d, const AlgebraElement& g) {
  const auto& s = d.sub;
  if (g.field() != s.field || g.n() != s.n) throw std::invalid_argument("element does not live in G");
  const int n = s.n, m = s.m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i < m) != (j < m) && !g(i, j).is_zero()) return false;
  const AlgebraElement lower = g.block(m, n - m);
  const auto I = AlgebraElement::identity(s.field, n - m);
  if (!(lower * lower.conj_transpose() - I).is_zero(1e-12)) return false;
  if (s.field == Field::R && lower.realify().determinant() < 0) return false;

  const Eigen::MatrixXd upper = g.block(0, m).realify();
  if (s.rho_h.empty()) return close_to_identity(upper, 1e-12);
  if (s.rho_h.size() > 1) throw std::invalid_argument("membership test implemented for H' of dimension <= 1");
  return on_circle(s.rho_h[0].block(0, m).realify(), upper, 1e-9);
}

WeylRepresentatives weyl_representatives(const GroupDiagram& d) {
  const auto& s = d.sub;
  if (s.r > 0) throw std::invalid_argument("w- needs tau(x); only diagrams with rho = alpha mu are registered");
  WeylRepresentatives w;
  w.w_plus = AlgebraElement::identity(s.field, s.n);
  w.w_plus(s.m - 1, s.m - 1) = Quat(-1);
  if (s.field == Field::R) w.w_plus(s.m, s.m) = Quat(-1);
  w.w_minus = AlgebraElement::identity(s.field, s.n);
  for (int u = 0; u < s.alpha; ++u)
    for (int i = 0; i < s.l; ++i)
      for (int j = 0; j < s.l; ++j) w.w_minus(s.r + u * s.l + i, s.r + u * s.l + j) = d.mu.weyl_x(i, j);

  w.w_plus_sq_in_H = in_H(d, w.w_plus * w.w_plus);
  w.w_minus_sq_in_H = in_H(d, w.w_minus * w.w_minus);
  w.w_plus_notin_H = !in_H(d, w.w_plus);
  w.w_minus_notin_H = !in_H(d, w.w_minus);
  const auto pm = w.w_plus * w.w_minus;
  w.commute = pm == w.w_minus * w.w_plus;
  w.product_notin_H = !in_H(d, pm);
  return w;
}

EvenFunction one_minus_h2(const Profile& p) {
  EvenFunction f;
  // 1 - h^2 = (1 - h)(1 + h)
  f.f = [p](double t) { return p.one_minus_h ? p.one_minus_h(t) * (1 + p.h(t)) : 1 - p.h(t) * p.h(t); };
  f.df = [p](double t) { return -2 * p.h(t) * p.dh(t); };
  return f;
}

std::vector<ObstructionHit> obstruction_scan(const EvenFunction& f, const std::vector<double>& gamma_grid,
                                             const std::vector<double>& t_grid, int max_halvings) {
  if (t_grid.empty()) throw std::invalid_argument("empty t grid");
  if (std::abs(f.f(0)) > 1e-14) throw std::invalid_argument("f(0) != 0");
  bool nonconstant = false;
  for (double t : t_grid) {
    const double a = f.f(t), b = f.f(-t);
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) throw std::invalid_argument("f is not even");
    if (a != 0) nonconstant = true;
  }
  if (!nonconstant) throw std::invalid_argument("f must be a non constant even function");

  std::vector<ObstructionHit> out;
  for (double g : gamma_grid) {
    ObstructionHit hit;
    hit.gamma = g;
    auto test = [&](double t) {
      const double v = f.f(t), dv = f.df(t);
      const double lhs = g * g * v * v - dv * dv;
      if (lhs < 0) {
        hit.t = t;
        hit.lhs = lhs;
        hit.found = true;
      }
      return hit.found;
    };
    for (double t : t_grid)
      if (t != 0 && test(t)) break;
    if (!hit.found) {
      double t = *std::min_element(t_grid.begin(), t_grid.end(), [](double a, double b) {
        return (a > 0 ? a : INFINITY) < (b > 0 ? b : INFINITY);
      });
      for (int k = 0; k < max_halvings && !hit.found; ++k) test(t /= 2);
    }
    out.push_back(hit);
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0 && hi >= lo) || n < 1) throw std::invalid_argument("bad log grid");
  std::vector<double> g;
  if (n == 1) return {lo};
  const double r = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g.push_back(lo * std::exp(r * i));
  g.back() = hi;
  return g;
}

}  // namespace spherepair
