#include "spherepair/liealg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spherepair {

Quat operator+(const Quat& a, const Quat& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
Quat operator-(const Quat& a, const Quat& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
Quat operator-(const Quat& a) { return {-a.w, -a.x, -a.y, -a.z}; }
Quat operator*(double s, const Quat& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }

Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

AlgebraElement::AlgebraElement(Field f, int n) : field_(f), n_(n), a_(static_cast<std::size_t>(n * n)) {}

AlgebraElement AlgebraElement::identity(Field f, int n) {
  AlgebraElement e(f, n);
  for (int i = 0; i < n; ++i) e(i, i) = Quat(1);
  return e;
}

AlgebraElement AlgebraElement::conj_transpose() const {
  AlgebraElement t(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

bool AlgebraElement::is_skew(double tol) const { return (*this + conj_transpose()).is_zero(tol); }

bool AlgebraElement::is_zero(double tol) const { return max_abs() <= tol; }

double AlgebraElement::max_abs() const {
  double m = 0;
  for (const auto& q : a_) m = std::max({m, std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
  return m;
}

namespace {

int real_width(Field f) { return f == Field::R ? 1 : (f == Field::C ? 2 : 4); }

// left multiplication by q on R^d, d = 1, 2, 4
Eigen::MatrixXd left_mult(const Quat& q, int d) {
  Eigen::MatrixXd L(d, d);
  const Quat units[4] = {Quat(1), Quat(0, 1), Quat(0, 0, 1), Quat(0, 0, 0, 1)};
  for (int c = 0; c < d; ++c) {
    const Quat v = q * units[c];
    const double comp[4] = {v.w, v.x, v.y, v.z};
    for (int r = 0; r < d; ++r) L(r, c) = comp[r];
  }
  return L;
}

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
  if (a.n() != b.n() || a.field() != b.field())
    throw std::invalid_argument(std::string(op) + ": shape mismatch (" + std::to_string(a.n()) + " " +
                                field_name(a.field()) + " vs " + std::to_string(b.n()) + " " +
                                field_name(b.field()) + ")");
}

}  // namespace

Eigen::MatrixXd AlgebraElement::realify() const {
  const int d = real_width(field_);
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(d * n_, d * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) R.block(d * i, d * j, d, d) = left_mult((*this)(i, j), d);
  return R;
}

AlgebraElement AlgebraElement::block(int s, int k) const {
  AlgebraElement b(field_, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b(i, j) = (*this)(s + i, s + j);
  return b;
}

AlgebraElement AlgebraElement::embedded(int N, int s) const {
  AlgebraElement e(field_, N);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) e(s + i, s + j) = (*this)(i, j);
  return e;
}

std::string AlgebraElement::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << (i ? "\n" : "") << '[';
    for (int j = 0; j < n_; ++j) {
      const Quat& q = (*this)(i, j);
      os << (j ? ", " : "") << q.w;
      if (field_ != Field::R) os << (q.x < 0 ? "" : "+") << q.x << 'i';
      if (field_ == Field::H) os << (q.y < 0 ? "" : "+") << q.y << 'j' << (q.z < 0 ? "" : "+") << q.z << 'k';
    }
    os << ']';
  }
  return os.str();
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "sum");
  AlgebraElement s(a.field(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) s(i, j) = a(i, j) + b(i, j);
  return s;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "difference");
  AlgebraElement s(a.field(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) s(i, j) = a(i, j) - b(i, j);
  return s;
}

AlgebraElement operator*(double s, const AlgebraElement& a) {
  AlgebraElement r(a.field(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) r(i, j) = s * a(i, j);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b, "product");
  const int n = a.n();
  AlgebraElement p(a.field(), n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Quat& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) p(i, j) = p(i, j) + x * b(k, j);
    }
  return p;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n() || a.field() != b.field()) return false;
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

AlgebraElement as_field(const AlgebraElement& a, Field f) {
  AlgebraElement b(f, a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) b(i, j) = a(i, j);
  return b;
}

AlgebraElement bracket(const AlgebraElement& X, const AlgebraElement& Y) { return X * Y - Y * X; }

double innerQ(const AlgebraElement& X, const AlgebraElement& Y) {
  require_same_shape(X, Y, "innerQ");
  double re = 0;
  for (int i = 0; i < X.n(); ++i)
    for (int j = 0; j < X.n(); ++j) {
      const Quat& p = X(i, j);
      const Quat& q = Y(j, i);
      re += p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z;
    }
  return -0.5 * re;
}

AlgebraElement basis_E(Field f, int n, int i, int j) {
  AlgebraElement e(f, n);
  e(i, j) = Quat(1);
  e(j, i) = Quat(-1);
  return e;
}

AlgebraElement basis_F(int n, int i, int j) {
  AlgebraElement e(Field::C, n);
  if (i == j) {
    e(i, i) = Quat(0, std::sqrt(2.0));
  } else {
    e(i, j) = Quat(0, 1);
    e(j, i) = Quat(0, 1);
  }
  return e;
}

AlgebraElement basis_G(int n, int i, int j, int theta) {
  AlgebraElement e(Field::H, n);
  Quat u;
  const double s = i == j ? std::sqrt(2.0) : 1.0;
  if (theta == 1) u = Quat(0, s);
  else if (theta == 2) u = Quat(0, 0, s);
  else u = Quat(0, 0, 0, s);
  e(i, j) = u;
  e(j, i) = u;
  return e;
}

int algebra_dim(Field f, int n) {
  switch (f) {
    case Field::R: return n * (n - 1) / 2;
    case Field::C: return n * n;
    case Field::H: return n * (2 * n + 1);
  }
  return 0;
}

std::vector<AlgebraElement> build_algebra_basis(Field f, int n) {
  std::vector<AlgebraElement> b;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.push_back(basis_E(f, n, i, j));
  if (f == Field::C) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) b.push_back(basis_F(n, i, j));
  } else if (f == Field::H) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int t = 1; t <= 3; ++t) b.push_back(basis_G(n, i, j, t));
  }
  return b;
}

std::vector<AlgebraElement> orthonormalize(const std::vector<AlgebraElement>& v, double tol) {
  std::vector<AlgebraElement> out;
  for (const auto& x : v) {
    AlgebraElement y = x;
    // two passes keep the family orthogonal to rounding level
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& e : out) y = y - innerQ(y, e) * e;
    const double nrm = std::sqrt(std::max(0.0, normQ2(y)));
    if (nrm > tol) out.push_back((1.0 / nrm) * y);
  }
  return out;
}

Eigen::VectorXd coords(const std::vector<AlgebraElement>& onb, const AlgebraElement& X) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(onb.size()));
  for (std::size_t k = 0; k < onb.size(); ++k) c(static_cast<Eigen::Index>(k)) = innerQ(X, onb[k]);
  return c;
}

AlgebraElement combine(const std::vector<AlgebraElement>& onb, const Eigen::VectorXd& c, Field f, int n) {
  AlgebraElement X(f, n);
  for (std::size_t k = 0; k < onb.size(); ++k) {
    const double ck = c(static_cast<Eigen::Index>(k));
    if (ck != 0) X = X + ck * onb[k];
  }
  return X;
}

AlgebraElement project(const std::vector<AlgebraElement>& onb, const AlgebraElement& X) {
  return combine(onb, coords(onb, X), X.field(), X.n());
}

namespace {

// q vectors with row i and column j: E_ij and the imaginary companions
void push_q(std::vector<AlgebraElement>& out, Field f, int n, int i, int j) {
  out.push_back(basis_E(f, n, i, j));
  if (f == Field::C) out.push_back(basis_F(n, i, j));
  if (f == Field::H)
    for (int t = 1; t <= 3; ++t) out.push_back(basis_G(n, i, j, t));
}

std::vector<AlgebraElement> q_rows(Field f, int n, int m, int row_begin, int row_end) {
  std::vector<AlgebraElement> out;
  for (int i = row_begin; i < row_end; ++i)
    for (int j = m; j < n; ++j) push_q(out, f, n, i, j);
  return out;
}

std::vector<AlgebraElement> lower_block(Field f, int n, int s) {
  std::vector<AlgebraElement> out;
  for (const auto& b : build_algebra_basis(f, n - s)) out.push_back(b.embedded(n, s));
  return out;
}

}  // namespace

DiagramSubspaces diagram_subspaces(const DiagramCandidate& c, const EmbeddedRep& mu, const EmbeddedRep* tau) {
  if (mu.field != c.field)
    throw std::invalid_argument("embedded representation is over " + field_name(mu.field) + ", diagram over " +
                                field_name(c.field));
  if (mu.l != c.mu_degree())
    throw std::invalid_argument("embedded degree " + std::to_string(mu.l) + " differs from deg mu = " +
                                std::to_string(c.mu_degree()));
  const int r = tau ? tau->l : 0;
  if (r != c.tau_degree())
    throw std::invalid_argument("tau has degree " + std::to_string(c.tau_degree()) + " but the embedding has " +
                                std::to_string(r));
  if (tau && tau->k_basis.size() != mu.k_basis.size())
    throw std::invalid_argument("tau and mu must be given on the same basis of k'");

  DiagramSubspaces s;
  s.field = c.field;
  s.alpha = c.alpha;
  s.l = mu.l;
  s.r = r;
  s.m = r + c.alpha * mu.l;
  s.n = c.n;
  const Field f = s.field;
  const int n = s.n, m = s.m;
  if (n < m + 1) throw std::invalid_argument("n = " + std::to_string(n) + " < m + 1 = " + std::to_string(m + 1));

  auto rho = [&](const std::vector<AlgebraElement>& tau_imgs, const std::vector<AlgebraElement>& mu_imgs) {
    std::vector<AlgebraElement> out;
    for (std::size_t k = 0; k < mu_imgs.size(); ++k) {
      AlgebraElement X(f, n);
      if (tau) X = X + tau_imgs[k].embedded(n, 0);
      for (int u = 0; u < c.alpha; ++u) X = X + mu_imgs[k].embedded(n, r + u * mu.l);
      out.push_back(X);
    }
    return out;
  };
  s.rho_k = rho(tau ? tau->images : std::vector<AlgebraElement>{}, mu.images);
  s.rho_h = rho(tau ? tau->h_images : std::vector<AlgebraElement>{}, mu.h_images);

  s.g = build_algebra_basis(f, n);
  const auto h_on = orthonormalize(s.rho_h);
  const auto lower = lower_block(f, n, m);
  s.h = h_on;
  s.h.insert(s.h.end(), lower.begin(), lower.end());
  s.k_minus = orthonormalize(s.rho_k);
  s.k_minus.insert(s.k_minus.end(), lower.begin(), lower.end());
  s.k_plus = h_on;
  const auto lower_plus = lower_block(f, n, m - 1);
  s.k_plus.insert(s.k_plus.end(), lower_plus.begin(), lower_plus.end());

  // p = (g(m) minus rho(h')) + q
  std::vector<AlgebraElement> upper = h_on;
  for (const auto& b : build_algebra_basis(f, m)) upper.push_back(b.embedded(n, 0));
  const auto upper_on = orthonormalize(upper);
  s.p.assign(upper_on.begin() + static_cast<std::ptrdiff_t>(h_on.size()), upper_on.end());
  s.q_offset = static_cast<int>(s.p.size());
  s.q0 = q_rows(f, n, m, 0, r);
  s.p.insert(s.p.end(), s.q0.begin(), s.q0.end());
  for (int u = 0; u < c.alpha; ++u) {
    s.q.push_back(q_rows(f, n, m, r + u * mu.l, r + (u + 1) * mu.l));
    s.p.insert(s.p.end(), s.q.back().begin(), s.q.back().end());
  }
  for (int i = m - mu.l; i < m - 1; ++i)
    for (int j = m; j < n; ++j) s.n1.push_back(basis_E(f, n, i, j));
  for (int j = m; j < n; ++j) s.n2.push_back(basis_E(f, n, m - 1, j));
  return s;
}

}  // namespace spherepair
