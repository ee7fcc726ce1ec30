#include "spherepair/rational.hpp"

#include <stdexcept>

namespace spherepair {

std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool lex_less(const RatVec& a, const RatVec& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

RatMat rat_identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rat(i == j ? 1 : 0);
  return m;
}

RatVec rat_zero(int n) {
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = Rat(0);
  return v;
}

RatMat rat_inverse(const RatMat& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::domain_error("rat_inverse: not square");
  RatMat a = m;
  RatMat inv = rat_identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).numerator() == 0) ++p;
    if (p == n) throw std::domain_error("rat_inverse: singular matrix");
    if (p != c) {
      a.row(p).swap(a.row(c));
      inv.row(p).swap(inv.row(c));
    }
    const Rat piv = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).numerator() == 0) continue;
      const Rat f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Rat rat_determinant(RatMat a) {
  const int n = static_cast<int>(a.rows());
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).numerator() == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).numerator() == 0) continue;
      const Rat f = a(r, c) / a(c, c);
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

RatVec to_rat(const std::vector<long long>& v) {
  RatVec r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r[static_cast<Eigen::Index>(i)] = Rat(v[i]);
  return r;
}

}  // namespace spherepair
