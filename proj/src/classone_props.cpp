#include "spherepair/classone.hpp"

#include "spherepair/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace spherepair {

namespace {

Rat binom(long long n, long long k) {
  if (k == 0) return Rat(1);
  if (k < 0 || n < k) return Rat(0);
  Rat r(1);
  for (long long i = 1; i <= k; ++i) r = r * Rat(n - k + i) / Rat(i);
  return r;
}

std::string z(long long l) { return "Z" + std::to_string(l); }

}  // namespace

long long classone_dimension(const ClassOneRecord& r) {
  const long long a = r.params.a, b = r.params.b, n = r.pair.n;
  Rat d(1);
  switch (r.pair.kind) {
    case PairKind::SO: d = Rat(2 * a + n - 2, a + n - 2) * binom(a + n - 2, a); break;
    case PairKind::SU:
    case PairKind::U: d = Rat(a + b + n - 1, n - 1) * binom(a + n - 2, a) * binom(b + n - 2, b); break;
    case PairKind::Sp:
    case PairKind::SpU1:
    case PairKind::SpSp1:
      d = Rat((a + 1) * (a + 2 * b + 2 * n - 1), (a + b + 1) * (a + b + 2 * n - 1)) * binom(a + b + 2 * n - 1, a + b) *
          binom(b + 2 * n - 3, b);
      if (r.pair.kind == PairKind::SpSp1) d *= Rat(a + 1);
      break;
    case PairKind::G2: d = Rat((a + 1) * (a + 2) * (a + 3) * (a + 4) * (2 * a + 5), 120); break;
    case PairKind::Spin7: d = Rat((a + 1) * (a + 2) * (a + 3) * (a + 3) * (a + 4) * (a + 5), 360); break;
    case PairKind::Spin9: {
      d = Rat(1, 1814400);
      for (long long f : {a + 1, a + 2, a + 3, b + 1, b + 2, b + 3, b + 3, b + 4, b + 5, a + b + 4, a + b + 5,
                          a + b + 6, 2 * a + b + 7})
        d *= Rat(f);
      break;
    }
    case PairKind::U1: d = Rat(1); break;
  }
  if (d.denominator() != 1 || d.numerator() < 1)
    throw InternalInconsistency("classone_dimension: closed form gave " + to_string(d));
  return d.numerator();
}

std::pair<RepType, KernelTag> type_and_kernel(const ClassOneRecord& r) {
  const long long a = r.params.a, b = r.params.b, k = r.params.k, n = r.pair.n, m = r.pair.m;
  RepType t = RepType::Real;
  KernelTag ker;
  switch (r.pair.kind) {
    case PairKind::SO:
      if (n % 2 == 0 && a % 2 == 0) ker.text = "Z2";
      break;
    case PairKind::SU: {
      t = a == b ? RepType::Real : RepType::Complex;
      // the centre zeta*Id acts by zeta^(a-b)
      const long long l = std::gcd(std::abs(a - b), n);
      if (l > 1) ker.text = z(l);
      break;
    }
    case PairKind::U: {
      t = a == b ? RepType::Real : RepType::Complex;
      const long long l = std::abs((a - b) * (1 + m * n));
      if (l == 0) {
        ker.text = "U(1)";
        ker.circle_flag = true;
      } else if (l > 1) {
        ker.text = z(l);
      }
      break;
    }
    case PairKind::Sp:
      t = a % 2 == 0 ? RepType::Real : RepType::Quaternionic;
      if (a % 2 == 0) ker.text = "Z2";
      break;
    case PairKind::SpSp1:
      if (a == 0) ker.text = "Z2xSp(1)";
      else if (a % 2 == 0) ker.text = "Z2xZ2";
      break;
    case PairKind::SpU1: {
      if (k != 0) t = RepType::Complex;
      else t = a % 2 == 0 ? RepType::Real : RepType::Quaternionic;
      const long long l = std::abs(k);
      std::string circle = l == 0 ? "U(1)" : z(l);
      ker.circle_flag = l == 0;
      if (a % 2 == 0) ker.text = "Z2x" + circle;
      else if (l != 1) ker.text = "Idx" + circle;
      break;
    }
    case PairKind::G2: break;
    case PairKind::Spin7:
      if (a % 2 == 0) ker.text = "Z2";
      break;
    case PairKind::Spin9:
      if (b % 2 == 0) ker.text = "Z2";
      break;
    case PairKind::U1:
      t = RepType::Complex;
      if (std::abs(k) > 1) ker.text = z(std::abs(k));
      break;
  }
  return {t, ker};
}

ClassOneRecord make_record(const SphericalPair& p, const ClassOneParams& q) {
  if (!table1_admits(p, q))
    throw std::invalid_argument("parameters (a=" + std::to_string(q.a) + ", b=" + std::to_string(q.b) +
                                ", k=" + std::to_string(q.k) + ") do not give a class one representation of " +
                                p.name());
  ClassOneRecord r;
  r.pair = p;
  r.params = q;
  r.highest_weight = table1_weight(p, q);
  r.dim = classone_dimension(r);
  std::tie(r.type, r.kernel) = type_and_kernel(r);
  r.m0 = p.kind == PairKind::Sp ? q.a + 1 : 1;
  if (p.kind == PairKind::U && q.a == q.b) r.noneffective = "kernel is the diagonal U(1)";
  if (p.kind == PairKind::SpSp1 && q.a == 0) r.noneffective = "kernel contains the Sp(1) factor";
  if (p.kind == PairKind::SpU1 && q.k == 0) r.noneffective = "kernel contains the U(1) factor";
  return r;
}

std::string ClassOneRecord::weight_label() const {
  const long long a = params.a, b = params.b, k = params.k;
  auto term = [](long long c, const std::string& w) -> std::string {
    if (c == 0) return "";
    return (c == 1 ? "" : std::to_string(c)) + w;
  };
  auto join = [](const std::string& x, const std::string& y) {
    if (x.empty()) return y.empty() ? std::string("0") : y;
    return y.empty() ? x : x + "+" + y;
  };
  switch (pair.kind) {
    case PairKind::SO:
    case PairKind::G2: return term(a, "w1");
    case PairKind::Spin7: return term(a, "w3");
    case PairKind::Spin9: return join(term(a, "w1"), term(b, "w4"));
    case PairKind::SU: return join(term(a, "w1"), term(b, "w" + std::to_string(pair.n - 1)));
    case PairKind::U: return highest_weight.str();
    case PairKind::Sp: return join(term(a, "w1"), term(b, "w2"));
    case PairKind::SpSp1: return "(" + join(term(a, "w1"), term(b, "w2")) + ")x" + join(term(a, "w1"), "");
    case PairKind::SpU1: return "(" + join(term(a, "w1"), term(b, "w2")) + ")xphi^" + std::to_string(k);
    case PairKind::U1: return "phi^" + std::to_string(k);
  }
  return "?";
}

RealForm realify(const ClassOneRecord& r) {
  RealForm f;
  switch (r.type) {
    case RepType::Real:
      f.real_degree = r.dim;
      f.complexification = "mu";
      f.real_m0 = r.m0;
      break;
    case RepType::Complex:
      f.real_degree = 2 * r.dim;
      f.complexification = "mu + mu*";
      f.real_m0 = 2 * r.m0;
      break;
    case RepType::Quaternionic:
      f.real_degree = 2 * r.dim;
      f.complexification = "mu + mu";
      f.real_m0 = 2 * r.m0;
      break;
  }
  if (r.type == RepType::Real && f.real_m0 == 1) f.diagram_case = 1;
  else if (r.type != RepType::Real && f.real_m0 == 2) f.diagram_case = 2;
  else f.diagram_case = 3;
  return f;
}

}  // namespace spherepair
