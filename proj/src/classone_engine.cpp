#include "spherepair/classone.hpp"

#include "spherepair/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spherepair {

namespace {

std::vector<long long> ints_of(const Weight& w) {
  std::vector<long long> v;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i].denominator() != 1) throw std::invalid_argument("expected integral weight " + w.str());
    v.push_back(w[i].numerator());
  }
  return v;
}

long long zero_mult(const BranchingResult& r) {
  long long s = 0;
  for (const auto& [w, m] : r.mult)
    if (w.is_zero()) s += m;
  return s;
}

RootSystemData so_system(int N) {
  if (N == 2) return build_root_system(Family::T, 1);
  if (N % 2) return build_root_system(Family::B, N / 2);
  return build_root_system(Family::D, N / 2);
}

const BranchingSetup& kostant_for(PairKind k) {
  static const BranchingSetup g2 = kostant_setup("g2-su3");
  static const BranchingSetup s7 = kostant_setup("spin7-g2");
  static const BranchingSetup s9 = kostant_setup("spin9-spin7");
  switch (k) {
    case PairKind::G2: return g2;
    case PairKind::Spin7: return s7;
    case PairKind::Spin9: return s9;
    default: throw std::logic_error("kostant_for: not an exceptional pair");
  }
}

// Sp(1)-weights of the representation b*w1: b, b-2, ..., -b
long long sp1_weights_with(long long b, const std::function<bool(long long)>& pred) {
  long long c = 0;
  for (long long w = -b; w <= b; w += 2)
    if (pred(w)) ++c;
  return c;
}

// sum over sp(n-1)-trivial components (0..0; b_n) of the Lepowsky decomposition
template <class F>
long long sum_sp_trivial(const std::vector<long long>& a, F per_bn) {
  long long total = 0;
  const BranchingResult full = branch_sp_full(a);
  for (const auto& [mu, mult] : full.mult) {
    bool head_zero = true;
    for (int i = 0; i + 1 < mu.size(); ++i) head_zero = head_zero && mu[i].numerator() == 0;
    if (head_zero) total += mult * per_bn(mu[mu.size() - 1].numerator());
  }
  return total;
}

RatMat zeros(int r, int c) {
  RatMat M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M(i, j) = Rat(0);
  return M;
}

}  // namespace

long long trivial_multiplicity(const SphericalPair& p, const Weight& rho) {
  const RootSystemData K = k_root_system(p);
  if (!is_dominant(K, rho)) throw std::invalid_argument("trivial_multiplicity: weight not dominant " + rho.str());
  const int n = p.n;
  switch (p.kind) {
    case PairKind::SO: return zero_mult(branch_so(n, rho));
    case PairKind::SU: {
      long long c = 0;
      for (const auto& [key, m] : branch_u(ints_of(canonical(K, rho))).mult) {
        bool constant = true;
        for (int i = 2; i < key.size(); ++i) constant = constant && key[i] == key[1];
        if (constant) c += m;
      }
      return c;
    }
    case PairKind::U: {
      // H-characters a^t det(B)^s are trivial iff (t, s) is a multiple of (m+1, m)
      long long c = 0;
      for (const auto& [key, mult] : branch_u(ints_of(rho)).mult) {
        bool constant = true;
        for (int i = 2; i < key.size(); ++i) constant = constant && key[i] == key[1];
        if (!constant) continue;
        const long long t = key[0].numerator(), s = key[1].numerator();
        if (t * p.m == s * (p.m + 1)) c += mult;
      }
      return c;
    }
    case PairKind::Sp: {
      const auto a = ints_of(rho);
      if (n == 1) return weyl_dim(K, rho);
      return sum_sp_trivial(a, [](long long bn) { return bn + 1; });
    }
    case PairKind::SpSp1: {
      auto a = ints_of(rho);
      const long long y = a.back();
      a.pop_back();
      if (n == 1) return a[0] == y ? 1 : 0;
      return sum_sp_trivial(a, [y](long long bn) { return bn == y ? 1LL : 0LL; });
    }
    case PairKind::SpU1: {
      auto a = ints_of(rho);
      const long long k = a.back();
      a.pop_back();
      const long long m = p.m;
      // the circle of H acts by z^(k - m w) on the Sp(1)-weight w
      auto count = [k, m](long long bn) { return sp1_weights_with(bn, [k, m](long long w) { return m * w == k; }); };
      if (n == 1) return count(a[0]);
      return sum_sp_trivial(a, count);
    }
    case PairKind::G2:
    case PairKind::Spin7:
    case PairKind::Spin9: {
      const BranchingSetup& s = kostant_for(p.kind);
      return kostant_branch(s, rho, Weight::zero(s.H.dim, s.H.basis));
    }
    case PairKind::U1: return 1;
  }
  throw std::logic_error("trivial_multiplicity");
}

long long trivial_multiplicity_oracle(const SphericalPair& p, const Weight& rho, std::size_t bound) {
  const RootSystemData K = k_root_system(p);
  const int n = p.n;
  RootSystemData H;
  RestrictionMap R;
  auto keep = [](int dim, int from, int count) {
    std::vector<int> idx;
    for (int i = 0; i < count; ++i) idx.push_back(from + i);
    return coordinate_projection(dim, idx);
  };
  switch (p.kind) {
    case PairKind::SO:
      H = so_system(n - 1);
      R = keep(K.dim, 0, H.dim);
      break;
    case PairKind::SU:
      H = build_root_system(Family::A, n - 2);
      R = keep(n, 1, n - 1);
      break;
    case PairKind::U:
      if (p.m == -1) {
        H = n == 2 ? build_root_system(Family::T, 1)
                   : direct_sum(build_root_system(Family::T, 1), build_root_system(Family::A, n - 2));
        R = keep(n, 0, H.dim);
      } else {
        // torus of U(n-1)_m parametrised by B; a = det(B)^(-m/(m+1)) on the Lie algebra
        H = build_root_system(Family::U, n - 1);
        R.matrix = zeros(n - 1, n);
        for (int j = 0; j < n - 1; ++j) {
          R.matrix(j, 0) = Rat(-p.m, p.m + 1);
          R.matrix(j, j + 1) = Rat(1);
        }
      }
      break;
    case PairKind::Sp:
      if (n == 1) return weyl_dim(K, rho);
      H = build_root_system(Family::C, n - 1);
      R = keep(n, 0, n - 1);
      break;
    case PairKind::SpSp1:
    case PairKind::SpU1: {
      const bool circle = p.kind == PairKind::SpU1;
      const RootSystemData last = build_root_system(circle ? Family::T : Family::C, 1);
      H = n == 1 ? last : direct_sum(build_root_system(Family::C, n - 1), last);
      R.matrix = zeros(n, n + 1);
      for (int i = 0; i + 1 < n; ++i) R.matrix(i, i) = Rat(1);
      R.matrix(n - 1, n - 1) = circle ? Rat(-p.m) : Rat(1);
      R.matrix(n - 1, n) = Rat(1);
      break;
    }
    case PairKind::G2:
    case PairKind::Spin7:
    case PairKind::Spin9: {
      const BranchingSetup& s = kostant_for(p.kind);
      H = s.H;
      R = s.restriction;
      break;
    }
    case PairKind::U1: return weyl_dim(K, rho);
  }
  return oracle_branch(K, rho, R, H, bound).at(Weight::zero(H.dim, H.basis));
}

std::vector<Weight> candidate_weights(const SphericalPair& p, long long c) {
  const RootSystemData K = k_root_system(p);
  std::vector<Weight> out;
  const int n = p.n;
  // every vector of r non-negative coefficients bounded by c
  auto boxes = [c](int r, const std::function<void(const std::vector<long long>&)>& f) {
    std::vector<long long> v(r, 0);
    while (true) {
      f(v);
      int i = 0;
      while (i < r && v[i] == c) v[i++] = 0;
      if (i == r) return;
      ++v[i];
    }
  };
  switch (p.kind) {
    case PairKind::SO: {
      // doubled coordinates: all even (tensor) or all odd (spin), non-increasing, first <= 2c;
      // for even n the last one may be negative
      const int k = K.dim;
      const bool even_n = n % 2 == 0;
      std::vector<long long> v(k);
      std::function<void(int)> rec = [&](int i) {
        if (i == k) {
          RatVec x(k);
          for (int j = 0; j < k; ++j) x[j] = Rat(v[j], 2);
          out.emplace_back(x);
          return;
        }
        const long long cap = i == 0 ? 2 * c : v[i - 1];
        const long long lo = even_n && i == k - 1 ? -cap : 0;
        for (long long t = lo; t <= cap; ++t) {
          if (i > 0 && (((t - v[0]) % 2) + 2) % 2 != 0) continue;
          v[i] = t;
          rec(i + 1);
        }
      };
      rec(0);
      break;
    }
    case PairKind::SU:
      boxes(n - 1, [&](const std::vector<long long>& v) { out.push_back(canonical(K, from_fundamental(K, v))); });
      break;
    case PairKind::U: {
      const long long L = c * (1 + std::abs(static_cast<long long>(p.m)));
      // for n = 2 the only gap is a + b
      auto gaps = [&](const std::function<void(const std::vector<long long>&)>& f) {
        if (n != 2) return boxes(n - 1, f);
        for (long long g = 0; g <= 2 * c; ++g) f({g});
      };
      gaps([&](const std::vector<long long>& v) {
        for (long long t = -L; t <= L; ++t) {
          std::vector<long long> w(n, t);
          for (int i = n - 2; i >= 0; --i) w[i] = w[i + 1] + v[i];
          out.emplace_back(to_rat(w));
        }
      });
      break;
    }
    case PairKind::Sp:
    case PairKind::SpSp1:
    case PairKind::SpU1: {
      const long long am = std::abs(static_cast<long long>(p.m));
      boxes(n, [&](const std::vector<long long>& v) {
        std::vector<long long> w(n, 0);
        for (int i = n - 1; i >= 0; --i) w[i] = (i + 1 < n ? w[i + 1] : 0) + v[i];
        if (p.kind == PairKind::Sp) {
          out.emplace_back(to_rat(w));
          return;
        }
        const long long lo = p.kind == PairKind::SpSp1 ? 0 : -c * am;
        const long long hi = p.kind == PairKind::SpSp1 ? c : c * am;
        for (long long e = lo; e <= hi; ++e) {
          auto x = w;
          x.push_back(e);
          out.emplace_back(to_rat(x));
        }
      });
      break;
    }
    case PairKind::G2:
    case PairKind::Spin7:
    case PairKind::Spin9:
      boxes(K.rank, [&](const std::vector<long long>& v) { out.push_back(from_fundamental(K, v)); });
      break;
    case PairKind::U1:
      for (long long k = -c; k <= c; ++k) out.push_back(Weight::ints({k}));
      break;
  }
  return out;
}

std::vector<ClassOneParams> table1_parameters(const SphericalPair& p, long long c) {
  std::vector<ClassOneParams> out;
  long long kmax = 0;
  if (p.kind == PairKind::SpU1) kmax = c * std::abs(static_cast<long long>(p.m));
  if (p.kind == PairKind::U1) kmax = c;
  const long long amax = p.kind == PairKind::U1 ? 0 : c;
  for (long long a = 0; a <= amax; ++a)
    for (long long b = 0; b <= amax; ++b)
      for (long long k = -kmax; k <= kmax; ++k) {
        ClassOneParams q{a, b, k};
        if (table1_admits(p, q)) out.push_back(q);
      }
  return out;
}

namespace {
bool params_less(const ClassOneParams& x, const ClassOneParams& y) {
  return std::tie(x.a, x.b, x.k) < std::tie(y.a, y.b, y.k);
}
}  // namespace

std::vector<ClassOneRecord> classify_pair(const SphericalPair& p, long long coeff_bound) {
  std::vector<ClassOneRecord> found;
  for (const Weight& rho : candidate_weights(p, coeff_bound)) {
    if (rho.is_zero()) continue;
    const long long m0 = trivial_multiplicity(p, rho);
    if (m0 == 0) continue;
    const auto q = table1_params(p, rho);
    if (!q) throw InternalInconsistency(p.name() + ": branching finds class one " + rho.str() + " outside the closed form");
    ClassOneRecord r = make_record(p, *q);
    if (r.m0 != m0)
      throw InternalInconsistency(p.name() + ": trivial multiplicity " + std::to_string(m0) + " for " + rho.str() +
                                  ", closed form says " + std::to_string(r.m0));
    // the weight box can be wider than the parameter box (U(2)); keep the requested range
    if (r.params.a > coeff_bound || r.params.b > coeff_bound) continue;
    found.push_back(r);
  }
  std::sort(found.begin(), found.end(),
            [](const ClassOneRecord& x, const ClassOneRecord& y) { return params_less(x.params, y.params); });
  const auto expected = table1_parameters(p, coeff_bound);
  bool same = expected.size() == found.size();
  for (std::size_t i = 0; same && i < expected.size(); ++i) same = expected[i] == found[i].params;
  if (!same) throw InternalInconsistency(p.name() + ": branching and closed form disagree on the class one set");
  return found;
}

RepType frobenius_schur_type(const SphericalPair& p, const Weight& lambda) {
  const RootSystemData K = k_root_system(p);
  const Weight dual = canonical(K, dominant_conjugate(K, -lambda));
  if (dual != canonical(K, lambda)) return RepType::Complex;
  Rat s(0);
  for (const auto& a : K.positive_roots) s += coroot_pairing(K, lambda, a);
  if (s.denominator() != 1) throw InternalInconsistency("frobenius_schur_type: <lambda, 2 delta-check> not integral");
  return s.numerator() % 2 == 0 ? RepType::Real : RepType::Quaternionic;
}

bool acts_trivially(const SphericalPair& p, const Weight& lambda, const Weight& x) {
  (void)p;
  Rat s(0);
  for (int i = 0; i < lambda.size(); ++i) s += lambda[i] * x[i];
  return s.denominator() == 1;
}

std::optional<std::vector<Weight>> central_probe(const SphericalPair& p, const std::vector<Weight>& summands) {
  const RootSystemData K = k_root_system(p);
  const int d = K.dim;
  std::vector<Weight> out;
  auto constant = [d](const Rat& v) {
    Weight w = Weight::zero(d);
    for (int i = 0; i < d; ++i) w[i] = v;
    return w;
  };
  // gcd of the charges of a circle factor; 0 if the circle acts trivially
  auto charge_gcd = [&](const std::function<long long(const Weight&)>& charge) {
    long long g = 0;
    for (const auto& s : summands) g = std::gcd(g, std::abs(charge(s)));
    return g;
  };
  switch (p.kind) {
    case PairKind::SO:
      out.push_back(Weight::zero(d));
      if (p.n % 2 == 0) out.push_back(constant(Rat(1, 2)));
      break;
    case PairKind::SU:
      for (int j = 0; j < p.n; ++j) out.push_back(constant(Rat(j, p.n)));
      break;
    case PairKind::U: {
      const long long g = charge_gcd([](const Weight& w) {
        Rat s(0);
        for (int i = 0; i < w.size(); ++i) s += w[i];
        return s.numerator();
      });
      if (g == 0) return std::nullopt;
      for (long long j = 0; j < g; ++j) out.push_back(constant(Rat(j, g)));
      break;
    }
    case PairKind::Sp:
      out.push_back(Weight::zero(d));
      out.push_back(constant(Rat(1, 2)));
      break;
    case PairKind::SpSp1:
      for (int e1 : {0, 1})
        for (int e2 : {0, 1}) {
          Weight w = constant(Rat(e1, 2));
          w[d - 1] = Rat(e2, 2);
          out.push_back(w);
        }
      break;
    case PairKind::SpU1: {
      const long long g = charge_gcd([d](const Weight& w) { return w[d - 1].numerator(); });
      if (g == 0) return std::nullopt;
      for (int e : {0, 1})
        for (long long j = 0; j < 2 * g; ++j) {
          Weight w = constant(Rat(e, 2));
          w[d - 1] = Rat(j, 2 * g);
          out.push_back(w);
        }
      break;
    }
    case PairKind::G2: out.push_back(Weight::zero(d, Basis::SimpleRoot)); break;
    case PairKind::Spin7:
    case PairKind::Spin9: {
      out.push_back(Weight::zero(d));
      Weight e1 = Weight::zero(d);
      e1[0] = Rat(1);
      out.push_back(e1);
      break;
    }
    case PairKind::U1: {
      const long long g = charge_gcd([](const Weight& w) { return w[0].numerator(); });
      if (g == 0) return std::nullopt;
      for (long long j = 0; j < g; ++j) out.push_back(Weight(RatVec{{Rat(j, g)}}));
      break;
    }
  }
  return out;
}

std::string trivial_factor(const SphericalPair& p, const std::vector<Weight>& summands) {
  const int n = p.n;
  auto all = [&](const std::function<bool(const Weight&)>& f) {
    return std::all_of(summands.begin(), summands.end(), f);
  };
  auto head_zero = [n](const Weight& w) {
    for (int i = 0; i < n; ++i)
      if (w[i].numerator() != 0) return false;
    return true;
  };
  switch (p.kind) {
    case PairKind::SO:
      if (n == 4) {
        if (all([](const Weight& w) { return w[0] == w[1]; })) return "SU(2) factor of SO(4)";
        if (all([](const Weight& w) { return w[0] == -w[1]; })) return "SU(2) factor of SO(4)";
      }
      break;
    case PairKind::U:
      if (all([n](const Weight& w) {
            for (int i = 1; i < n; ++i)
              if (w[i] != w[0]) return false;
            return true;
          }))
        return "SU(" + std::to_string(n) + ") factor";
      break;
    case PairKind::SpSp1:
      if (all([n](const Weight& w) { return w[n].numerator() == 0; })) return "Sp(1) factor";
      if (all(head_zero)) return "Sp(" + std::to_string(n) + ") factor";
      break;
    case PairKind::SpU1:
      if (all(head_zero)) return "Sp(" + std::to_string(n) + ") factor";
      break;
    default: break;
  }
  if (all([](const Weight& w) { return w.is_zero(); })) return "whole group";
  return "";
}

}  // namespace spherepair
