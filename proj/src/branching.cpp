#include "spherepair/branching.hpp"

#include "spherepair/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace spherepair {

RestrictionMap coordinate_projection(int dim, const std::vector<int>& keep) {
  RestrictionMap r;
  r.matrix = RatMat(static_cast<Eigen::Index>(keep.size()), dim);
  for (Eigen::Index i = 0; i < r.matrix.rows(); ++i)
    for (int j = 0; j < dim; ++j) r.matrix(i, j) = Rat(keep[i] == j ? 1 : 0);
  r.source = "R^" + std::to_string(dim);
  r.target = "R^" + std::to_string(keep.size());
  return r;
}

long long BranchingResult::at(const Weight& w) const {
  auto it = mult.find(w);
  return it == mult.end() ? 0 : it->second;
}

long long BranchingResult::total_dim(const RootSystemData& target) const {
  long long s = 0;
  for (const auto& [w, m] : mult) s += m * weyl_dim(target, w);
  return s;
}

namespace {

Rat rabs(const Rat& r) { return r.numerator() < 0 ? -r : r; }

// 0 for integral, 1 for strictly half-integral, throws otherwise
int integrality(const Weight& w) {
  int kind = -1;
  for (int i = 0; i < w.size(); ++i) {
    const long long d = w[i].denominator();
    const int k = d == 1 ? 0 : d == 2 ? 1 : 2;
    if (k == 2) throw std::invalid_argument("branch_so: coordinate not in (1/2)Z: " + w.str());
    if (kind >= 0 && k != kind) throw std::invalid_argument("branch_so: mixed integer and half-integer weight " + w.str());
    kind = k;
  }
  return kind < 0 ? 0 : kind;
}

}  // namespace

BranchingResult branch_so(int N, const Weight& lambda) {
  if (N < 3) throw std::invalid_argument("branch_so: N must be >= 3");
  const int k = N / 2;
  if (lambda.size() != k) throw std::invalid_argument("branch_so: weight has wrong length");
  integrality(lambda);
  const bool odd = N % 2 == 1;
  for (int i = 0; i + 1 < k; ++i)
    if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("branch_so: weight not dominant");
  if (odd && lambda[k - 1].numerator() < 0) throw std::invalid_argument("branch_so: weight not dominant");
  if (!odd && k >= 2 && lambda[k - 2] < rabs(lambda[k - 1])) throw std::invalid_argument("branch_so: weight not dominant");

  // ranges [lo_i, hi_i] for each target coordinate
  const int tk = odd ? k : k - 1;
  std::vector<Rat> lo(tk), hi(tk);
  for (int i = 0; i < tk; ++i) {
    hi[i] = lambda[i];
    if (odd) lo[i] = i + 1 < k ? lambda[i + 1] : -lambda[k - 1];
    else lo[i] = i + 1 < k - 1 ? lambda[i + 1] : rabs(lambda[k - 1]);
  }

  BranchingResult out;
  Weight c = Weight::zero(tk);
  std::function<void(int)> rec = [&](int i) {
    if (i == tk) {
      out.mult[c] += 1;
      return;
    }
    for (Rat v = lo[i]; v <= hi[i]; v += Rat(1)) {
      c[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

BranchingResult branch_u(const std::vector<long long>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1) throw std::invalid_argument("branch_u: empty weight");
  for (int i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("branch_u: weight not dominant");
  const long long total = std::accumulate(lambda.begin(), lambda.end(), 0LL);
  BranchingResult out;
  Weight key = Weight::zero(n);
  std::function<void(int, long long)> rec = [&](int i, long long sum) {
    if (i == n - 1) {
      key[0] = Rat(total - sum);
      out.mult[key] += 1;
      return;
    }
    for (long long v = lambda[i + 1]; v <= lambda[i]; ++v) {
      key[i + 1] = Rat(v);
      rec(i + 1, sum + v);
    }
  };
  rec(0, 0);
  return out;
}

long long count_ballbox(long long l, const std::vector<long long>& caps) {
  long long cap_sum = 0;
  for (long long q : caps) {
    if (q < 0) throw std::invalid_argument("count_ballbox: negative capacity");
    cap_sum += q;
  }
  if (l < 0 || l > cap_sum) return 0;
  std::vector<long long> ways(static_cast<std::size_t>(l) + 1, 0);
  ways[0] = 1;
  for (long long q : caps) {
    // sliding-window sum over the last q+1 entries
    std::vector<long long> next(ways.size(), 0);
    long long window = 0;
    for (long long s = 0; s <= l; ++s) {
      window += ways[s];
      if (s - q - 1 >= 0) window -= ways[s - q - 1];
      next[s] = window;
    }
    ways.swap(next);
  }
  return ways[l];
}

long long branch_sp_lepowsky(const std::vector<long long>& a, const std::vector<long long>& b) {
  const int n = static_cast<int>(a.size());
  if (n < 2) throw std::invalid_argument("branch_sp_lepowsky: n must be >= 2");
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("branch_sp_lepowsky: mu must have n entries");
  for (int i = 0; i + 1 < n; ++i)
    if (a[i] < a[i + 1]) throw std::invalid_argument("branch_sp_lepowsky: rho not dominant");
  if (a[n - 1] < 0) throw std::invalid_argument("branch_sp_lepowsky: rho not dominant");
  for (int i = 0; i + 2 < n; ++i)
    if (b[i] < b[i + 1]) throw std::invalid_argument("branch_sp_lepowsky: mu not dominant");
  if (b[n - 2] < 0 || b[n - 1] < 0) throw std::invalid_argument("branch_sp_lepowsky: mu not dominant");

  long long parity = 0;
  for (int i = 0; i < n; ++i) parity += a[i] + b[i];
  if (parity % 2 != 0) return 0;

  // A[0..n-1] hold A_1..A_n
  std::vector<long long> A(n);
  A[0] = a[0] - std::max(a[1], b[0]);
  for (int i = 1; i + 1 < n; ++i) A[i] = std::min(a[i], b[i - 1]) - std::max(a[i + 1], b[i]);
  A[n - 1] = std::min(a[n - 1], b[n - 2]);
  for (int i = 0; i + 1 < n; ++i)
    if (A[i] < 0) return 0;

  const std::vector<long long> caps(A.begin() + 1, A.end());
  const long long tail = std::accumulate(caps.begin(), caps.end(), 0LL);
  const long long bn = b[n - 1];
  const long long x1 = bn - A[0] + tail;
  const long long x2 = -bn - A[0] + tail;
  if (x1 % 2 != 0 || x2 % 2 != 0) throw InternalInconsistency("branch_sp_lepowsky: odd ball count");
  return count_ballbox(x1 / 2, caps) - count_ballbox(x2 / 2 - 1, caps);
}

BranchingResult branch_sp_full(const std::vector<long long>& a) {
  const int n = static_cast<int>(a.size());
  BranchingResult out;
  std::vector<long long> b(n, 0);
  std::function<void(int, long long)> rec = [&](int i, long long cap) {
    if (i == n - 1) {
      for (long long bn = 0; bn <= a[0]; ++bn) {
        b[n - 1] = bn;
        const long long m = branch_sp_lepowsky(a, b);
        if (m == 0) continue;
        if (m < 0) throw InternalInconsistency("branch_sp_full: negative multiplicity");
        out.mult[Weight(to_rat(b))] += m;
      }
      return;
    }
    for (long long v = 0; v <= cap; ++v) {
      b[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, a[0]);
  return out;
}

// ---------------------------------------------------------------- Kostant

struct KostantMemo {
  std::mutex lock;
  std::map<std::pair<std::size_t, Weight>, long long,
           bool (*)(const std::pair<std::size_t, Weight>&, const std::pair<std::size_t, Weight>&)>
      table{[](const std::pair<std::size_t, Weight>& x, const std::pair<std::size_t, Weight>& y) {
        if (x.first != y.first) return x.first < y.first;
        return lex_less(x.second.coords, y.second.coords);
      }};
  std::vector<RatMat> weyl;
  std::vector<int> signs;
};

namespace {

Rat phi(const BranchingSetup& s, const Weight& v) {
  Rat r(0);
  for (int i = 0; i < v.size(); ++i) r += s.functional[i] * v[i];
  return r;
}

RatMat lambda_squared() {
  RatMat m(4, 4);
  const Rat h(1, 2);
  m << h, h, h, h,
       h, h, -h, -h,
       h, -h, h, -h,
       -h, h, h, -h;
  return m;
}

void finish_setup(BranchingSetup& s) {
  std::vector<Weight> restricted;
  for (const auto& a : s.K.positive_roots) restricted.push_back(s.restriction(a));
  for (const auto& h : s.H.positive_roots) {
    auto it = std::find(restricted.begin(), restricted.end(), h);
    if (it == restricted.end()) throw InternalInconsistency("kostant_setup: H root not a restricted K root in " + s.name);
    restricted.erase(it);
  }
  for (const auto& w : restricted)
    if (w.is_zero()) throw InternalInconsistency("kostant_setup: zero restricted root in " + s.name);
  std::sort(restricted.begin(), restricted.end(), WeightLess{});
  s.sigma = restricted;

  const int d = s.H.dim;
  for (long long N = 2; N <= 64; ++N) {
    std::vector<Rat> f(d);
    long long p = 1;
    for (int j = d - 1; j >= 0; --j) {
      f[j] = Rat(p);
      p *= N;
    }
    s.functional = f;
    bool ok = true;
    for (const auto& w : s.sigma)
      if (phi(s, w).numerator() <= 0) ok = false;
    if (ok) break;
    s.functional.clear();
  }
  if (s.functional.empty()) throw InternalInconsistency("kostant_setup: no positive functional for " + s.name);

  s.memo = std::make_shared<KostantMemo>();
  s.memo->weyl = weyl_group_elements(s.K);
  for (const auto& w : s.memo->weyl) s.memo->signs.push_back(weyl_sign(s.K, w));
}

long long partition_rec(const BranchingSetup& s, const Weight& nu, std::size_t i) {
  const Rat f = phi(s, nu);
  if (f.numerator() < 0) return 0;
  if (f.numerator() == 0) return nu.is_zero() ? 1 : 0;
  if (i + 1 == s.sigma.size()) {
    const Rat k = f / phi(s, s.sigma[i]);
    if (k.denominator() != 1) return 0;
    return Rat(k) * s.sigma[i] == nu ? 1 : 0;
  }
  {
    std::lock_guard<std::mutex> g(s.memo->lock);
    auto it = s.memo->table.find({i, nu});
    if (it != s.memo->table.end()) return it->second;
  }
  long long total = 0;
  Weight rest = nu;
  while (phi(s, rest).numerator() >= 0) {
    total += partition_rec(s, rest, i + 1);
    rest = rest - s.sigma[i];
  }
  std::lock_guard<std::mutex> g(s.memo->lock);
  s.memo->table.emplace(std::make_pair(i, nu), total);
  return total;
}

}  // namespace

std::vector<std::string> kostant_pairs() { return {"g2-su3", "spin7-g2", "spin9-spin7"}; }

BranchingSetup kostant_setup(const std::string& pair) {
  BranchingSetup s;
  s.name = pair;
  if (pair == "g2-su3") {
    s.K = build_root_system(Family::G2, 2);
    const Basis sb = Basis::SimpleRoot;
    s.H = custom_root_system("A2<G2", s.K.gram,
                             {Weight::ints({3, 2}, sb), Weight::ints({3, 1}, sb), Weight::ints({0, 1}, sb)},
                             {Weight::ints({0, 1}, sb), Weight::ints({3, 1}, sb)}, sb);
    s.restriction.matrix = rat_identity(2);
    s.restriction.target_basis = sb;
  } else if (pair == "spin7-g2") {
    s.K = build_root_system(Family::B, 3);
    s.H = build_root_system(Family::G2, 2);
    s.restriction.matrix = RatMat(2, 3);
    // e1 -> 2a1+a2, e2 -> a1+a2, e3 -> a1
    s.restriction.matrix << Rat(2), Rat(1), Rat(1), Rat(1), Rat(1), Rat(0);
    s.restriction.target_basis = Basis::SimpleRoot;
  } else if (pair == "spin9-spin7") {
    s.K = build_root_system(Family::B, 4);
    s.H = build_root_system(Family::B, 3);
    // f-coordinates of a weight are lambda^2 applied to its e-coordinates; f_4 vanishes on spin(7)
    s.restriction.matrix = lambda_squared().topRows(3);
  } else {
    throw UnknownSelector("unknown Kostant pair '" + pair + "' (valid: g2-su3, spin7-g2, spin9-spin7)");
  }
  s.restriction.source = s.K.label;
  s.restriction.target = s.H.label;
  finish_setup(s);
  return s;
}

long long kostant_partition(const BranchingSetup& setup, const Weight& nu) {
  if (setup.sigma.empty()) return nu.is_zero() ? 1 : 0;
  return partition_rec(setup, nu, 0);
}

long long kostant_partition_series(const BranchingSetup& setup, const Weight& nu) {
  const Rat top = phi(setup, nu);
  if (top.numerator() < 0) return 0;
  std::map<Weight, long long, WeightLess> poly;
  poly[Weight::zero(nu.size(), nu.basis)] = 1;
  for (const auto& s : setup.sigma) {
    std::map<Weight, long long, WeightLess> next;
    for (const auto& [mono, c] : poly) {
      Weight m = mono;
      while (phi(setup, m) <= top) {
        next[m] += c;
        m = m + s;
      }
    }
    poly.swap(next);
  }
  auto it = poly.find(nu);
  return it == poly.end() ? 0 : it->second;
}

std::map<Weight, long long, WeightLess> kostant_enumerate(const BranchingSetup& setup, int max_parts) {
  std::map<Weight, long long, WeightLess> out;
  const std::size_t k = setup.sigma.size();
  std::function<void(std::size_t, int, const Weight&)> rec = [&](std::size_t i, int left, const Weight& acc) {
    if (i == k) {
      out[acc] += 1;
      return;
    }
    Weight cur = acc;
    for (int c = 0; c <= left; ++c) {
      rec(i + 1, left - c, cur);
      cur = cur + setup.sigma[i];
    }
  };
  rec(0, max_parts, Weight::zero(setup.H.dim, setup.restriction.target_basis));
  return out;
}

long long kostant_height(const BranchingSetup& setup, const Weight& nu) {
  Rat lo = phi(setup, setup.sigma.front());
  for (const auto& s : setup.sigma) lo = std::min(lo, phi(setup, s));
  const Rat h = phi(setup, nu) / lo;
  return h.numerator() < 0 ? -1 : h.numerator() / h.denominator();
}

long long kostant_branch(const BranchingSetup& setup, const Weight& rho, const Weight& mu) {
  if (!is_dominant(setup.K, rho)) throw std::invalid_argument("kostant_branch: rho not dominant");
  if (!is_dominant(setup.H, mu)) throw std::invalid_argument("kostant_branch: mu not dominant");
  const Weight shifted = rho + setup.K.delta;
  long long total = 0;
  for (std::size_t i = 0; i < setup.memo->weyl.size(); ++i) {
    const Weight w = apply(setup.memo->weyl[i], shifted) - setup.K.delta;
    total += setup.memo->signs[i] * kostant_partition(setup, setup.restriction(w) - mu);
  }
  if (total < 0) throw InternalInconsistency("kostant_branch: negative multiplicity");
  return total;
}

// ---------------------------------------------------------------- oracle

BranchingResult oracle_branch(const RootSystemData& K, const Weight& rho, const RestrictionMap& restriction,
                              const RootSystemData& H, std::size_t bound) {
  const WeightMultiplicityTable src = freudenthal_multiplicities(K, rho, bound);
  std::map<Weight, long long, WeightLess> residual;
  for (const auto& [w, m] : src.mult) residual[canonical(H, restriction(w))] += m;

  BranchingResult out;
  while (true) {
    while (!residual.empty() && residual.rbegin()->second == 0) residual.erase(std::prev(residual.end()));
    if (residual.empty()) break;
    const Weight top = residual.rbegin()->first;
    const long long m = residual.rbegin()->second;
    if (m < 0 || !is_dominant(H, top))
      throw InternalInconsistency("oracle_branch: peeling failed at " + top.str());
    out.mult[top] += m;
    const WeightMultiplicityTable t = freudenthal_multiplicities(H, top, bound);
    for (const auto& [w, k] : t.mult) {
      long long& r = residual[w];
      r -= m * k;
      if (r < 0) throw InternalInconsistency("oracle_branch: negative residual at " + w.str());
    }
    for (auto it = residual.begin(); it != residual.end();) {
      if (it->second == 0) it = residual.erase(it);
      else ++it;
    }
  }
  return out;
}

}  // namespace spherepair
