#include "spherepair/classone.hpp"

#include "spherepair/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spherepair {

namespace {

long long to_ll(const Rat& r) {
  if (r.denominator() != 1) throw std::invalid_argument("expected an integer, got " + to_string(r));
  return r.numerator();
}

std::string num(long long v) { return std::to_string(v); }

RootSystemData so_system(int N) {
  if (N == 2) return build_root_system(Family::T, 1);
  if (N % 2) return build_root_system(Family::B, N / 2);
  return build_root_system(Family::D, N / 2);
}

// Sp(n) weight a w1 + b w2 in e-coordinates, n entries
std::vector<long long> sp_coords(int n, long long a, long long b) {
  std::vector<long long> v(n, 0);
  v[0] = a + b;
  if (n > 1) v[1] = b;
  return v;
}

}  // namespace

std::string rep_type_name(RepType t) {
  switch (t) {
    case RepType::Real: return "real";
    case RepType::Complex: return "complex";
    case RepType::Quaternionic: return "quaternionic";
  }
  return "?";
}

std::string field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

int SphericalPair::sphere_dim() const {
  switch (kind) {
    case PairKind::SO: return n - 1;
    case PairKind::SU:
    case PairKind::U: return 2 * n - 1;
    case PairKind::Sp:
    case PairKind::SpSp1:
    case PairKind::SpU1: return 4 * n - 1;
    case PairKind::G2: return 6;
    case PairKind::Spin7: return 7;
    case PairKind::Spin9: return 15;
    case PairKind::U1: return 1;
  }
  return 0;
}

std::string SphericalPair::K_name() const {
  const std::string N = num(n);
  switch (kind) {
    case PairKind::SO: return "SO(" + N + ")";
    case PairKind::SU: return "SU(" + N + ")";
    case PairKind::U: return "U(" + N + ")";
    case PairKind::Sp: return "Sp(" + N + ")";
    case PairKind::SpSp1: return "Sp(" + N + ")xSp(1)";
    case PairKind::SpU1: return "Sp(" + N + ")xU(1)";
    case PairKind::G2: return "G2";
    case PairKind::Spin7: return "Spin(7)";
    case PairKind::Spin9: return "Spin(9)";
    case PairKind::U1: return "U(1)";
  }
  return "?";
}

std::string SphericalPair::H_name() const {
  const std::string N1 = num(n - 1);
  switch (kind) {
    case PairKind::SO: return "SO(" + N1 + ")";
    case PairKind::SU: return "SU(" + N1 + ")";
    case PairKind::U: return "U(" + N1 + ")_" + num(m);
    case PairKind::Sp: return "Sp(" + N1 + ")";
    case PairKind::SpSp1: return "Sp(" + N1 + ")xSp(1)";
    case PairKind::SpU1: return "Sp(" + N1 + ")xU(1)_" + num(m);
    case PairKind::G2: return "SU(3)";
    case PairKind::Spin7: return "G2";
    case PairKind::Spin9: return "Spin(7)";
    case PairKind::U1: return "{1}";
  }
  return "?";
}

std::string SphericalPair::name() const { return K_name() + "/" + H_name(); }

std::string SphericalPair::selector() const {
  switch (kind) {
    case PairKind::SO: return "so:" + num(n);
    case PairKind::SU: return "su:" + num(n);
    case PairKind::U: return "u:" + num(n) + ":" + num(m);
    case PairKind::Sp: return "sp:" + num(n);
    case PairKind::SpSp1: return "spsp1:" + num(n);
    case PairKind::SpU1: return "spu1:" + num(n) + ":" + num(m);
    case PairKind::G2: return "g2";
    case PairKind::Spin7: return "spin7";
    case PairKind::Spin9: return "spin9";
    case PairKind::U1: return "u1";
  }
  return "?";
}

std::string pair_selector_help() {
  return "valid pair selectors: so:N (N>=3), su:N (N>=3), u:N:M (N>=2), sp:N (N>=1), spsp1:N (N>=1), "
         "spu1:N:M (N>=1, M!=0), g2, spin7, spin9, u1";
}

SphericalPair make_pair(PairKind kind, int n, int m) {
  SphericalPair p;
  p.kind = kind;
  p.n = n;
  p.m = m;
  bool ok = true;
  switch (kind) {
    case PairKind::SO: ok = n >= 3; p.m = 0; break;
    case PairKind::SU: ok = n >= 3; p.m = 0; break;
    case PairKind::U: ok = n >= 2; break;
    case PairKind::Sp:
    case PairKind::SpSp1: ok = n >= 1; p.m = 0; break;
    case PairKind::SpU1: ok = n >= 1 && m != 0; break;
    case PairKind::G2:
    case PairKind::Spin7:
    case PairKind::Spin9:
    case PairKind::U1: p.n = 1; p.m = 0; break;
  }
  if (!ok) throw UnknownSelector("pair parameters out of range; " + pair_selector_help());
  return p;
}

SphericalPair parse_pair(const std::string& selector) {
  std::vector<std::string> parts;
  std::stringstream ss(selector);
  for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
  if (parts.empty()) throw UnknownSelector("empty pair selector; " + pair_selector_help());
  std::vector<int> args;
  try {
    for (std::size_t i = 1; i < parts.size(); ++i) {
      std::size_t used = 0;
      args.push_back(std::stoi(parts[i], &used));
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    }
  } catch (const std::exception&) {
    throw UnknownSelector("malformed pair selector '" + selector + "'; " + pair_selector_help());
  }
  const std::string& head = parts[0];
  auto need = [&](std::size_t count) {
    if (args.size() != count) throw UnknownSelector("pair selector '" + selector + "' expects " + num(count) +
                                                    " parameter(s); " + pair_selector_help());
  };
  if (head == "so") return need(1), make_pair(PairKind::SO, args[0]);
  if (head == "su") return need(1), make_pair(PairKind::SU, args[0]);
  if (head == "u") return need(2), make_pair(PairKind::U, args[0], args[1]);
  if (head == "sp") return need(1), make_pair(PairKind::Sp, args[0]);
  if (head == "spsp1") return need(1), make_pair(PairKind::SpSp1, args[0]);
  if (head == "spu1") return need(2), make_pair(PairKind::SpU1, args[0], args[1]);
  if (head == "g2") return need(0), make_pair(PairKind::G2);
  if (head == "spin7") return need(0), make_pair(PairKind::Spin7);
  if (head == "spin9") return need(0), make_pair(PairKind::Spin9);
  if (head == "u1") return need(0), make_pair(PairKind::U1);
  throw UnknownSelector("unknown pair '" + selector + "'; " + pair_selector_help());
}

std::vector<SphericalPair> registered_pairs() {
  return {make_pair(PairKind::SO, 3),    make_pair(PairKind::SU, 3),        make_pair(PairKind::U, 2, 1),
          make_pair(PairKind::Sp, 2),    make_pair(PairKind::SpSp1, 2),     make_pair(PairKind::SpU1, 2, 1),
          make_pair(PairKind::G2),       make_pair(PairKind::Spin7),        make_pair(PairKind::Spin9),
          make_pair(PairKind::U1)};
}

RootSystemData k_root_system(const SphericalPair& p) {
  switch (p.kind) {
    case PairKind::SO: return so_system(p.n);
    case PairKind::SU: return build_root_system(Family::A, p.n - 1);
    case PairKind::U: return build_root_system(Family::U, p.n);
    case PairKind::Sp: return build_root_system(Family::C, p.n);
    case PairKind::SpSp1: return direct_sum(build_root_system(Family::C, p.n), build_root_system(Family::C, 1));
    case PairKind::SpU1: return direct_sum(build_root_system(Family::C, p.n), build_root_system(Family::T, 1));
    case PairKind::G2: return build_root_system(Family::G2, 2);
    case PairKind::Spin7: return build_root_system(Family::B, 3);
    case PairKind::Spin9: return build_root_system(Family::B, 4);
    case PairKind::U1: return build_root_system(Family::T, 1);
  }
  throw std::logic_error("k_root_system");
}

bool table1_admits(const SphericalPair& p, const ClassOneParams& q) {
  if (q.a < 0 || q.b < 0) return false;
  const bool one_param = q.b == 0 && q.k == 0;
  switch (p.kind) {
    case PairKind::SO:
    case PairKind::G2:
    case PairKind::Spin7: return q.a >= 1 && one_param;
    case PairKind::SU:
    case PairKind::U:
    case PairKind::Spin9: return q.a + q.b >= 1 && q.k == 0;
    case PairKind::Sp:
    case PairKind::SpSp1: return q.a + q.b >= 1 && q.k == 0 && (p.n > 1 || q.b == 0);
    case PairKind::SpU1: {
      if (q.a + q.b < 1 || (p.n == 1 && q.b != 0)) return false;
      const long long am = std::abs(static_cast<long long>(p.m));
      if (q.k % am != 0) return false;
      const long long j = q.k / am;
      return (q.a - j) % 2 == 0 && std::abs(j) <= q.a;
    }
    case PairKind::U1: return q.a == 0 && q.b == 0 && q.k != 0;
  }
  return false;
}

Weight table1_weight(const SphericalPair& p, const ClassOneParams& q) {
  const RootSystemData K = k_root_system(p);
  const long long a = q.a, b = q.b, k = q.k;
  switch (p.kind) {
    case PairKind::SO: {
      Weight w = Weight::zero(K.dim);
      w[0] = Rat(a);
      return w;
    }
    case PairKind::SU: {
      std::vector<long long> c(p.n - 1, 0);
      c.front() += a;
      c.back() += b;
      return canonical(K, from_fundamental(K, c));
    }
    case PairKind::U: {
      std::vector<long long> v(p.n, p.m * (a - b));
      v.front() += a;
      v.back() -= b;
      return Weight(to_rat(v));
    }
    case PairKind::Sp: return Weight(to_rat(sp_coords(p.n, a, b)));
    case PairKind::SpSp1:
    case PairKind::SpU1: {
      auto v = sp_coords(p.n, a, b);
      v.push_back(p.kind == PairKind::SpSp1 ? a : k);
      return Weight(to_rat(v));
    }
    case PairKind::G2: return from_fundamental(K, {a, 0});
    case PairKind::Spin7: return from_fundamental(K, {0, 0, a});
    case PairKind::Spin9: return from_fundamental(K, {a, 0, 0, b});
    case PairKind::U1: return Weight::ints({k});
  }
  throw std::logic_error("table1_weight");
}

std::optional<ClassOneParams> table1_params(const SphericalPair& p, const Weight& rho) {
  const RootSystemData K = k_root_system(p);
  if (rho.size() != K.dim) return std::nullopt;
  ClassOneParams q;
  const int n = p.n;
  try {
    switch (p.kind) {
      case PairKind::SO: q.a = to_ll(rho[0]); break;
      case PairKind::SU: {
        const auto d = dynkin_labels(K, rho);
        q.a = to_ll(d.front());
        q.b = to_ll(d.back());
        break;
      }
      case PairKind::U: {
        Rat sum(0);
        for (int i = 0; i < n; ++i) sum += rho[i];
        const Rat diff = sum / Rat(1 + static_cast<long long>(p.m) * n);  // a - b
        const Rat tot = rho[0] - rho[n - 1];                               // a + b
        q.a = to_ll((tot + diff) / Rat(2));
        q.b = to_ll((tot - diff) / Rat(2));
        break;
      }
      case PairKind::Sp:
      case PairKind::SpSp1:
      case PairKind::SpU1:
        q.a = to_ll(n > 1 ? rho[0] - rho[1] : rho[0]);
        q.b = n > 1 ? to_ll(rho[1]) : 0;
        if (p.kind == PairKind::SpU1) q.k = to_ll(rho[n]);
        break;
      case PairKind::G2:
      case PairKind::Spin7:
      case PairKind::Spin9: {
        const auto d = dynkin_labels(K, rho);
        if (p.kind == PairKind::Spin7) {
          q.a = to_ll(d[2]);
        } else {
          q.a = to_ll(d[0]);
          if (p.kind == PairKind::Spin9) q.b = to_ll(d[3]);
        }
        break;
      }
      case PairKind::U1: q.k = to_ll(rho[0]); break;
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (!table1_admits(p, q)) return std::nullopt;
  if (table1_weight(p, q) != canonical(K, rho)) return std::nullopt;
  return q;
}

}  // namespace spherepair
