#include "spherepair/classone.hpp"

#include "spherepair/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace spherepair {

TableData classification_table(int which) {
  TableData t;
  switch (which) {
    case 1:
      t.caption = "Complex class one representations of spherical pairs";
      t.header = {"K", "H", "ρ", "condition", "n"};
      t.rows = {
          {"SO(n)", "SO(n−1)", "aϖ₁", "a ≥ 1", "n ≥ 3"},
          {"SU(n)", "SU(n−1)", "aϖ₁ + bϖₙ₋₁", "a+b ≥ 1", "n ≥ 3"},
          {"U(n)", "U(n−1)ₘ", "ae₁ − beₙ + m(a−b)(e₁ + ⋯ + eₙ)", "a+b ≥ 1", "n ≥ 2"},
          {"Sp(n)", "Sp(n−1)", "aϖ₁ + bϖ₂", "a+b ≥ 1", "n ≥ 1"},
          {"Sp(n)×Sp(1)", "Sp(n−1)×Sp(1)", "(aϖ₁ + bϖ₂)⊗aϖ₁", "a+b ≥ 1", "n ≥ 1"},
          {"Sp(n)×U(1)", "Sp(n−1)×U(1)ₘ", "(aϖ₁ + bϖ₂)⊗φᵏ", "(S)", "n ≥ 1"},
          {"G₂", "SU(3)", "aϖ₁", "a ≥ 1", ""},
          {"Spin(7)", "G₂", "aϖ₃", "a ≥ 1", ""},
          {"Spin(9)", "Spin(7)", "aϖ₁ + bϖ₄", "a+b ≥ 1", ""},
          {"U(1)", "{1}", "φᵏ", "k ≠ 0", ""},
      };
      break;
    case 2:
      t.caption = "Type and non-trivial kernel of class one representations";
      t.header = {"K", "ρ", "Type", "Z"};
      t.rows = {
          {"SO(n)", "aϖ₁", "real", "ℤ₂: if both n and a are even"},
          {"SU(n)", "aϖ₁ + bϖₙ₋₁", "real: if a=b; complex: otherwise", "ℤₗ, l = gcd(a+b, n)"},
          {"U(n)", "ae₁ − beₙ + m(a−b)(e₁ + ⋯ + eₙ)", "real: if a=b; complex: otherwise",
           "ℤ|(a−b)(1+mn)|: if a≠b"},
          {"Sp(n)", "aϖ₁ + bϖ₂", "real: a is even; quaternionic: otherwise", "ℤ₂: if a is even"},
          {"Sp(n)×Sp(1)", "(aϖ₁ + bϖ₂)⊗aϖ₁", "real", "ℤ₂×ℤ₂: if a≠0 is even; ℤ₂×Sp(1): if a=0"},
          {"Sp(n)×U(1)", "(aϖ₁ + bϖ₂)⊗φᵏ", "complex: k≠0; real: k=0 and a is even; quaternionic: otherwise",
           "Id×ℤ|k|: if a is odd; ℤ₂×ℤ|k|: if a is even"},
          {"G₂", "aϖ₁", "real", "—"},
          {"Spin(7)", "aϖ₃", "real", "ℤ₂: if a is even"},
          {"Spin(9)", "aϖ₁ + bϖ₄", "real", "ℤ₂: if b is even"},
          {"U(1)", "φᵏ", "complex", "ℤ|k|: if |k|>1"},
      };
      break;
    case 3:
      t.caption = "Orthogonal class one representations with small dimension";
      t.header = {"K", "H", "ρ", "l", "s+1", "k₀(s+1)"};
      t.rows = {
          {"SO(n)", "SO(n−1)", "ϖ₁", "n", "n", ""},
          {"SU(n)", "SU(n−1)", "[ϖ₁]ℝ", "2n", "2n", "4n"},
          {"U(n)", "U(n−1)ₘ", "[e₁ + m(e₁ + ⋯ + eₙ)]ℝ", "2n", "2n", "4n"},
          {"Sp(n)", "Sp(n−1)", "[ϖ₁]ℝ", "4n", "4n", "16n"},
          {"Sp(n)×Sp(1)", "Sp(n−1)×Sp(1)", "ϖ₁⊗ϖ₁", "4n", "4n", ""},
          {"Sp(n)×U(1)", "Sp(n−1)×U(1)ₘ", "[ϖ₁⊗φᵏ]ℝ", "4n", "4n", "8n or 16n"},
          {"G₂", "SU(3)", "ϖ₁", "7", "7", ""},
          {"Spin(7)", "G₂", "ϖ₃", "8", "8", ""},
          {"Spin(9)", "Spin(7)", "ϖ₁, ϖ₄", "9, 16", "16", ""},
          {"U(2)", "U(1)ₘ", "e₁ − e₂", "3", "4", ""},
          {"Sp(2)", "Sp(1)", "ϖ₂", "5", "8", ""},
          {"Sp(1)", "{1}", "2ϖ₁", "3", "4", ""},
          {"U(1)", "{1}", "[φᵏ]ℝ", "2", "2", "4"},
          {"U(2)", "U(1)ₘ", "[2e₁ + 2m(e₁+e₂)]ℝ, [3e₁ + 3m(e₁+e₂)]ℝ", "6, 8", "4", "8"},
          {"U(3)", "U(2)ₘ", "[2e₁ + 2m(e₁ + e₂ + e₃)]ℝ", "12", "6", "12"},
          {"SU(3)", "SU(2)", "[2ϖ₁]ℝ", "12", "6", "12"},
          {"Sp(2)", "Sp(1)", "[ϖ₁ + ϖ₂]ℝ", "32", "8", "32"},
          {"Sp(1)", "{1}", "[3ϖ₁]ℝ, [5ϖ₁]ℝ, [7ϖ₁]ℝ", "8, 12, 16", "4", "16"},
      };
      break;
    case 4:
      t.caption = "Complex class one representations with small dimension";
      t.header = {"K", "H", "ρ", "l", "s+1"};
      t.rows = {
          {"SU(n)", "SU(n−1)", "ϖ₁, ϖₙ₋₁", "n, n", "2n"},
          {"U(n)", "U(n−1)", "e₁, −eₙ", "n, n", "2n"},
          {"Sp(n)", "Sp(n−1)", "ϖ₁", "2n", "4n"},
          {"Sp(n)×U(1)", "Sp(n−1)×U(1)ₘ", "ϖ₁⊗φᵏ", "2n", "4n"},
      };
      break;
    case 5:
      t.caption = "Quaternionic class one representations with 4l ≤ s+1";
      t.header = {"K", "H", "ρ", "l", "s+1"};
      t.rows = {{"Sp(n)", "Sp(n−1)", "ϖ₁", "n", "4n"}};
      break;
    default: throw UnknownSelector("unknown table " + std::to_string(which) + "; valid tables: 1, 2, 3, 4, 5");
  }
  return t;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_table(const TableData& t, const std::string& format) {
  std::ostringstream os;
  if (format == "markdown") {
    os << "**" << t.caption << "**\n\n|";
    for (const auto& h : t.header) os << ' ' << h << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& r : t.rows) {
      os << '|';
      for (const auto& c : r) os << ' ' << c << " |";
      os << '\n';
    }
  } else if (format == "csv") {
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_cell(t.header[i]);
    os << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
      os << '\n';
    }
  } else {
    throw UnknownSelector("unknown table format '" + format + "'; valid formats: markdown, csv");
  }
  return os.str();
}

std::vector<SmallRep> enumerate_small_reps(Field f, int n_max) {
  constexpr long long kParam = 9;
  std::vector<SphericalPair> pairs;
  for (int n = 1; n <= n_max; ++n) {
    if (n >= 3) {
      pairs.push_back(make_pair(PairKind::SO, n));
      pairs.push_back(make_pair(PairKind::SU, n));
    }
    if (n >= 2)
      for (int m = -2; m <= 2; ++m) pairs.push_back(make_pair(PairKind::U, n, m));
    pairs.push_back(make_pair(PairKind::Sp, n));
    // n = 1 of the two product families only re-covers SO(4)/SO(3) and U(2)/U(1)_m
    if (n >= 2) {
      pairs.push_back(make_pair(PairKind::SpSp1, n));
      for (int m : {-2, -1, 1, 2}) pairs.push_back(make_pair(PairKind::SpU1, n, m));
    }
  }
  for (PairKind k : {PairKind::G2, PairKind::Spin7, PairKind::Spin9, PairKind::U1}) pairs.push_back(make_pair(k));

  std::vector<SmallRep> out;
  for (const auto& p : pairs) {
    if (f != Field::R && p.sphere_dim() < 2) continue;
    const long long s1 = p.sphere_dim() + 1;
    for (const auto& q : table1_parameters(p, kParam)) {
      // a factor acting trivially: the representation is one of Sp(n)/Sp(n-1)
      if (p.kind == PairKind::SpSp1 && q.a == 0) continue;
      if (p.kind == PairKind::SpU1 && q.k == 0) continue;
      const ClassOneRecord r = make_record(p, q);
      SmallRep s{p, q, r.type, 0, 0};
      switch (f) {
        case Field::R: {
          if (r.type == RepType::Complex) {
            // [mu]_R = [mu*]_R: keep one of each dual pair
            const bool ab_pair = p.kind == PairKind::U || p.kind == PairKind::SU;
            if (ab_pair && q.a < q.b) continue;
            if (!ab_pair && q.k < 0) continue;
          }
          const long long k0 = r.type == RepType::Real ? 1 : (r.type == RepType::Complex ? 2 : 4);
          s.degree = realify(r).real_degree;
          s.bound = k0 * s1;
          break;
        }
        case Field::C:
          s.degree = r.dim;
          s.bound = s1;
          if (2 * s.degree > s1) continue;
          break;
        case Field::H:
          if (r.type != RepType::Quaternionic) continue;
          s.degree = r.dim / 2;
          s.bound = s1;
          if (4 * s.degree > s1) continue;
          break;
      }
      if (f == Field::R && s.degree > s.bound) continue;
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace spherepair
