#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherepair/classone.hpp"
#include "spherepair/errors.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

using namespace spherepair;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<ClassOneParams> params_of(const std::vector<ClassOneRecord>& rs) {
  std::vector<ClassOneParams> out;
  for (const auto& r : rs) out.push_back(r.params);
  return out;
}

}  // namespace

TEST_CASE("pair selectors") {
  CHECK(parse_pair("so:5").name() == "SO(5)/SO(4)");
  CHECK(parse_pair("so:5").sphere_dim() == 4);
  CHECK(parse_pair("u:3:-1").name() == "U(3)/U(2)_-1");
  CHECK(parse_pair("spu1:2:2").sphere_dim() == 7);
  CHECK(parse_pair("spin9").sphere_dim() == 15);
  CHECK(parse_pair("g2").selector() == "g2");
  for (const auto& p : registered_pairs()) CHECK(parse_pair(p.selector()).name() == p.name());
  CHECK_THROWS_AS(parse_pair("f4"), UnknownSelector);
  CHECK_THROWS_AS(parse_pair("so:2"), UnknownSelector);
  CHECK_THROWS_AS(parse_pair("spu1:2:0"), UnknownSelector);
  CHECK_THROWS_AS(parse_pair("so:x"), UnknownSelector);
  CHECK_THROWS_AS(parse_pair("so"), UnknownSelector);
}

TEST_CASE("classify_pair examples") {
  auto so5 = classify_pair(parse_pair("so:5"), 3);
  REQUIRE(so5.size() == 3);
  for (long long a = 1; a <= 3; ++a) CHECK(so5[a - 1].params.a == a);

  auto spsp = classify_pair(parse_pair("spsp1:2"), 2);
  CHECK(params_of(spsp) == std::vector<ClassOneParams>{{0, 1, 0}, {0, 2, 0}, {1, 0, 0}, {1, 1, 0}, {1, 2, 0},
                                                      {2, 0, 0}, {2, 1, 0}, {2, 2, 0}});
  for (const auto& r : spsp) CHECK(r.highest_weight[2] == Rat(r.params.a));

  auto spu = parse_pair("spu1:2:1");
  CHECK(table1_admits(spu, {1, 0, 1}));
  CHECK_FALSE(table1_admits(spu, {1, 0, 2}));
  CHECK(trivial_multiplicity(spu, table1_weight(spu, {1, 0, 1})) == 1);
  CHECK(trivial_multiplicity(spu, Weight::ints({1, 0, 2})) == 0);
  CHECK(trivial_multiplicity(spu, Weight::ints({1, 0, 0})) == 0);

  // U(2): the single weight gap is a + b, which exceeds the coefficient bound
  for (int m = -1; m <= 2; ++m) {
    const auto u2 = parse_pair("u:2:" + std::to_string(m));
    const auto found = classify_pair(u2, 2);
    CHECK(found.size() == 8);
    CHECK(params_of(found) == table1_parameters(u2, 2));
  }
  auto u21 = classify_pair(parse_pair("u:2:1"), 1);
  REQUIRE(u21.size() == 3);
  CHECK(u21[2].highest_weight == Weight::ints({1, -1}));

  auto u1 = classify_pair(parse_pair("u1"), 2);
  CHECK(params_of(u1) == std::vector<ClassOneParams>{{0, 0, -2}, {0, 0, -1}, {0, 0, 1}, {0, 0, 2}});
}

TEST_CASE("trivial multiplicity examples") {
  auto sp2 = parse_pair("sp:2");
  CHECK(trivial_multiplicity(sp2, Weight::ints({2, 0})) == 3);
  CHECK(trivial_multiplicity_oracle(sp2, Weight::ints({2, 0})) == 3);
  auto so5 = parse_pair("so:5");
  CHECK(trivial_multiplicity(so5, Weight::ints({1, 0})) == 1);
  CHECK(trivial_multiplicity(so5, Weight::ints({1, 1})) == 0);
  CHECK(trivial_multiplicity(so5, Weight::halves({1, 1})) == 0);
  auto g2 = parse_pair("g2");
  CHECK(trivial_multiplicity(g2, from_fundamental(k_root_system(g2), {0, 1})) == 0);
  auto su4 = parse_pair("su:4");
  CHECK(trivial_multiplicity(su4, table1_weight(su4, {2, 1, 0})) == 1);
  CHECK(trivial_multiplicity(su4, from_fundamental(k_root_system(su4), {0, 1, 0})) == 0);
}

TEST_CASE("engines agree with the Freudenthal oracle on small boxes") {
  const std::vector<std::string> pairs = {"so:3",     "so:4",     "so:6",  "su:3",   "u:2:-1", "u:2:0", "u:2:1",
                                          "u:3:2",    "u:3:-1",   "sp:1",  "sp:2",   "spsp1:1", "spsp1:2",
                                          "spu1:1:1", "spu1:2:2", "g2",    "spin7",  "u1"};
  for (const auto& sel : pairs) {
    const auto p = parse_pair(sel);
    const auto K = k_root_system(p);
    for (const auto& w : candidate_weights(p, 2)) {
      if (weyl_dim(K, w) > 400) continue;
      CHECK_MESSAGE(trivial_multiplicity(p, w) == trivial_multiplicity_oracle(p, w), sel << " " << w.str());
    }
  }
}

TEST_CASE("classone_dimension equals weyl_dim") {
  const std::vector<std::string> pairs = {"so:3",  "so:4",     "so:7",     "su:3",     "su:5",  "u:2:1", "u:4:-2",
                                          "sp:1",  "sp:3",     "spsp1:1",  "spsp1:3",  "spu1:1:2", "spu1:3:1",
                                          "g2",    "spin7",    "spin9",    "u1"};
  for (const auto& sel : pairs) {
    const auto p = parse_pair(sel);
    const auto K = k_root_system(p);
    for (const auto& q : table1_parameters(p, 5)) {
      const auto r = make_record(p, q);
      CHECK_MESSAGE(r.dim == weyl_dim(K, r.highest_weight), sel << " a=" << q.a << " b=" << q.b << " k=" << q.k);
    }
  }
  const auto s9 = parse_pair("spin9");
  ClassOneRecord r;
  r.pair = s9;
  r.params = {1, 0, 0};
  CHECK(classone_dimension(r) == 9);
  r.params = {0, 1, 0};
  CHECK(classone_dimension(r) == 16);
  r.params = {0, 0, 0};
  CHECK(classone_dimension(r) == 1);
}

TEST_CASE("type_and_kernel examples") {
  auto rec = [](const std::string& sel, ClassOneParams q) { return make_record(parse_pair(sel), q); };
  CHECK(rec("sp:3", {2, 1, 0}).type == RepType::Real);
  CHECK(rec("sp:3", {2, 1, 0}).kernel.text == "Z2");
  CHECK(rec("sp:3", {1, 1, 0}).type == RepType::Quaternionic);
  CHECK(rec("su:4", {2, 2, 0}).type == RepType::Real);
  CHECK(rec("su:4", {2, 1, 0}).type == RepType::Complex);
  CHECK(rec("so:6", {2, 0, 0}).kernel.text == "Z2");
  CHECK(rec("so:6", {3, 0, 0}).kernel.text.empty());
  CHECK(rec("so:7", {2, 0, 0}).kernel.text.empty());
  // adjoint of SU(3): the whole centre acts trivially
  CHECK(rec("su:3", {1, 1, 0}).kernel.text == "Z3");
  CHECK(rec("u:3:1", {1, 1, 0}).kernel.text == "U(1)");
  CHECK(rec("u:3:1", {1, 1, 0}).kernel.circle_flag);
  CHECK(rec("u:3:1", {2, 0, 0}).kernel.text == "Z8");
  CHECK(rec("spsp1:2", {0, 1, 0}).kernel.text == "Z2xSp(1)");
  CHECK(rec("spsp1:2", {0, 1, 0}).noneffective == "kernel contains the Sp(1) factor");
  CHECK(rec("spu1:2:1", {2, 0, 0}).kernel.text == "Z2xU(1)");
  CHECK(rec("spu1:2:1", {1, 0, 1}).kernel.text.empty());
  CHECK(rec("spu1:2:1", {3, 0, 3}).kernel.text == "IdxZ3");
  CHECK(rec("spin9", {1, 0, 0}).kernel.text == "Z2");
  CHECK(rec("u1", {0, 0, -3}).kernel.text == "Z3");
}

TEST_CASE("types agree with the Frobenius-Schur computation") {
  const std::vector<std::string> pairs = {"so:3", "so:4", "so:8", "su:3", "su:4",     "u:2:1",    "u:3:-1", "sp:1",
                                          "sp:2", "sp:3", "spsp1:2", "spu1:1:1", "spu1:2:2", "g2", "spin7",  "spin9", "u1"};
  for (const auto& sel : pairs) {
    const auto p = parse_pair(sel);
    for (const auto& q : table1_parameters(p, 4)) {
      const auto r = make_record(p, q);
      CHECK_MESSAGE(r.type == frobenius_schur_type(p, r.highest_weight), sel << " " << r.weight_label());
    }
  }
}

TEST_CASE("listed kernels act trivially; cyclic centres exactly") {
  auto central_kernel = [](const SphericalPair& p, const Weight& w) -> long long {
    const auto probe = central_probe(p, {w});
    if (!probe) return 0;
    long long c = 0;
    for (const auto& x : *probe) c += acts_trivially(p, w, x) ? 1 : 0;
    return c;
  };
  auto order_of = [](const std::string& tag) -> long long {
    if (tag.empty()) return 1;
    long long o = 1;
    std::stringstream ss(tag);
    for (std::string part; std::getline(ss, part, 'x');) {
      if (part == "Id") continue;
      if (part[0] != 'Z') return -1;  // positive-dimensional factor
      o *= std::stoll(part.substr(1));
    }
    return o;
  };
  for (const std::string sel : {"so:4", "so:6", "so:7", "su:3", "su:4", "su:6", "u:2:1", "u:3:-2", "sp:2", "sp:3",
                                "g2", "spin7", "spin9", "u1"}) {
    const auto p = parse_pair(sel);
    for (const auto& q : table1_parameters(p, 4)) {
      const auto r = make_record(p, q);
      const long long want = order_of(r.kernel.text);
      if (want < 0) continue;
      CHECK_MESSAGE(central_kernel(p, r.highest_weight) == want, sel << " " << r.weight_label());
    }
  }
  // the product families: the listed subgroup sits inside the central kernel
  for (const std::string sel : {"spsp1:2", "spu1:2:1", "spu1:1:2"}) {
    const auto p = parse_pair(sel);
    for (const auto& q : table1_parameters(p, 4)) {
      const auto r = make_record(p, q);
      const long long want = order_of(r.kernel.text);
      if (want < 0) continue;
      CHECK_MESSAGE(central_kernel(p, r.highest_weight) % want == 0, sel << " " << r.weight_label());
    }
  }
}

TEST_CASE("realify") {
  auto rf = realify(make_record(parse_pair("su:3"), {1, 0, 0}));
  CHECK(rf.real_degree == 6);
  CHECK(rf.complexification == "mu + mu*");
  CHECK(rf.diagram_case == 2);
  auto rq = realify(make_record(parse_pair("sp:1"), {3, 0, 0}));
  CHECK(rq.real_degree == 8);
  CHECK(rq.complexification == "mu + mu");
  CHECK(rq.real_m0 == 8);
  CHECK(rq.diagram_case == 3);
  auto rr = realify(make_record(parse_pair("so:3"), {2, 0, 0}));
  CHECK(rr.real_degree == 5);
  CHECK(rr.complexification == "mu");
  CHECK(rr.diagram_case == 1);
}

TEST_CASE("diagram admissibility") {
  DiagramCandidate c;
  c.mu = make_record(parse_pair("so:3"), {2, 0, 0});
  c.alpha = 1;
  c.n = 7;
  auto ok = check_diagram_admissible(c);
  CHECK(ok.accepted);
  CHECK(c.m() == 5);

  c.n = 6;
  CHECK_FALSE(check_diagram_admissible(c).accepted);

  DiagramCandidate d;
  d.mu = make_record(parse_pair("so:3"), {1, 0, 0});
  d.n = 6;
  auto def = check_diagram_admissible(d);
  CHECK_FALSE(def.accepted);
  CHECK(def.defining_rep);

  // SU(3) [2w1]_R twice: l = 12 < 2(k+2) = 14
  DiagramCandidate e;
  e.mu = make_record(parse_pair("su:3"), {2, 0, 0});
  e.alpha = 2;
  e.n = 40;
  auto cx = check_diagram_admissible(e);
  CHECK_FALSE(cx.accepted);
  CHECK(cx.reason.find("2(k+2)") != std::string::npos);

  // SO(6) with 2w1 is not faithful alone; adding the defining representation fixes it
  DiagramCandidate f;
  f.mu = make_record(parse_pair("so:6"), {2, 0, 0});
  f.n = 22;
  CHECK_FALSE(check_diagram_admissible(f).accepted);
  f.tau = {Weight::ints({1, 0, 0})};
  f.n = 28;
  CHECK(check_diagram_admissible(f).accepted);

  // Sp(2)xSp(1), 2w2 x trivial: the Sp(1) factor is in the kernel
  DiagramCandidate g;
  g.mu = make_record(parse_pair("spsp1:2"), {0, 2, 0});
  g.n = 20;
  auto ng = check_diagram_admissible(g);
  CHECK_FALSE(ng.accepted);
  CHECK(ng.reason.find("Sp(1) factor") != std::string::npos);

  // complex field: SU(3) w1 is the defining representation, 2w1 passes 2l >= k+2
  DiagramCandidate h;
  h.field = Field::C;
  h.mu = make_record(parse_pair("su:3"), {1, 0, 0});
  h.n = 5;
  CHECK(check_diagram_admissible(h).defining_rep);
  h.mu = make_record(parse_pair("su:3"), {2, 0, 0});
  h.n = 8;
  CHECK(check_diagram_admissible(h).accepted);
}

TEST_CASE("tables regenerate byte-identically") {
  const std::string dir = SPHEREPAIR_GOLDEN_DIR;
  const std::vector<std::pair<int, std::string>> files = {
      {1, "table1.md"}, {2, "table2.md"}, {3, "table3.md"}, {4, "table4.md"}, {5, "quaternionic.md"}};
  for (const auto& [which, file] : files) {
    const std::string a = render_table(classification_table(which), "markdown");
    CHECK_MESSAGE(a == slurp(dir + "/" + file), file);
    CHECK(a == render_table(classification_table(which), "markdown"));
  }
  CHECK_THROWS_AS(classification_table(6), UnknownSelector);
  const std::string csv = render_table(classification_table(3), "csv");
  CHECK(csv.find("\"ϖ₁, ϖ₄\"") != std::string::npos);
}

namespace {

// row of the small-dimension table covering a scanned representation, -1 if none
int table3_row(const SmallRep& s) {
  const auto& q = s.params;
  const int n = s.pair.n;
  switch (s.pair.kind) {
    case PairKind::SO: return q.a == 1 ? 0 : -1;
    case PairKind::SU:
      if (q.a == 1 && q.b == 0) return 1;
      if (n == 3 && q.a == 2 && q.b == 0) return 15;
      return -1;
    case PairKind::U:
      if (q.a == 1 && q.b == 0) return 2;
      if (n == 2 && q.a == 1 && q.b == 1) return 9;
      if (n == 2 && q.b == 0 && (q.a == 2 || q.a == 3)) return 13;
      if (n == 3 && q.a == 2 && q.b == 0) return 14;
      return -1;
    case PairKind::Sp:
      if (q.a == 1 && q.b == 0) return 3;
      if (n == 2 && q.a == 0 && q.b == 1) return 10;
      if (n == 1 && q.a == 2) return 11;
      if (n == 2 && q.a == 1 && q.b == 1) return 16;
      if (n == 1 && (q.a == 3 || q.a == 5 || q.a == 7)) return 17;
      return -1;
    case PairKind::SpSp1: return q.a == 1 && q.b == 0 ? 4 : -1;
    case PairKind::SpU1: return q.a == 1 && q.b == 0 ? 5 : -1;
    case PairKind::G2: return q.a == 1 ? 6 : -1;
    case PairKind::Spin7: return q.a == 1 ? 7 : -1;
    case PairKind::Spin9: return q.a + q.b == 1 ? 8 : -1;
    case PairKind::U1: return 12;
  }
  return -1;
}

int table4_row(const SmallRep& s) {
  const auto& q = s.params;
  switch (s.pair.kind) {
    case PairKind::SU: return q.a + q.b == 1 ? 0 : -1;
    case PairKind::U: return q.a + q.b == 1 ? 1 : -1;
    case PairKind::Sp: return q.a == 1 && q.b == 0 ? 2 : -1;
    case PairKind::SpU1: return q.a == 1 && q.b == 0 ? 3 : -1;
    default: return -1;
  }
}

}  // namespace

TEST_CASE("small-dimension scans cover the transcribed tables") {
  const auto real = enumerate_small_reps(Field::R, 6);
  std::set<int> hit;
  std::vector<SmallRep> extra;
  for (const auto& s : real) {
    const int row = table3_row(s);
    if (row < 0) extra.push_back(s);
    else hit.insert(row);
  }
  CHECK(hit.size() == classification_table(3).rows.size());
  // the scan finds one row missing from the printed table: U(2)/U(1)_m, 2e1 - e2 + m(e1+e2), l = 8
  REQUIRE(extra.size() == 5);
  for (const auto& s : extra) {
    CHECK(s.pair.kind == PairKind::U);
    CHECK(s.pair.n == 2);
    CHECK(s.params == ClassOneParams{2, 1, 0});
    CHECK(s.degree == 8);
    CHECK(s.bound == 8);
  }

  const auto cx = enumerate_small_reps(Field::C, 6);
  std::set<int> hit4;
  for (const auto& s : cx) {
    const int row = table4_row(s);
    CHECK_MESSAGE(row >= 0, s.pair.name() << " a=" << s.params.a << " b=" << s.params.b);
    hit4.insert(row);
  }
  CHECK(hit4.size() == 4);

  const auto qt = enumerate_small_reps(Field::H, 6);
  CHECK(qt.size() == 6);
  for (const auto& s : qt) {
    CHECK(s.pair.kind == PairKind::Sp);
    CHECK(s.params == ClassOneParams{1, 0, 0});
    CHECK(s.degree == s.pair.n);
  }
}
