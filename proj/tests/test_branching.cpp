#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherepair/branching.hpp"
#include "spherepair/errors.hpp"

using namespace spherepair;

namespace {

RootSystemData so_system(int N) {
  if (N == 2) return build_root_system(Family::T, 1);
  if (N % 2) return build_root_system(Family::B, N / 2);
  return build_root_system(Family::D, N / 2);
}

RestrictionMap first_coords(int from, int to) {
  std::vector<int> keep;
  for (int i = 0; i < to; ++i) keep.push_back(i);
  return coordinate_projection(from, keep);
}

}  // namespace

TEST_CASE("branch_so examples") {
  auto r = branch_so(5, Weight::ints({1, 0}));
  CHECK(r.mult.size() == 2);
  CHECK(r.at(Weight::ints({1, 0})) == 1);
  CHECK(r.at(Weight::ints({0, 0})) == 1);

  auto s = branch_so(9, Weight::halves({1, 1, 1, 1}));
  CHECK(s.mult.size() == 2);
  CHECK(s.at(Weight::halves({1, 1, 1, 1})) == 1);
  CHECK(s.at(Weight::halves({1, 1, 1, -1})) == 1);
  auto o = oracle_branch(so_system(9), Weight::halves({1, 1, 1, 1}), first_coords(4, 4), so_system(8));
  CHECK(o.mult == s.mult);

  auto t = branch_so(7, Weight::ints({1, 1, 0}));
  CHECK(t.total_dim(so_system(6)) == weyl_dim(so_system(7), Weight::ints({1, 1, 0})));

  CHECK_THROWS_AS(branch_so(7, Weight(RatVec{{Rat(1), Rat(1, 2), Rat(0)}})), std::invalid_argument);
  CHECK_THROWS_AS(branch_so(2, Weight::ints({1})), std::invalid_argument);
}

TEST_CASE("branch_so agrees with the oracle") {
  for (int N = 3; N <= 8; ++N) {
    const int k = N / 2;
    auto K = so_system(N);
    auto H = so_system(N - 1);
    std::vector<int> keep;
    for (int i = 0; i < (N % 2 ? k : k - 1); ++i) keep.push_back(i);
    auto R = coordinate_projection(k, keep);
    // integer weights with a_1 <= 2, plus the spin weights
    std::vector<Weight> probes;
    for (long long a = 0; a <= 2; ++a)
      for (long long b = 0; b <= a; ++b) {
        Weight w = Weight::zero(k);
        w[0] = Rat(a);
        if (k > 1) w[1] = Rat(b);
        probes.push_back(w);
      }
    Weight spin = Weight::zero(k);
    for (int i = 0; i < k; ++i) spin[i] = Rat(1, 2);
    if (N > 3) probes.push_back(spin);
    for (const auto& w : probes) {
      auto c = branch_so(N, w);
      CHECK(c.total_dim(H) == weyl_dim(K, w));
      auto o = oracle_branch(K, w, R, H);
      CHECK_MESSAGE(c.mult == o.mult, "N=" << N << " w=" << w.str());
    }
  }
}

TEST_CASE("ball-in-box counting") {
  CHECK(count_ballbox(3, {2, 2}) == 2);
  CHECK(count_ballbox(-1, {3, 1}) == 0);
  CHECK(count_ballbox(2, {5}) == 1);
  CHECK(count_ballbox(0, {0, 0}) == 1);
  CHECK(count_ballbox(1, {0, 0}) == 0);
  CHECK(count_ballbox(4, {1, 1}) == 0);
  for (long long l = 0; l <= 9; ++l) CHECK(count_ballbox(l, {3, 1, 4, 0, 2}) == count_ballbox(10 - l, {3, 1, 4, 0, 2}));
}

TEST_CASE("Lepowsky examples") {
  CHECK(branch_sp_lepowsky({2, 0}, {0, 2}) == 1);
  CHECK(branch_sp_lepowsky({0, 0}, {0, 0}) == 1);
  CHECK(branch_sp_lepowsky({1, 0}, {1, 0}) == 1);
  CHECK(branch_sp_lepowsky({1, 0}, {0, 1}) == 1);
  CHECK(branch_sp_lepowsky({1, 0}, {1, 1}) == 0);
  auto full = branch_sp_full({1, 1});
  auto H = direct_sum(build_root_system(Family::C, 1), build_root_system(Family::C, 1));
  CHECK(full.total_dim(H) == 5);
  auto o = oracle_branch(build_root_system(Family::C, 2), Weight::ints({1, 1}), first_coords(2, 2), H);
  CHECK(o.mult == full.mult);
}

TEST_CASE("Lepowsky agrees with the oracle on sp(2), sp(3)") {
  for (int n : {2, 3}) {
    auto K = build_root_system(Family::C, n);
    auto H = direct_sum(build_root_system(Family::C, n - 1), build_root_system(Family::C, 1));
    auto R = first_coords(n, n);
    std::vector<long long> a(n, 0);
    for (a[0] = 0; a[0] <= 3; ++a[0])
      for (a[1] = 0; a[1] <= a[0]; ++a[1])
        for (long long c = 0; c <= (n == 3 ? a[1] : 0); ++c) {
          if (n == 3) a[2] = c;
          Weight lam(to_rat(a));
          if (weyl_dim(K, lam) > 5000) continue;
          auto lep = branch_sp_full(a);
          CHECK(lep.total_dim(H) == weyl_dim(K, lam));
          CHECK_MESSAGE(lep.mult == oracle_branch(K, lam, R, H).mult, "rho=" << lam.str());
        }
  }
}

TEST_CASE("branch_u interlacing against the oracle") {
  auto K = build_root_system(Family::U, 3);
  auto H = direct_sum(build_root_system(Family::T, 1), build_root_system(Family::U, 2));
  RestrictionMap id = first_coords(3, 3);
  for (auto lam : std::vector<std::vector<long long>>{{2, 0, -1}, {1, 1, 0}, {3, 1, 1}, {0, 0, -2}}) {
    auto gt = branch_u(lam);
    CHECK(gt.total_dim(H) == weyl_dim(K, Weight(to_rat(lam))));
    CHECK(gt.mult == oracle_branch(K, Weight(to_rat(lam)), id, H).mult);
  }
}

TEST_CASE("Kostant partition function") {
  auto g = kostant_setup("g2-su3");
  REQUIRE(g.sigma.size() == 3);
  CHECK(g.sigma[0] == Weight::ints({1, 0}));
  CHECK(g.sigma[1] == Weight::ints({1, 1}));
  CHECK(g.sigma[2] == Weight::ints({2, 1}));
  CHECK(kostant_partition(g, Weight::zero(2)) == 1);
  CHECK(kostant_partition(g, Weight::ints({2, 1})) == 2);
  CHECK(kostant_partition(g, Weight::ints({-1, 0})) == 0);

  auto s7 = kostant_setup("spin7-g2");
  CHECK(s7.sigma.size() == 3);
  CHECK(s7.sigma == g.sigma);

  auto s9 = kostant_setup("spin9-spin7");
  CHECK(s9.sigma.size() == 7);
  CHECK(std::count(s9.sigma.begin(), s9.sigma.end(), Weight::ints({1, 0, 0})) == 1);
  CHECK(std::count(s9.sigma.begin(), s9.sigma.end(), Weight::halves({1, -1, -1})) == 1);

  CHECK_THROWS_AS(kostant_setup("f4-spin9"), UnknownSelector);
}

TEST_CASE("Kostant partition matches series and enumeration") {
  for (const auto& name : kostant_pairs()) {
    auto s = kostant_setup(name);
    const int parts = name == "spin9-spin7" ? 8 : 12;
    auto table = kostant_enumerate(s, parts);
    for (const auto& [nu, count] : table) {
      if (kostant_height(s, nu) > parts) continue;
      CHECK(kostant_partition(s, nu) == count);
      CHECK(kostant_partition_series(s, nu) == count);
    }
  }
}

TEST_CASE("Kostant branching") {
  auto g = kostant_setup("g2-su3");
  for (long long a = 1; a <= 3; ++a) CHECK(kostant_branch(g, from_fundamental(g.K, {a, 0}), Weight::zero(2)) == 1);
  for (long long a = 0; a <= 2; ++a)
    for (long long b = 1; b <= 2; ++b) CHECK(kostant_branch(g, from_fundamental(g.K, {a, b}), Weight::zero(2)) == 0);

  auto s7 = kostant_setup("spin7-g2");
  CHECK(kostant_branch(s7, Weight::halves({1, 1, 1}), Weight::zero(2)) == 1);
  CHECK(kostant_branch(s7, Weight::ints({1, 0, 0}), Weight::zero(2)) == 0);
  auto o = oracle_branch(s7.K, Weight::ints({1, 0, 0}), s7.restriction, s7.H);
  CHECK(o.at(Weight::zero(2)) == 0);
  CHECK(o.at(Weight::ints({2, 1})) == 1);
}

TEST_CASE("Kostant agrees with the oracle on full decompositions") {
  for (const auto& name : kostant_pairs()) {
    auto s = kostant_setup(name);
    const int r = s.K.rank;
    std::vector<long long> c(r, 0);
    for (int code = 0; code < (1 << r); ++code) {
      for (int i = 0; i < r; ++i) c[i] = (code >> i) & 1;
      Weight rho = from_fundamental(s.K, c);
      if (weyl_dim(s.K, rho) > 2000) continue;
      auto o = oracle_branch(s.K, rho, s.restriction, s.H);
      for (const auto& [mu, m] : o.mult) CHECK_MESSAGE(kostant_branch(s, rho, mu) == m, name << " " << rho.str() << " " << mu.str());
      CHECK(o.total_dim(s.H) == weyl_dim(s.K, rho));
    }
  }
}

TEST_CASE("oracle examples") {
  auto sp2 = build_root_system(Family::C, 2);
  auto H = direct_sum(build_root_system(Family::C, 1), build_root_system(Family::C, 1));
  auto o = oracle_branch(sp2, Weight::ints({1, 0}), first_coords(2, 2), H);
  CHECK(o.mult.size() == 2);
  CHECK(o.at(Weight::ints({1, 0})) == 1);
  CHECK(o.at(Weight::ints({0, 1})) == 1);

  auto g = kostant_setup("g2-su3");
  auto seven = oracle_branch(g.K, fundamental_weight(g.K, 1), g.restriction, g.H);
  CHECK(seven.at(Weight::zero(2)) == 1);
  CHECK(seven.total_dim(g.H) == 7);

  auto so5 = oracle_branch(build_root_system(Family::B, 2), Weight::ints({1, 0}), first_coords(2, 2),
                           build_root_system(Family::D, 2));
  CHECK(so5.mult == branch_so(5, Weight::ints({1, 0})).mult);

  CHECK_THROWS_AS(oracle_branch(sp2, Weight::ints({3, 3}), first_coords(2, 2), H, 10), OracleRefused);
}
