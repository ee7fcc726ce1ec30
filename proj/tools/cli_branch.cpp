#include "cli_commands.hpp"

#include "spherepair/errors.hpp"

#include <boost/algorithm/string.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <set>

namespace spherepair::cli {

namespace {

struct Engine {
  std::string name;
  RootSystemData K, H;
  RestrictionMap R;
  std::function<BranchingResult(const Weight&)> full;
  std::function<long long(const Weight&, const Weight&)> single;  // null: read from full
};

RootSystemData so_system(int N) {
  if (N == 2) return build_root_system(Family::T, 1);
  if (N % 2) return build_root_system(Family::B, N / 2);
  return build_root_system(Family::D, N / 2);
}

std::vector<long long> integral(const Weight& w) {
  std::vector<long long> v;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i].denominator() != 1) throw std::invalid_argument("this engine needs an integral weight");
    v.push_back(w[i].numerator());
  }
  return v;
}

std::string engine_help() {
  std::string s = "valid engines: so:N (N>=3), u:N (N>=2), sp:N (N>=2)";
  for (const auto& k : kostant_pairs()) s += ", " + k;
  return s;
}

Engine make_engine(const std::string& sel) {
  std::vector<std::string> parts;
  boost::split(parts, sel, boost::is_any_of(":"));
  int N = 0;
  if (parts.size() == 2) {
    try {
      std::size_t used = 0;
      N = std::stoi(parts[1], &used);
      if (used != parts[1].size()) N = 0;
    } catch (const std::logic_error&) {
      N = 0;
    }
  }
  Engine e;
  e.name = sel;
  if (parts.size() == 2 && parts[0] == "so" && N >= 3) {
    e.K = so_system(N);
    e.H = so_system(N - 1);
    const int k = N / 2;
    std::vector<int> keep;
    for (int i = 0; i < (N % 2 ? k : k - 1); ++i) keep.push_back(i);
    e.R = coordinate_projection(k, keep);
    e.full = [N](const Weight& w) { return branch_so(N, w); };
    return e;
  }
  if (parts.size() == 2 && parts[0] == "u" && N >= 2) {
    e.K = build_root_system(Family::U, N);
    e.H = direct_sum(build_root_system(Family::T, 1), build_root_system(Family::U, N - 1));
    std::vector<int> all(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) all[static_cast<std::size_t>(i)] = i;
    e.R = coordinate_projection(N, all);
    e.full = [](const Weight& w) { return branch_u(integral(w)); };
    return e;
  }
  if (parts.size() == 2 && parts[0] == "sp" && N >= 2) {
    e.K = build_root_system(Family::C, N);
    e.H = direct_sum(build_root_system(Family::C, N - 1), build_root_system(Family::C, 1));
    std::vector<int> all(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) all[static_cast<std::size_t>(i)] = i;
    e.R = coordinate_projection(N, all);
    e.full = [](const Weight& w) { return branch_sp_full(integral(w)); };
    e.single = [](const Weight& w, const Weight& mu) { return branch_sp_lepowsky(integral(w), integral(mu)); };
    return e;
  }
  for (const auto& k : kostant_pairs()) {
    if (k != sel) continue;
    auto setup = std::make_shared<BranchingSetup>(kostant_setup(k));
    e.K = setup->K;
    e.H = setup->H;
    e.R = setup->restriction;
    e.single = [setup](const Weight& w, const Weight& mu) { return kostant_branch(*setup, w, mu); };
    // every H highest weight occurs among the restricted weights of rho
    e.full = [setup](const Weight& w) {
      std::set<Weight, WeightLess> seen;
      BranchingResult r;
      for (const auto& [nu, m] : freudenthal_multiplicities(setup->K, w).mult) {
        const Weight mu = setup->restriction(nu);
        if (!is_dominant(setup->H, mu) || !seen.insert(mu).second) continue;
        if (const long long c = kostant_branch(*setup, w, mu)) r.mult[mu] = c;
      }
      return r;
    };
    return e;
  }
  throw UnknownSelector("unknown engine '" + sel + "'; " + engine_help());
}

}  // namespace

int cmd_branch(const BranchOptions& o, const Format& f, std::ostream& out) {
  const Engine e = make_engine(o.engine);
  if (o.weight.empty() == o.dynkin.empty()) throw std::invalid_argument("give exactly one of --weight, --dynkin");
  const Weight rho = o.weight.empty() ? from_fundamental(e.K, parse_ints(o.dynkin)) : parse_weight(o.weight, e.K);
  if (!is_dominant(e.K, rho)) throw std::invalid_argument("weight " + rho.str() + " is not dominant for " + e.K.label);
  const long long dim = weyl_dim(e.K, rho);

  BranchingResult result;
  bool dim_check = true;
  if (o.target.empty()) {
    result = e.full(rho);
    dim_check = result.total_dim(e.H) == dim;
  } else {
    const Weight mu = parse_weight(o.target, e.H);
    if (!is_dominant(e.H, mu)) throw std::invalid_argument("target " + mu.str() + " is not dominant for " + e.H.label);
    const long long c = e.single ? e.single(rho, mu) : e.full(rho).at(mu);
    result.mult[mu] = c;
  }

  std::optional<BranchingResult> oracle;
  bool agrees = true;
  if (o.oracle) {
    oracle = oracle_branch(e.K, rho, e.R, e.H);
    if (o.target.empty())
      agrees = oracle->mult == result.mult;
    else
      for (const auto& [mu, c] : result.mult) agrees = agrees && oracle->at(mu) == c;
  }

  if (f.is_json()) {
    json comps = json::array();
    for (const auto& [mu, c] : result.mult) {
      json j = {{"weight", mu.str()}, {"mult", c}};
      if (oracle) j["oracle"] = oracle->at(mu);
      comps.push_back(j);
    }
    json doc = {{"engine", e.name}, {"K", e.K.label}, {"H", e.H.label}, {"weight", rho.str()},
                {"dim", dim},       {"components", comps}};
    if (o.target.empty()) doc["dim_check"] = dim_check;
    doc["oracle_agrees"] = oracle ? json(agrees) : json(nullptr);
    out << doc.dump(2) << '\n';
  } else {
    TableData t;
    t.caption = "Restriction of " + rho.str() + " (dim " + std::to_string(dim) + ") from " + e.K.label + " to " +
                e.H.label + " via " + e.name;
    t.header = {"H weight", "mult"};
    if (oracle) t.header.push_back("oracle");
    for (const auto& [mu, c] : result.mult) {
      t.rows.push_back({mu.str(), std::to_string(c)});
      if (oracle) t.rows.back().push_back(std::to_string(oracle->at(mu)));
    }
    emit_table(out, t, f);
  }
  return dim_check && agrees ? kOk : kVerificationFailed;
}

}  // namespace spherepair::cli
