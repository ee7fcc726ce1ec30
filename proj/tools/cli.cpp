#include "cli.hpp"

#include "cli_commands.hpp"
#include "spherepair/errors.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

namespace spherepair::cli {

namespace {

void add_format(CLI::App* sub, Format& f) {
  sub->add_option("--format", f.name, "json, markdown or csv")
      ->check(CLI::IsMember({"json", "markdown", "csv"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Class one representations of spherical pairs and curvature checks on cohomogeneity one diagrams",
               "spherepair"};
  app.require_subcommand(1);
  Format fmt;
  std::function<int()> action;

  ClassifyOptions co;
  auto* classify = app.add_subcommand("classify", "class one representations of a spherical pair, via branching");
  classify->add_option("--pair", co.pair, "pair selector, e.g. so:5, u:3:1, spin9")->required();
  classify->add_option("--max", co.max, "bound on the coefficients a, b, |k|")->capture_default_str();
  add_format(classify, fmt);
  classify->callback([&] { action = [&] { return cmd_classify(co, fmt, out); }; });

  BranchOptions bo;
  auto* branch = app.add_subcommand("branch", "restriction multiplicities through one branching engine");
  branch->add_option("--engine", bo.engine, "so:N, u:N, sp:N, g2-su3, spin7-g2, spin9-spin7")->required();
  branch->add_option("--weight", bo.weight, "highest weight in engine coordinates, e.g. 1,1/2");
  branch->add_option("--dynkin", bo.dynkin, "highest weight as fundamental weight coefficients");
  branch->add_option("--target", bo.target, "a single H weight");
  branch->add_flag("--oracle", bo.oracle, "cross-check against Freudenthal restriction");
  add_format(branch, fmt);
  branch->callback([&] { action = [&] { return cmd_branch(bo, fmt, out); }; });

  DimsOptions dopt;
  auto* dims = app.add_subcommand("dims", "closed-form dimensions against the Weyl dimension formula");
  dims->add_option("--pair", dopt.pairs, "pair selector (repeatable); default one per family");
  dims->add_option("--max", dopt.max, "bound on the coefficients")->capture_default_str();
  add_format(dims, fmt);
  dims->callback([&] { action = [&] { return cmd_dims(dopt, fmt, out); }; });

  TablesOptions topt;
  auto* tables = app.add_subcommand("tables", "regenerate a classification table");
  tables->add_option("--which", topt.which, "1-4, or 5 for the quaternionic list")->capture_default_str();
  add_format(tables, fmt);
  tables->callback([&] { action = [&] { return cmd_tables(topt, fmt, out); }; });

  CurvOptions cvo;
  auto* curv = app.add_subcommand("curv", "curvature of the obstruction witness");
  curv->require_subcommand(1);
  auto* verify = curv->add_subcommand("verify", "check the witness identities at interior samples");
  verify->add_option("--example", cvo.example, "registered diagram")->capture_default_str();
  verify->add_option("--profile", cvo.profile, "profile h: cos or quartic")->capture_default_str();
  verify->add_option("--L", cvo.L, "half length of the normal geodesic")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--samples", cvo.samples, "number of interior samples")->capture_default_str();
  add_format(verify, fmt);
  verify->callback([&] { action = [&] { return cmd_curv_verify(cvo, fmt, out); }; });

  ObstructOptions oo;
  auto* obstruct = app.add_subcommand("obstruct", "scan gamma^2 f^2 >= f'^2 for f = 1 - h^2");
  obstruct->add_option("--profile", oo.profile, "profile h")->capture_default_str();
  obstruct->add_option("--L", oo.L, "half length")->check(CLI::PositiveNumber)->capture_default_str();
  obstruct->add_option("--gamma-min", oo.gamma_min)->check(CLI::PositiveNumber)->capture_default_str();
  obstruct->add_option("--gamma-max", oo.gamma_max)->check(CLI::PositiveNumber)->capture_default_str();
  obstruct->add_option("--gammas", oo.gammas, "log grid size")->capture_default_str();
  obstruct->add_option("--grid", oo.grid, "interior t samples before halving")->capture_default_str();
  add_format(obstruct, fmt);
  obstruct->callback([&] { action = [&] { return cmd_obstruct(oo, fmt, out); }; });

  WeylOptions wo;
  auto* weyl = app.add_subcommand("weyl", "Weyl group representatives w+ and w- and their flags");
  weyl->add_option("--example", wo.example, "registered diagram")->capture_default_str();
  add_format(weyl, fmt);
  weyl->callback([&] { action = [&] { return cmd_weyl(wo, fmt, out); }; });

  auto* list = app.add_subcommand("list", "registered pairs, engines, examples and profiles");
  add_format(list, fmt);
  list->callback([&] { action = [&] { return cmd_list(fmt, out); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const UnknownSelector& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleRefused& e) {
    err << "error: " << e.what() << " (raise SPHEREPAIR_ORACLE_BOUND to allow it)\n";
    return kOracleRefused;
  } catch (const InternalInconsistency& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace spherepair::cli
