#include "cli_commands.hpp"

#include "spherepair/cohom1.hpp"

#include <algorithm>
#include <cstdio>

namespace spherepair::cli {

namespace {

json optional_t(double t) { return t < 0 ? json(nullptr) : json(t); }

}  // namespace

int cmd_curv_verify(const CurvOptions& o, const Format& f, std::ostream& out) {
  if (o.samples < 1) throw std::invalid_argument("--samples must be positive");
  const auto d = make_example(o.example);
  const MetricFamily fam = make_family(d, d->default_F, make_profile(o.profile, o.L));
  const WitnessPlane w = build_witness(fam);
  const CurvatureReport rep = verify_witness_identities(fam, w, interior_samples(o.L, o.samples));
  const double tneg = rep.first_negative_t();
  const bool ok = rep.identities_ok() && rep.decomposition_ok() && tneg >= 0;

  if (f.is_json()) {
    json samples = json::array();
    for (const auto& s : rep.samples)
      samples.push_back({{"t", s.t},
                         {"residuals",
                          {{"r1", s.r1}, {"r2", s.r2}, {"r3", s.r3}, {"r4", s.r4}, {"decomposition", s.decomposition_rel}}},
                         {"sec", s.sec},
                         {"product", s.product}});
    out << json{{"example", rep.example},
                {"profile", rep.profile},
                {"L", o.L},
                {"tolerances", {{"identity", rep.tol_identity}, {"decomposition", rep.tol_decomposition}}},
                {"commutes_exactly", rep.commutes_exactly},
                {"product_scale", w.product_scale},
                {"first_negative_t", optional_t(tneg)},
                {"ok", ok},
                {"samples", samples}}
                   .dump(2)
        << '\n';
    return ok ? kOk : kVerificationFailed;
  }

  TableData t;
  char cap[256];
  std::snprintf(cap, sizeof cap,
                "Witness identities for %s, profile %s: tolerance %g (identities), %g (decomposition); "
                "[X,Y] exact: %s; first t with sec < 0: %s; %s",
                rep.example.c_str(), rep.profile.c_str(), rep.tol_identity, rep.tol_decomposition,
                rep.commutes_exactly ? "yes" : "no", tneg < 0 ? "none" : fmt_double(tneg).c_str(),
                ok ? "PASS" : "FAIL");
  t.caption = cap;
  t.header = {"t", "r1", "r2", "r3", "r4", "decomposition", "product", "sec"};
  for (const auto& s : rep.samples)
    t.rows.push_back({fmt_double(s.t), fmt_double(s.r1), fmt_double(s.r2), fmt_double(s.r3), fmt_double(s.r4),
                      fmt_double(s.decomposition_rel), fmt_double(s.product), fmt_double(s.sec)});
  emit_table(out, t, f);
  return ok ? kOk : kVerificationFailed;
}

int cmd_obstruct(const ObstructOptions& o, const Format& f, std::ostream& out) {
  if (o.gammas < 1 || o.grid < 1) throw std::invalid_argument("--gammas and --grid must be positive");
  const Profile p = make_profile(o.profile, o.L);
  const auto hits = obstruction_scan(one_minus_h2(p), log_grid(o.gamma_min, o.gamma_max, o.gammas),
                                     interior_samples(o.L, o.grid));
  const bool all = std::all_of(hits.begin(), hits.end(), [](const ObstructionHit& h) { return h.found; });

  if (f.is_json()) {
    json arr = json::array();
    for (const auto& h : hits)
      arr.push_back({{"gamma", h.gamma}, {"found", h.found}, {"t", optional_t(h.found ? h.t : -1)},
                     {"lhs", h.lhs}});
    out << json{{"profile", p.name}, {"L", o.L}, {"function", "1 - h^2"}, {"all_violated", all}, {"hits", arr}}.dump(2)
        << '\n';
  } else {
    TableData t;
    t.caption = "Sampled t with gamma^2 f^2 < f'^2 for f = 1 - h^2, profile " + p.name + (all ? "; every gamma" : "; MISSING");
    t.header = {"gamma", "t", "gamma^2 f^2 - f'^2"};
    for (const auto& h : hits)
      t.rows.push_back({fmt_double(h.gamma), h.found ? fmt_double(h.t) : "-", h.found ? fmt_double(h.lhs) : "-"});
    emit_table(out, t, f);
  }
  return all ? kOk : kVerificationFailed;
}

int cmd_weyl(const WeylOptions& o, const Format& f, std::ostream& out) {
  const auto d = make_example(o.example);
  const WeylRepresentatives w = weyl_representatives(*d);
  const std::vector<std::pair<std::string, bool>> flags = {
      {"w_plus_sq_in_H", w.w_plus_sq_in_H}, {"w_minus_sq_in_H", w.w_minus_sq_in_H},
      {"w_plus_notin_H", w.w_plus_notin_H}, {"w_minus_notin_H", w.w_minus_notin_H},
      {"commute", w.commute},               {"product_notin_H", w.product_notin_H}};

  if (f.is_json()) {
    json fl = json::object();
    for (const auto& [k, v] : flags) fl[k] = v;
    out << json{{"example", d->name}, {"w_plus", matrix_json(w.w_plus)}, {"w_minus", matrix_json(w.w_minus)},
                {"flags", fl}, {"all", w.all()}}
               .dump(2)
        << '\n';
  } else {
    TableData t;
    t.caption = "Weyl group representatives for " + d->name + (w.all() ? ": Z2 x Z2 confirmed" : ": FAILED");
    t.header = {"item", "value"};
    t.rows.push_back({"w_plus", matrix_line(w.w_plus)});
    t.rows.push_back({"w_minus", matrix_line(w.w_minus)});
    for (const auto& [k, v] : flags) t.rows.push_back({k, v ? "true" : "false"});
    emit_table(out, t, f);
  }
  return w.all() ? kOk : kVerificationFailed;
}

}  // namespace spherepair::cli
