#include "cli_commands.hpp"

#include "spherepair/cohom1.hpp"

namespace spherepair::cli {

int cmd_classify(const ClassifyOptions& o, const Format& f, std::ostream& out) {
  if (o.max < 0) throw std::invalid_argument("--max must be non-negative");
  const SphericalPair p = parse_pair(o.pair);
  const auto records = classify_pair(p, o.max);
  if (f.is_json()) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_json(r));
    out << arr.dump(2) << '\n';
    return kOk;
  }
  emit_table(out, records_table(records, "Class one representations of " + p.name() + ", coefficients <= " +
                                             std::to_string(o.max)),
             f);
  return kOk;
}

int cmd_dims(const DimsOptions& o, const Format& f, std::ostream& out) {
  if (o.max < 0) throw std::invalid_argument("--max must be non-negative");
  std::vector<SphericalPair> pairs;
  for (const auto& s : o.pairs) pairs.push_back(parse_pair(s));
  if (pairs.empty()) pairs = registered_pairs();

  TableData t;
  t.caption = "Closed-form dimension against the Weyl dimension formula, coefficients <= " + std::to_string(o.max);
  t.header = {"pair", "a", "b", "k", "highest weight", "formula", "weyl", "diff"};
  json rows = json::array();
  bool all_equal = true;
  for (const auto& p : pairs) {
    const RootSystemData K = k_root_system(p);
    for (const auto& q : table1_parameters(p, o.max)) {
      const ClassOneRecord r = make_record(p, q);
      const long long formula = classone_dimension(r);
      const long long weyl = weyl_dim(K, r.highest_weight);
      all_equal = all_equal && formula == weyl;
      t.rows.push_back({p.selector(), std::to_string(q.a), std::to_string(q.b), std::to_string(q.k),
                        r.weight_label(), std::to_string(formula), std::to_string(weyl),
                        std::to_string(formula - weyl)});
      rows.push_back({{"pair", p.selector()},
                      {"params", {{"a", q.a}, {"b", q.b}, {"k", q.k}, {"m", p.m}}},
                      {"highest_weight", r.highest_weight.str()},
                      {"formula", formula},
                      {"weyl", weyl},
                      {"diff", formula - weyl}});
    }
  }
  if (f.is_json())
    out << json{{"max", o.max}, {"all_equal", all_equal}, {"rows", rows}}.dump(2) << '\n';
  else
    emit_table(out, t, f);
  return all_equal ? kOk : kVerificationFailed;
}

int cmd_tables(const TablesOptions& o, const Format& f, std::ostream& out) {
  emit_table(out, classification_table(o.which), f);
  return kOk;
}

int cmd_list(const Format& f, std::ostream& out) {
  std::vector<std::string> pairs;
  for (const auto& p : registered_pairs()) pairs.push_back(p.selector());
  std::vector<std::string> engines = {"so:N", "u:N", "sp:N"};
  for (const auto& k : kostant_pairs()) engines.push_back(k);
  TableData t;
  t.caption = "Registered selectors";
  t.header = {"kind", "values"};
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
  };
  t.rows = {{"pair", join(pairs)},
            {"engine", join(engines)},
            {"example", join(example_names())},
            {"profile", join(profile_names())}};
  if (f.is_json())
    out << json{{"pairs", pairs}, {"engines", engines}, {"examples", example_names()}, {"profiles", profile_names()},
                {"pair_syntax", pair_selector_help()}}
               .dump(2)
        << '\n';
  else
    emit_table(out, t, f);
  return kOk;
}

}  // namespace spherepair::cli
