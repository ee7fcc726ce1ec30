#include "cli_output.hpp"

#include "spherepair/errors.hpp"

#include <boost/algorithm/string.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace spherepair::cli {

json record_json(const ClassOneRecord& r) {
  return {{"pair", r.pair.selector()},
          {"params", {{"a", r.params.a}, {"b", r.params.b}, {"k", r.params.k}, {"m", r.pair.m}}},
          {"dim", r.dim},
          {"type", rep_type_name(r.type)},
          {"kernel", r.kernel.text},
          {"m0", r.m0}};
}

ClassOneRecord record_from_json(const json& j) {
  const SphericalPair p = parse_pair(j.at("pair").get<std::string>());
  const json& q = j.at("params");
  if (q.at("m").get<int>() != p.m) throw std::invalid_argument("record: twist does not match the pair");
  ClassOneRecord r = make_record(p, {q.at("a").get<long long>(), q.at("b").get<long long>(),
                                     q.at("k").get<long long>()});
  if (r.dim != j.at("dim").get<long long>() || rep_type_name(r.type) != j.at("type").get<std::string>() ||
      r.kernel.text != j.at("kernel").get<std::string>() || r.m0 != j.at("m0").get<long long>())
    throw std::invalid_argument("record: fields disagree with the closed form");
  return r;
}

TableData records_table(const std::vector<ClassOneRecord>& rs, const std::string& caption) {
  TableData t;
  t.caption = caption;
  t.header = {"pair", "a", "b", "k", "m", "highest weight", "dim", "type", "kernel", "m0"};
  for (const auto& r : rs)
    t.rows.push_back({r.pair.selector(), std::to_string(r.params.a), std::to_string(r.params.b),
                      std::to_string(r.params.k), std::to_string(r.pair.m), r.weight_label(), std::to_string(r.dim),
                      rep_type_name(r.type), r.kernel.text, std::to_string(r.m0)});
  return t;
}

void emit_table(std::ostream& out, const TableData& t, const Format& f) {
  if (f.is_json()) {
    out << json{{"caption", t.caption}, {"header", t.header}, {"rows", t.rows}}.dump(2) << '\n';
    return;
  }
  out << render_table(t, f.name);
}

namespace {

Rat parse_rat(std::string s) {
  boost::trim(s);
  std::size_t used = 0;
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rat(v);
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    const long long a = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(s);
    const long long b = std::stoll(den, &used);
    if (used != den.size() || b == 0) throw std::invalid_argument(s);
    return Rat(a, b);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot read '" + s + "' as a rational number");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(",; "), boost::token_compress_on);
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const std::string& p) { return p.empty(); }),
              parts.end());
  return parts;
}

}  // namespace

Weight parse_weight(const std::string& text, const RootSystemData& rs) {
  const auto parts = split_list(text);
  if (static_cast<int>(parts.size()) != rs.dim)
    throw std::invalid_argument("weight '" + text + "' needs " + std::to_string(rs.dim) + " coordinates for " +
                                rs.label);
  RatVec v(rs.dim);
  for (int i = 0; i < rs.dim; ++i) v[i] = parse_rat(parts[static_cast<std::size_t>(i)]);
  return Weight(v, rs.basis);
}

std::vector<long long> parse_ints(const std::string& text) {
  std::vector<long long> out;
  for (const auto& p : split_list(text)) {
    const Rat r = parse_rat(p);
    if (r.denominator() != 1) throw std::invalid_argument("expected integers in '" + text + "'");
    out.push_back(r.numerator());
  }
  return out;
}

json matrix_json(const AlgebraElement& a) {
  json rows = json::array();
  for (int i = 0; i < a.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.n(); ++j) {
      const Quat& q = a(i, j);
      switch (a.field()) {
        case Field::R: row.push_back(q.w); break;
        case Field::C: row.push_back({q.w, q.x}); break;
        case Field::H: row.push_back({q.w, q.x, q.y, q.z}); break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_line(const AlgebraElement& a) { return boost::replace_all_copy(a.str(), "\n", "; "); }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace spherepair::cli
