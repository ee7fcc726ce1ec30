#pragma once

#include "spherepair/classone.hpp"
#include "spherepair/liealg.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace spherepair::cli {

using nlohmann::json;

// "json", "markdown" or "csv"
struct Format {
  std::string name = "markdown";
  bool is_json() const { return name == "json"; }
};

json record_json(const ClassOneRecord& r);
// inverse of record_json; rebuilds the record from the closed form and checks every field
ClassOneRecord record_from_json(const json& j);

TableData records_table(const std::vector<ClassOneRecord>& rs, const std::string& caption);

// markdown / csv through render_table, json as {"caption", "header", "rows"}
void emit_table(std::ostream& out, const TableData& t, const Format& f);

Weight parse_weight(const std::string& text, const RootSystemData& rs);
std::vector<long long> parse_ints(const std::string& text);

json matrix_json(const AlgebraElement& a);
// one line per matrix row, rows separated by "; "
std::string matrix_line(const AlgebraElement& a);

std::string fmt_double(double v);

}  // namespace spherepair::cli
