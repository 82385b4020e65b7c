#include "araki/report.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "araki/matrix_io.hpp"

namespace araki {

namespace {

constexpr std::array<const char*, 6> kParamKeys{"s", "t", "r", "p", "q", "alpha"};

std::optional<double> ExponentParams::* param_member(std::string_view k) {
  if (k == "s") return &ExponentParams::s;
  if (k == "t") return &ExponentParams::t;
  if (k == "r") return &ExponentParams::r;
  if (k == "p") return &ExponentParams::p;
  if (k == "q") return &ExponentParams::q;
  return &ExponentParams::alpha;
}

const std::optional<double>& param_by_key(const ExponentParams& p, std::string_view k) {
  return p.*param_member(k);
}

std::optional<double>& param_by_key(ExponentParams& p, std::string_view k) {
  return p.*param_member(k);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::ordered_json params_to_json(const ExponentParams& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const char* k : kParamKeys) {
    const auto& v = param_by_key(p, k);
    if (v.has_value()) j[k] = *v;
  }
  return j;
}

ExponentParams params_from_json(const nlohmann::json& j) {
  ExponentParams p;
  for (const char* k : kParamKeys)
    if (j.contains(k)) param_by_key(p, k) = j.at(k).get<double>();
  return p;
}

nlohmann::ordered_json record_to_json(const SearchRecord& r, bool with_payload) {
  nlohmann::ordered_json j;
  j["inequality_id"] = r.target;
  j["params"] = params_to_json(r.params);
  j["dim"] = r.dim;
  j["family"] = r.family;
  j["seed"] = r.master_seed;
  j["ordinal"] = r.ordinal;
  j["check_index"] = r.check_index;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["gap"] = r.gap;
  j["rel_gap"] = r.rel_gap;
  j["verdict"] = r.verdict;
  nlohmann::ordered_json diag = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.diagnostics) diag[k] = v;
  j["diagnostics"] = std::move(diag);
  j["note"] = r.note;
  if (with_payload && r.payload.has_value()) {
    j["payload"] = {{"a", matrix_to_json(r.payload->first)},
                    {"b", matrix_to_json(r.payload->second)}};
  }
  return j;
}

SearchRecord record_from_json(const nlohmann::json& j) {
  SearchRecord r;
  r.target = j.at("inequality_id").get<std::string>();
  r.params = params_from_json(j.at("params"));
  r.dim = j.at("dim").get<int>();
  r.family = j.at("family").get<std::string>();
  r.master_seed = j.at("seed").get<std::uint64_t>();
  r.ordinal = j.at("ordinal").get<std::uint64_t>();
  r.check_index = j.at("check_index").get<std::uint64_t>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.gap = j.at("gap").get<double>();
  r.rel_gap = j.at("rel_gap").get<double>();
  r.verdict = j.at("verdict").get<std::string>();
  if (j.contains("diagnostics"))
    for (const auto& [k, v] : j.at("diagnostics").items())
      r.diagnostics[k] = v.get<double>();
  r.note = j.value("note", std::string());
  if (j.contains("payload")) {
    r.payload = std::make_pair(matrix_from_json(j.at("payload").at("a")),
                               matrix_from_json(j.at("payload").at("b")));
  }
  return r;
}

std::string record_to_report_line(const SearchRecord& r) {
  std::ostringstream os;
  os << "{\"inequality_id\":\"" << json_escape(r.target) << "\",\"params\":{";
  bool first = true;
  for (const char* k : kParamKeys) {
    const auto& v = param_by_key(r.params, k);
    if (!v.has_value()) continue;
    if (!first) os << ",";
    os << "\"" << k << "\":" << format_double(*v);
    first = false;
  }
  os << "},\"dim\":" << r.dim << ",\"family\":\"" << json_escape(r.family)
     << "\",\"seed\":" << r.master_seed << ",\"ordinal\":" << r.ordinal
     << ",\"check_index\":" << r.check_index << ",\"lhs\":" << format_double(r.lhs)
     << ",\"rhs\":" << format_double(r.rhs) << ",\"gap\":" << format_double(r.gap)
     << ",\"rel_gap\":" << format_double(r.rel_gap) << ",\"verdict\":\""
     << r.verdict << "\",\"diagnostics\":{";
  first = true;
  for (const auto& [k, v] : r.diagnostics) {
    if (!first) os << ",";
    os << "\"" << json_escape(k) << "\":" << format_double(v);
    first = false;
  }
  os << "},\"note\":\"" << json_escape(r.note) << "\"";
  if (r.payload.has_value()) {
    os << ",\"payload\":{\"a\":" << matrix_to_json(r.payload->first).dump()
       << ",\"b\":" << matrix_to_json(r.payload->second).dump() << "}";
  }
  os << "}";
  return os.str();
}

std::string record_csv_header() {
  return "inequality_id,dim,family,seed,ordinal,check_index,s,t,r,p,q,alpha,lhs,"
         "rhs,gap,rel_gap,verdict";
}

std::string record_to_csv(const SearchRecord& r) {
  std::ostringstream os;
  os << r.target << "," << r.dim << "," << r.family << "," << r.master_seed << ","
     << r.ordinal << "," << r.check_index;
  for (const char* k : kParamKeys) {
    const auto& v = param_by_key(r.params, k);
    os << ",";
    if (v.has_value()) os << format_double(*v);
  }
  os << "," << format_double(r.lhs) << "," << format_double(r.rhs) << ","
     << format_double(r.gap) << "," << format_double(r.rel_gap) << "," << r.verdict;
  return os.str();
}

SearchRecord record_from_check(const CheckResult& c) {
  SearchRecord r;
  r.target = c.inequality_id;
  r.params = c.params;
  r.lhs = c.lhs;
  r.rhs = c.rhs;
  r.gap = c.gap;
  r.rel_gap = c.rel_gap;
  r.verdict = to_string(c.verdict);
  r.diagnostics = c.diagnostics;
  r.note = c.note;
  return r;
}

}  // namespace araki
