#include "ybe/io.hpp"

#include <cstdint>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw MalformedInput("input is not valid JSON");
  return j;
}

std::vector<std::vector<int>> read_table(const json& j, const std::string& key, int n) {
  if (!j.contains(key)) throw MalformedInput("missing field '" + key + "'");
  const json& t = j[key];
  if (!t.is_array() || static_cast<int>(t.size()) != n)
    throw MalformedInput("field '" + key + "' must be an array of " + std::to_string(n) + " rows");
  std::vector<std::vector<int>> out;
  for (int r = 0; r < n; ++r) {
    const json& row = t[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw MalformedInput("'" + key + "' row " + std::to_string(r) + " must have " +
                           std::to_string(n) + " entries");
    std::vector<int> vals;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw MalformedInput("'" + key + "' row " + std::to_string(r) + " has a non-integer entry");
      vals.push_back(v.get<int>());
    }
    out.push_back(std::move(vals));
  }
  return out;
}

int read_size(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw MalformedInput("missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n <= 0) throw MalformedInput("'n' must be positive");
  return n;
}

json table_json(const std::vector<std::vector<int>>& t) {
  json rows = json::array();
  for (const auto& r : t) rows.push_back(r);
  return rows;
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string table_key(const std::vector<std::vector<int>>& t) {
  std::string s;
  for (const auto& row : t) {
    for (int v : row) {
      s += std::to_string(v);
      s += ',';
    }
    s += ';';
  }
  return s;
}

}  // namespace

FiniteSolution parse_solution(const std::string& text) {
  const json j = parse_json(text);
  const int n = read_size(j);
  return FiniteSolution::make(n, read_table(j, "sigma", n), read_table(j, "tau", n));
}

FiniteSolution read_solution(std::istream& in) { return parse_solution(slurp(in)); }

std::string write_solution(const FiniteSolution& sol) {
  nlohmann::ordered_json j;
  j["n"] = sol.size();
  j["sigma"] = table_json(sol.sigma_table());
  j["tau"] = table_json(sol.tau_table());
  return j.dump();
}

LeftBrace parse_brace(const std::string& text) {
  const json j = parse_json(text);
  const int n = read_size(j);
  return LeftBrace::make(n, read_table(j, "add", n), read_table(j, "circle", n));
}

LeftBrace read_brace(std::istream& in) { return parse_brace(slurp(in)); }

std::string write_brace(const LeftBrace& b) {
  nlohmann::ordered_json j;
  j["n"] = b.size();
  j["add"] = table_json(b.add_table());
  j["circle"] = table_json(b.circle_table());
  return j.dump();
}

std::string canonical_hash(const FiniteSolution& sol) {
  const std::string key =
      "solution:" + std::to_string(sol.size()) + ":" + table_key(sol.sigma_table()) + ":" +
      table_key(sol.tau_table());
  return hex64(fnv1a(key));
}

std::string canonical_hash(const LeftBrace& b) {
  const std::string key = "brace:" + std::to_string(b.size()) + ":" + table_key(b.add_table()) +
                          ":" + table_key(b.circle_table());
  return hex64(fnv1a(key));
}

}  // namespace ybe
