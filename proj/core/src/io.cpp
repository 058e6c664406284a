#include "cookiecut/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cookiecut {

namespace {

using nlohmann::json;

// DOM builder that keeps every number as its raw token string, so decimal
// literals reach parse_rational undamaged instead of passing through a
// double.
class RawNumberSax {
 public:
  json root;

  bool null() { return add(nullptr); }
  bool boolean(bool v) { return add(v); }
  bool number_integer(json::number_integer_t v) { return add(std::to_string(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return add(std::to_string(v)); }
  bool number_float(json::number_float_t, const std::string& raw) { return add(raw); }
  bool string(std::string& v) { return add(v); }
  bool binary(json::binary_t&) { return false; }
  bool start_object(size_t) {
    push(json::object());
    return true;
  }
  bool key(std::string& k) {
    key_ = k;
    have_key_ = true;
    return true;
  }
  bool end_object() { return pop(); }
  bool start_array(size_t) {
    push(json::array());
    return true;
  }
  bool end_array() { return pop(); }
  bool parse_error(size_t, const std::string&, const nlohmann::detail::exception&) {
    return false;
  }

 private:
  template <typename T>
  bool add(T&& v) {
    json node(std::forward<T>(v));
    if (stack_.empty()) {
      root = std::move(node);
      return true;
    }
    attach(std::move(node));
    return true;
  }

  void push(json node) {
    stack_.push_back(std::move(node));
    keys_.push_back(have_key_ ? key_ : std::string());
    have_key_ = false;
  }

  void attach(json node) {
    json& top = stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(node));
    } else {
      top[key_] = std::move(node);
      have_key_ = false;
    }
  }

  bool pop() {
    json node = std::move(stack_.back());
    const std::string k = keys_.back();
    stack_.pop_back();
    keys_.pop_back();
    if (stack_.empty()) {
      root = std::move(node);
    } else if (stack_.back().is_array()) {
      stack_.back().push_back(std::move(node));
    } else {
      stack_.back()[k] = std::move(node);
    }
    return true;
  }

  std::vector<json> stack_;
  std::vector<std::string> keys_;
  std::string key_;
  bool have_key_ = false;
};

json parse_raw(const std::string& text) {
  RawNumberSax sax;
  if (!json::sax_parse(text, &sax)) {
    throw SolverError(ErrorCode::MalformedInput, "not valid JSON");
  }
  return std::move(sax.root);
}

Rat rational_field(const json& node, bool* saw_decimal) {
  if (!node.is_string()) {
    throw SolverError(ErrorCode::MalformedInput, "expected a number or rational string");
  }
  const std::string text = node.get<std::string>();
  const auto q = parse_rational(text);
  if (!q) throw SolverError(ErrorCode::MalformedInput, "bad rational literal: " + text);
  if (saw_decimal != nullptr && is_decimal_literal(text)) *saw_decimal = true;
  return *q;
}

long integer_field(const json& node, const char* what) {
  const Rat q = rational_field(node, nullptr);
  if (q.get_den() != 1 || q < 0 || q > 1000000) {
    throw SolverError(ErrorCode::MalformedInput, std::string("bad integer field: ") + what);
  }
  return q.get_num().get_si();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SolverError(ErrorCode::MalformedInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SolverError(ErrorCode::MalformedInput, "cannot write " + path);
  out << text;
}

}  // namespace

ParsedInstance instance_from_json(const std::string& text) {
  const json doc = parse_raw(text);
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("cookies") ||
      !doc["cookies"].is_array()) {
    throw SolverError(ErrorCode::MalformedInput, "instance needs {\"m\": int, \"cookies\": [...]}");
  }
  ParsedInstance out;
  out.instance.m = static_cast<int>(integer_field(doc["m"], "m"));
  if (out.instance.m < 1) throw SolverError(ErrorCode::MalformedInput, "instance needs m >= 1");
  for (const auto& row : doc["cookies"]) {
    if (!row.is_array() || row.size() != static_cast<size_t>(out.instance.m)) {
      throw SolverError(ErrorCode::MalformedInput, "every cookie needs exactly m amounts");
    }
    FrostingVector v;
    for (const auto& cell : row) {
      Rat q = rational_field(cell, &out.had_decimals);
      if (q < 0) throw SolverError(ErrorCode::MalformedInput, "amounts must be nonnegative");
      v.push_back(std::move(q));
    }
    out.instance.cookies.push_back(std::move(v));
  }
  if (doc.contains("names")) {
    if (!doc["names"].is_array() || doc["names"].size() != out.instance.cookies.size()) {
      throw SolverError(ErrorCode::MalformedInput, "names must list one label per cookie");
    }
    for (const auto& name : doc["names"]) out.instance.names.push_back(name.get<std::string>());
  }
  return out;
}

ParsedInstance read_instance(const std::string& path) { return instance_from_json(slurp(path)); }

std::string instance_to_json(const Instance& instance) {
  json doc;
  doc["m"] = instance.m;
  doc["cookies"] = json::array();
  for (const auto& cookie : instance.cookies) {
    json row = json::array();
    for (const auto& q : cookie) row.push_back(fraction_string(q));
    doc["cookies"].push_back(std::move(row));
  }
  if (!instance.names.empty()) doc["names"] = instance.names;
  return doc.dump(2) + "\n";
}

void write_instance(const std::string& path, const Instance& instance) {
  spill(path, instance_to_json(instance));
}

Allocation allocation_from_json(const std::string& text) {
  const json doc = parse_raw(text);
  if (!doc.is_object() || !doc.contains("r") || !doc.contains("shares") ||
      !doc["shares"].is_array()) {
    throw SolverError(ErrorCode::MalformedInput, "allocation needs {\"r\": int, \"shares\": [...]}");
  }
  Allocation alloc;
  alloc.r = static_cast<int>(integer_field(doc["r"], "r"));
  for (const auto& row : doc["shares"]) {
    if (!row.is_array()) throw SolverError(ErrorCode::MalformedInput, "shares rows must be arrays");
    std::vector<std::pair<int, Rat>> entry;
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2) {
        throw SolverError(ErrorCode::MalformedInput, "each share is [agent, fraction]");
      }
      const int agent = static_cast<int>(integer_field(cell[0], "agent"));
      entry.emplace_back(agent, rational_field(cell[1], nullptr));
    }
    alloc.shares.push_back(std::move(entry));
  }
  return alloc;
}

Allocation read_allocation(const std::string& path) { return allocation_from_json(slurp(path)); }

std::string allocation_to_json(const Allocation& alloc) {
  json doc;
  doc["r"] = alloc.r;
  doc["shares"] = json::array();
  for (const auto& entry : alloc.shares) {
    json row = json::array();
    for (const auto& [agent, frac] : entry) {
      row.push_back(json::array({agent, fraction_string(frac)}));
    }
    doc["shares"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

void write_allocation(const std::string& path, const Allocation& alloc) {
  spill(path, allocation_to_json(alloc));
}

}  // namespace cookiecut
