#pragma once

// Minimal JSON Schema (draft-07 subset) validator for the shipped report
// schema: type, const, enum, required, properties, additionalProperties,
// items, minItems, maxItems, oneOf, $ref, pattern, minimum, exclusiveMinimum.

#include <json.hpp>

#include <regex>
#include <string>
#include <vector>

namespace isospec::testing {

class SchemaValidator {
 public:
  explicit SchemaValidator(nlohmann::json root) : root_(std::move(root)) {}

  // Empty result means valid.
  std::vector<std::string> validate(const nlohmann::json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  nlohmann::json root_;

  const nlohmann::json& resolve(const nlohmann::json& s) const {
    if (!s.is_object() || !s.contains("$ref")) return s;
    std::string ref = s["$ref"];
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return resolve(root_["definitions"][ref.substr(prefix.size())]);
  }

  static bool has_type(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  void check(const nlohmann::json& schema_in, const nlohmann::json& v, const std::string& path,
             std::vector<std::string>& errors) const {
    const nlohmann::json& s = resolve(schema_in);
    auto fail = [&](const std::string& msg) { errors.push_back(path + ": " + msg); };

    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (auto& t : s["type"]) ok = ok || has_type(v, t);
      } else {
        ok = has_type(v, s["type"]);
      }
      if (!ok) return fail("type mismatch, expected " + s["type"].dump());
    }
    if (s.contains("const") && v != s["const"]) fail("expected const " + s["const"].dump());
    if (s.contains("enum")) {
      bool found = false;
      for (auto& e : s["enum"]) found = found || e == v;
      if (!found) fail("value " + v.dump() + " not in enum");
    }
    if (s.contains("oneOf")) {
      int matches = 0;
      for (auto& sub : s["oneOf"]) {
        std::vector<std::string> e;
        check(sub, v, path, e);
        if (e.empty()) ++matches;
      }
      if (matches != 1) fail("oneOf matched " + std::to_string(matches) + " branches");
    }
    if (v.is_string() && s.contains("pattern") &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
      fail("string does not match pattern");
    if (v.is_number()) {
      double x = v.get<double>();
      if (s.contains("minimum") && x < s["minimum"].get<double>()) fail("below minimum");
      if (s.contains("exclusiveMinimum") && x <= s["exclusiveMinimum"].get<double>())
        fail("not above exclusiveMinimum");
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (auto& k : s["required"])
          if (!v.contains(k.get<std::string>())) fail("missing required '" + k.get<std::string>() + "'");
      for (auto& [k, val] : v.items()) {
        if (s.contains("properties") && s["properties"].contains(k)) {
          check(s["properties"][k], val, path + "." + k, errors);
        } else if (s.contains("additionalProperties")) {
          const auto& ap = s["additionalProperties"];
          if (ap.is_boolean()) {
            if (!ap.get<bool>()) fail("unexpected property '" + k + "'");
          } else {
            check(ap, val, path + "." + k, errors);
          }
        }
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<size_t>()) fail("too few items");
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<size_t>()) fail("too many items");
      if (s.contains("items"))
        for (size_t i = 0; i < v.size(); ++i)
          check(s["items"], v[i], path + "[" + std::to_string(i) + "]", errors);
    }
  }
};

}  // namespace isospec::testing
