#include "schema_check.hpp"

namespace ditrail::testing {

namespace {

using nlohmann::json;

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "null") return value.is_null();
  return false;
}

void check(const json& schema, const json& value, const std::string& path,
           std::vector<std::string>& out) {
  if (schema.contains("type")) {
    std::string type = schema["type"].get<std::string>();
    if (!type_matches(type, value)) {
      out.push_back(path + ": expected " + type + ", got " + std::string(value.type_name()));
      return;
    }
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const json& candidate : schema["enum"]) any |= candidate == value;
    if (!any) out.push_back(path + ": value not in enum");
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const json& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          out.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
        }
      }
    }
    const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    bool allow_extra = true;
    if (schema.contains("additionalProperties") && schema["additionalProperties"].is_boolean()) {
      allow_extra = schema["additionalProperties"].get<bool>();
    }
    for (const auto& [key, sub] : value.items()) {
      if (props && props->contains(key)) {
        check((*props)[key], sub, path + "." + key, out);
      } else if (!allow_extra) {
        out.push_back(path + ": unexpected key '" + key + "'");
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      check(schema["items"], value[i], path + "[" + std::to_string(i) + "]", out);
    }
  }
}

}  // namespace

std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                           const nlohmann::json& value) {
  std::vector<std::string> out;
  check(schema, value, "$", out);
  return out;
}

}  // namespace ditrail::testing
