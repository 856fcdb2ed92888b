#pragma once

// Minimal JSON Schema checker covering exactly the subset used by the
// schemas shipped in schemas/: type, const, enum, properties, required,
// additionalProperties:false, items, minimum, anyOf, and $ref into
// #/definitions. Returns the first violation as a human-readable path.

#include <optional>
#include <string>

#include "json.hpp"  // nlohmann

namespace testsupport {

namespace detail {

using nlohmann::json;

inline bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    return false;
}

inline std::optional<std::string> check(const json& schema, const json& v, const json& root,
                                        const std::string& path) {
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) return path + ": unsupported $ref " + ref;
        return check(root.at("definitions").at(ref.substr(prefix.size())), v, root, path);
    }
    if (schema.contains("anyOf")) {
        for (const auto& alt : schema["anyOf"])
            if (!check(alt, v, root, path)) return std::nullopt;
        return path + ": matched no anyOf branch";
    }
    if (schema.contains("const")) {
        if (schema["const"] != v) return path + ": const mismatch";
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& e : schema["enum"]) hit = hit || (e == v);
        if (!hit) return path + ": not in enum";
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), v);
        } else {
            for (const auto& one : t) ok = ok || type_matches(one.get<std::string>(), v);
        }
        if (!ok) return path + ": wrong type";
    }
    if (schema.contains("minimum") && v.is_number()) {
        if (v.get<double>() < schema["minimum"].get<double>()) return path + ": below minimum";
    }
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!v.contains(key.get<std::string>()))
                    return path + ": missing required key " + key.get<std::string>();
        const json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        for (const auto& [key, val] : v.items()) {
            if (props && props->contains(key)) {
                if (auto err = check(props->at(key), val, root, path + "." + key)) return err;
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"] == false) {
                return path + ": unexpected key " + key;
            }
        }
    }
    if (v.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (auto err = check(schema["items"], v[i], root, path + "[" + std::to_string(i) + "]"))
                return err;
    }
    return std::nullopt;
}

}  // namespace detail

/// nullopt when `instance` conforms to `schema`; otherwise the first
/// violation, prefixed with its JSON path.
inline std::optional<std::string> schema_violation(const nlohmann::json& schema,
                                                   const nlohmann::json& instance) {
    return detail::check(schema, instance, schema, "$");
}

}  // namespace testsupport
