// Copyright 2026 The gatecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATECAP_TESTS_SCHEMA_CHECK_HPP
#define GATECAP_TESTS_SCHEMA_CHECK_HPP

#include <fstream>
#include <string>
#include <vector>

#include "gatecap/report.hpp"

namespace testutil {

// Validator for the JSON-schema subset the shipped schema restricts itself
// to: type, enum, required, properties and items. Unknown keywords are
// annotations and are ignored, as in the full spec.
inline bool matches_type(const std::string &type, const gatecap::Json &v) {
    if (type == "object") {
        return v.is_object();
    }
    if (type == "array") {
        return v.is_array();
    }
    if (type == "string") {
        return v.is_string();
    }
    if (type == "boolean") {
        return v.is_boolean();
    }
    if (type == "null") {
        return v.is_null();
    }
    if (type == "integer") {
        return v.is_number_integer();
    }
    if (type == "number") {
        return v.is_number();
    }
    return false;
}

inline void validate_json(const gatecap::Json &schema, const gatecap::Json &value,
                          const std::string &path, std::vector<std::string> &errors) {
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto &candidate : schema["enum"]) {
            if (candidate == value) {
                found = true;
                break;
            }
        }
        if (!found) {
            errors.push_back(path + ": value not in enum");
        }
    }
    if (schema.contains("type")) {
        const auto &type = schema["type"];
        bool ok = false;
        if (type.is_string()) {
            ok = matches_type(type.get<std::string>(), value);
        } else {
            for (const auto &t : type) {
                ok = ok || matches_type(t.get<std::string>(), value);
            }
        }
        if (!ok) {
            errors.push_back(path + ": type mismatch");
        }
    }
    if (schema.contains("required") && value.is_object()) {
        for (const auto &key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) {
                errors.push_back(path + ": missing required key '" + key.get<std::string>() +
                                 "'");
            }
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto &[key, sub] : schema["properties"].items()) {
            if (value.contains(key)) {
                validate_json(sub, value[key], path + "." + key, errors);
            }
        }
    }
    if (schema.contains("items") && value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            validate_json(schema["items"], value[i], path + "[" + std::to_string(i) + "]",
                          errors);
        }
    }
}

inline std::vector<std::string> schema_errors(const gatecap::Json &schema,
                                              const gatecap::Json &value) {
    std::vector<std::string> errors;
    validate_json(schema, value, "$", errors);
    return errors;
}

inline gatecap::Json load_report_schema() {
    std::ifstream in(GATECAP_SCHEMA_PATH);
    if (!in) {
        throw std::runtime_error("cannot open schema file");
    }
    return gatecap::Json::parse(in);
}

}  // namespace testutil

#endif
