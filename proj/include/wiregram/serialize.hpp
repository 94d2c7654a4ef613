// Copyright 2026 The Wiregram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "wiregram/diagram.hpp"

namespace wiregram::io {

/// A decoded document holds either a diagram or a formal sum.
using Document = std::variant<Diagram, Sum>;

inline constexpr int kDocumentVersion = 1;

nlohmann::ordered_json expr_to_json(const Expr& e);
/// Throws SchemaError addressed at `path`.
Expr expr_from_json(const nlohmann::json& j, const std::string& path = "");

nlohmann::ordered_json diagram_to_json(const Diagram& d);
nlohmann::ordered_json document_to_json(const Document& doc);

/// Serializes to the versioned JSON document format.
std::string encode_doc(const Diagram& d);
std::string encode_doc(const Sum& s);
std::string encode_doc(const Document& doc);

/// Parses a document. Throws SchemaError (with a JSON pointer to the
/// offending value) on malformed input and, when `check_types` is set,
/// TypeError naming the first layer that does not chain.
Document decode_doc(std::string_view text, bool check_types = true);

}  // namespace wiregram::io
