// Copyright 2026 The spinmean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINMEAN_TOOLS_CLI_H
#define SPINMEAN_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "spinmean/spinmean.h"

namespace spinmean::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

enum class DocumentKind { means, probabilities, spinor, density };

std::string_view kind_name(DocumentKind kind);
DocumentKind parse_kind(std::string_view name);

/// A state description read from or written to JSON. Field names per kind:
///   means:         sx, sy, sz
///   probabilities: p1, p2, p3
///   spinor:        re_up, im_up, re_down, im_down
///   density:       r11, r22, re12, im12   (entry (1,2) = re12 + i im12)
using StateDocument = std::variant<MeanSpinVector, ProbabilityTriple, Spinor, DensityMatrix2>;

/// Raised for malformed documents (missing fields, wrong types, unknown
/// kinds). Library validation failures surface as spinmean::Error instead.
class DocumentError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

StateDocument parse_state_document(const nlohmann::json &doc);
nlohmann::ordered_json state_document_json(const StateDocument &state);

DocumentKind kind_of(const StateDocument &state);
MeanSpinVector means_of(const StateDocument &state);
StateDocument convert(const StateDocument &state, DocumentKind target);

/// Pretty-printed JSON with two-space indentation. Floating-point values are
/// written with 17 significant digits so every double round-trips exactly.
std::string format_json(const nlohmann::ordered_json &value);

/// Runs one CLI invocation. args excludes the program name. Reads "-" inputs
/// from in. Output is written to out only once the command has fully
/// succeeded or failed, so out never receives a partial document.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace spinmean::cli

#endif
