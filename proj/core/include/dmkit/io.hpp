// Copyright 2026 The Authors.
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

// JSON encodings of the library's value types. Loaders validate every
// structural invariant and throw FormatError on violations. Unknown keys
// (such as "meta") are ignored.

#ifndef DMKIT_IO_HPP_
#define DMKIT_IO_HPP_

#include <filesystem>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dmkit/constructions.hpp"
#include "dmkit/delta_matroid.hpp"
#include "dmkit/oracle.hpp"
#include "dmkit/repsets.hpp"
#include "dmkit/skew_matrix.hpp"
#include "dmkit/sparsifier.hpp"

namespace dmkit {

using Json = nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {"field_bits", "labels", "rows": [[hex]]}
Json to_json(const SkewMatrix& m);
SkewMatrix skew_matrix_from_json(const Json& j);

// Matrix fields plus {"twist": [labels]}.
Json to_json(const DeltaMatroid& d);
DeltaMatroid delta_matroid_from_json(const Json& j);

// {"vertices", "edges": [[u, v]], "terminals", "partition": [[...]]}.
// Labels with reserved characters are rejected.
Json to_json(const MaderNetwork& net);
MaderNetwork network_from_json(const Json& j);

// {"q", "sets": [[labels]], "weights"}
Json to_json(const QSetFamily& fam);
QSetFamily family_from_json(const Json& j);

// {"field_bits", "columns", "rows": [[hex]]}
Json to_json(const LinearMatrix& m);
LinearMatrix linear_matrix_from_json(const Json& j);

// {"full": delta-matroid, "contracted": delta-matroid, "primes": {v: v'},
//  "subdivision": [labels]}
Json to_json(const MaderRepresentation& r);

Json to_json(const SparsifyReport& r);
Json to_json(const PathPacking& p);
Json to_json(const LabelSet& s);
LabelSet label_set_from_json(const Json& j);

// Throws FormatError on unreadable or unparsable files.
Json read_json_file(const std::filesystem::path& path);
// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace dmkit

#endif  // DMKIT_IO_HPP_
