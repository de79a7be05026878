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

#ifndef DMKIT_TYPES_HPP_
#define DMKIT_TYPES_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmkit {

// Element identifiers are plain strings throughout the library. Label sets
// are ordered so that "lowest label" tie-breaks are deterministic.
using Label = std::string;
using LabelSet = std::set<Label>;
using Family = std::vector<LabelSet>;

// Raised by brute-force routines and bounded constructions when an input
// exceeds a hard size limit. Never silently truncated.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a label is not part of the ground set of a structure.
class UnknownLabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

LabelSet symmetric_difference(const LabelSet& a, const LabelSet& b);
LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_minus(const LabelSet& a, const LabelSet& b);
LabelSet set_intersection(const LabelSet& a, const LabelSet& b);
bool is_subset(const LabelSet& a, const LabelSet& b);
bool intersects(const LabelSet& a, const LabelSet& b);

// "{a,b,c}"
std::string to_string(const LabelSet& s);

// Canonical ordering of a family: sets sorted lexicographically.
Family canonical(Family f);

}  // namespace dmkit

#endif  // DMKIT_TYPES_HPP_
