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


#ifndef MULTIPATH_IO_H_
#define MULTIPATH_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "multipath/diagram.h"
#include "multipath/presentation.h"

namespace multipath {

enum class DocumentKind { kPresentation, kDiagram };

// Exactly one of the payloads is set, matching `kind`. Elements are always
// the integers 1..n, so no label mapping is kept.
struct InputDocument {
  DocumentKind kind = DocumentKind::kPresentation;
  std::optional<SigmaIntervalSystem> presentation;
  std::optional<Diagram> diagram;
};

// Presentation text:
//   elements <n>
//   interval <first> <last>     (any number of times)
// Diagram text: "diagram" then "k", "m", "r", "P", "Q" lines. '#' starts a
// comment; blank lines are ignored. Throws ParseError with the offending
// line, or DomainError when a diagram breaks its invariants.
InputDocument parse_input(std::string_view text);

// Canonical presentation text with intervals sorted by first element.
std::string format_presentation(const SigmaIntervalSystem& sys);

// Whole file contents; ParseError when the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace multipath

#endif  // MULTIPATH_IO_H_
