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


#include "multipath/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "multipath/errors.h"

namespace multipath {
namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const Line& line, std::size_t index) {
  if (index >= line.words.size()) {
    throw ParseError(line.number, "missing integer after '" +
                                      line.words.front() + "'");
  }
  const std::string& w = line.words[index];
  int value = 0;
  auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || end != w.data() + w.size()) {
    throw ParseError(line.number, "expected an integer, got '" + w + "'");
  }
  return value;
}

void expect_words(const Line& line, std::size_t count) {
  if (line.words.size() != count) {
    throw ParseError(line.number, "'" + line.words.front() + "' takes " +
                                      std::to_string(count - 1) +
                                      " argument(s)");
  }
}

SigmaIntervalSystem parse_presentation(const std::vector<Line>& lines) {
  std::optional<int> n;
  std::vector<SigmaInterval> intervals;
  for (const Line& line : lines) {
    const std::string& key = line.words.front();
    if (key == "elements") {
      if (n) throw ParseError(line.number, "duplicate 'elements' line");
      expect_words(line, 2);
      n = parse_int(line, 1);
      if (*n < 1) throw ParseError(line.number, "need at least one element");
    } else if (key == "interval") {
      if (!n) throw ParseError(line.number, "'interval' before 'elements'");
      expect_words(line, 3);
      const int first = parse_int(line, 1);
      const int last = parse_int(line, 2);
      for (int e : {first, last}) {
        if (e < 1 || e > *n) {
          throw ParseError(line.number, "interval endpoint " +
                                            std::to_string(e) +
                                            " is outside 1.." +
                                            std::to_string(*n));
        }
      }
      intervals.push_back({first, last});
    } else {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
  }
  if (!n) throw ParseError(0, "missing 'elements' line");
  return SigmaIntervalSystem(*n, std::move(intervals));
}

Diagram parse_diagram(const std::vector<Line>& lines) {
  std::map<std::string, const Line*> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.words.front();
    if (key != "k" && key != "m" && key != "r" && key != "P" && key != "Q") {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
    if (!seen.emplace(key, &line).second) {
      throw ParseError(line.number, "duplicate '" + key + "' line");
    }
    if (key == "P" || key == "Q") {
      if (line.words.size() > 2) expect_words(line, 2);
    } else {
      expect_words(line, 2);
    }
  }
  for (const char* key : {"k", "m", "r", "P", "Q"}) {
    if (!seen.contains(key)) {
      throw ParseError(0, std::string("missing '") + key + "' line");
    }
  }
  auto word = [&](const char* key) {
    const Line& line = *seen.at(key);
    const std::string w = line.words.size() == 2 ? line.words[1] : "";
    if (!std::all_of(w.begin(), w.end(),
                     [](char c) { return c == 'E' || c == 'N'; })) {
      throw ParseError(line.number, "path words use only E and N");
    }
    return LatticePath(w);
  };
  return Diagram(parse_int(*seen.at("k"), 1), parse_int(*seen.at("m"), 1),
                 parse_int(*seen.at("r"), 1), word("P"), word("Q"));
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  InputDocument doc;
  if (lines.front().words.front() == "diagram") {
    expect_words(lines.front(), 1);
    doc.kind = DocumentKind::kDiagram;
    doc.diagram = parse_diagram(lines);
  } else {
    doc.kind = DocumentKind::kPresentation;
    doc.presentation = parse_presentation(lines);
  }
  return doc;
}

std::string format_presentation(const SigmaIntervalSystem& sys) {
  std::vector<SigmaInterval> sorted(sys.intervals().begin(),
                                    sys.intervals().end());
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  out << "elements " << sys.size() << "\n";
  for (const auto& iv : sorted) {
    out << "interval " << iv.first << " " << iv.last << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace multipath
