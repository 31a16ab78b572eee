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


#include "multipath/cli.h"

#include <CLI11.hpp>

#include <chrono>
#include <sstream>

#include "multipath/activities.h"
#include "multipath/errors.h"
#include "multipath/io.h"
#include "multipath/oracle.h"
#include "multipath/tutte_dp.h"

namespace multipath {
namespace {

InputDocument load(const std::string& path) {
  return parse_input(read_text_file(path));
}

SigmaIntervalSystem whirl(int r) {
  const int n = 2 * r;
  std::vector<SigmaInterval> ivs;
  for (int j = 1; j <= r; ++j) ivs.push_back({2 * j - 1, (2 * j) % n + 1});
  return SigmaIntervalSystem(n, std::move(ivs));
}

std::string join(const ElementSet& set, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(set[i]);
  }
  return out;
}

const char* kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::kLoop:
      return "loop";
    case ElementKind::kIsthmus:
      return "isthmus";
    case ElementKind::kOrdinary:
      break;
  }
  return "ordinary";
}

// The diagram a presentation is evaluated on, or nullopt for rank 0.
std::optional<Diagram> diagram_of(const InputDocument& doc) {
  if (doc.diagram) return doc.diagram;
  const SigmaIntervalSystem& sys = *doc.presentation;
  const SigmaIntervalSystem core =
      is_antichain(sys) ? sys : normalize_to_antichain(sys);
  if (core.interval_count() == 0) return std::nullopt;
  return build_diagram(core, 1);
}

int size_of(const InputDocument& doc) {
  return doc.diagram ? doc.diagram->size() : doc.presentation->size();
}

std::vector<ElementSet> bases_of(const InputDocument& doc) {
  const auto d = diagram_of(doc);
  return d ? label_sets(*d) : std::vector<ElementSet>{ElementSet{}};
}

BivariatePolynomial tutte_of(const InputDocument& doc, const std::string& algo) {
  if (algo == "bruteforce") {
    if (doc.presentation) {
      return oracle::tutte_subset_expansion(
          oracle::to_set_system(*doc.presentation));
    }
    if (doc.diagram->size() > oracle::kMaxEnumerationSize) {
      throw ResourceError("bruteforce is limited to " +
                          std::to_string(oracle::kMaxEnumerationSize) +
                          " elements");
    }
    const auto bases = label_sets(*doc.diagram);
    return oracle::tutte_from_bases(doc.diagram->size(), bases);
  }
  const bool dp = algo == "dp";
  if (doc.presentation) {
    return dp ? tutte(*doc.presentation) : tutte_via_activities(*doc.presentation);
  }
  return dp ? tutte_of_diagram(*doc.diagram) : activity_polynomial(*doc.diagram);
}

int rank_of(const InputDocument& doc) {
  if (doc.diagram) return doc.diagram->r();
  const auto& sys = *doc.presentation;
  return (is_antichain(sys) ? sys : normalize_to_antichain(sys))
      .interval_count();
}

void cmd_check(const std::string& path, std::ostream& out) {
  const InputDocument doc = load(path);
  if (doc.diagram) {
    const Diagram& d = *doc.diagram;
    out << "kind diagram\n"
        << "k " << d.k() << "\nm " << d.m() << "\nr " << d.r() << "\n"
        << "bases " << count_bases(d) << "\n";
    if (d.size() > 0) {
      out << "greatest " << kind_name(classify_greatest_element(d)) << "\n";
    }
    return;
  }
  const SigmaIntervalSystem& sys = *doc.presentation;
  const ValidationReport report = validate(sys);
  out << "kind presentation\n"
      << "antichain " << (report.is_antichain ? "true" : "false") << "\n"
      << "condition_c " << (report.satisfies_c ? "true" : "false") << "\n"
      << "loops" << (report.loops.empty() ? "" : " " + join(report.loops, ",")) << "\n"
      << "lattice_path "
      << (report.is_lattice_path ? (*report.is_lattice_path ? "true" : "false")
                                 : "unknown")
      << "\n";
  const char* cls = !report.satisfies_c ? "invalid"
                    : *report.is_lattice_path ? "lattice-path"
                                              : "multi-path";
  out << "class " << cls << "\n";
}

void cmd_minor(const std::string& path, const std::vector<std::string>& ops,
               std::ostream& out) {
  InputDocument doc = load(path);
  // Original label of each current element.
  std::vector<int> original(size_of(doc));
  for (int e = 1; e <= size_of(doc); ++e) original[e - 1] = e;
  for (const std::string& op : ops) {
    const bool del = op[0] == 'd';
    const int label = std::stoi(op.substr(2));
    auto it = std::find(original.begin(), original.end(), label);
    if (it == original.end()) {
      throw InvalidElementError("element " + std::to_string(label) +
                                " is not in the current ground set");
    }
    const int current = static_cast<int>(it - original.begin()) + 1;
    if (doc.presentation) {
      doc.presentation = del ? delete_element(*doc.presentation, current)
                             : contract_element(*doc.presentation, current);
    } else {
      const Diagram& d = *doc.diagram;
      if (current != d.size()) {
        throw PreconditionError(
            "diagram minors remove the greatest remaining element first");
      }
      const ElementSet last{current};
      auto minor = del ? initial_minor_diagram(d, last, {})
                       : initial_minor_diagram(d, {}, last);
      if (!minor) {
        throw InfeasibleError(std::string("cannot ") +
                              (del ? "delete an isthmus" : "contract a loop") +
                              " at diagram level");
      }
      doc.diagram = *minor;
    }
    original.erase(it);
  }
  out << (doc.presentation ? format_presentation(*doc.presentation)
                           : format_diagram(*doc.diagram));
}

void cmd_bench(const std::string& family, const std::vector<int>& sizes,
               const std::string& algo, std::ostream& out) {
  if (family != "whirl") throw DomainError("unknown family '" + family + "'");
  out << "n,algo,millis,nu\n";
  for (int n : sizes) {
    if (n < 4 || n % 2 != 0) {
      throw DomainError("whirl sizes are even and at least 4");
    }
    const auto start = std::chrono::steady_clock::now();
    const Diagram d = build_diagram(whirl(n / 2), 1);
    std::int64_t nu = 0;
    if (algo == "dp") {
      const ComputationGraph g = build_computation_graph(d);
      tutte_from_graph(g);
      nu = g.size();
    } else {
      activity_polynomial(d, Execution::kParallel, &nu);
    }
    const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    out << n << "," << algo << "," << millis << "," << nu << "\n";
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Tutte polynomials and bases of multi-path matroids", "mpm"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "Validate an input file");
  check->add_option("file", file, "Presentation or diagram file")->required();

  std::string algo = "dp";
  std::vector<long long> eval;
  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  tutte_cmd->add_option("file", file)->required();
  tutte_cmd->add_option("--algo", algo)
      ->check(CLI::IsMember({"dp", "activities", "bruteforce"}));
  tutte_cmd->add_option("--eval", eval, "Evaluate at integers X Y")
      ->expected(2);

  bool count_only = false;
  auto* bases = app.add_subcommand("bases", "List or count bases");
  bases->add_option("file", file)->required();
  bases->add_flag("--count", count_only);

  auto* dual = app.add_subcommand("dual", "Reflected diagram");
  dual->add_option("file", file)->required();

  std::vector<int> deletes, contracts;
  auto* minor = app.add_subcommand("minor", "Delete or contract elements");
  minor->add_option("file", file)->required();
  minor->add_option("--delete", deletes, "Delete an element (original label)")
      ->allow_extra_args(false);
  minor->add_option("--contract", contracts,
                    "Contract an element (original label)")
      ->allow_extra_args(false);

  std::string basis_list;
  auto* act = app.add_subcommand("activities", "Activities of a basis");
  act->add_option("file", file)->required();
  act->add_option("--basis", basis_list, "Comma-separated elements")
      ->required();

  std::string family = "whirl";
  std::vector<int> sizes;
  std::string bench_algo = "dp";
  auto* bench = app.add_subcommand("bench", "Time an engine on a family");
  bench->add_option("--family", family)->check(CLI::IsMember({"whirl"}));
  bench->add_option("--sizes", sizes)->delimiter(',')->required();
  bench->add_option("--algo", bench_algo)
      ->check(CLI::IsMember({"dp", "activities"}));

  std::vector<std::string> argv_store{"mpm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  // Minor operations apply in command-line order, which CLI11 does not
  // keep across two options.
  std::vector<std::string> ops;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--delete" || args[i] == "--contract") {
      ops.push_back((args[i] == "--delete" ? "d " : "c ") + args[i + 1]);
    }
  }

  try {
    if (check->parsed()) {
      cmd_check(file, out);
    } else if (tutte_cmd->parsed()) {
      const InputDocument doc = load(file);
      const BivariatePolynomial t = tutte_of(doc, algo);
      if (!eval.empty()) {
        out << t.evaluate(eval[0], eval[1]) << "\n";
      } else {
        const int r = rank_of(doc);
        out << format_tutte(t, r, size_of(doc) - r);
      }
    } else if (bases->parsed()) {
      const InputDocument doc = load(file);
      if (count_only) {
        const auto d = diagram_of(doc);
        out << (d ? count_bases(*d) : BigInt(1)) << "\n";
      } else {
        for (const auto& b : bases_of(doc)) out << join(b, " ") << "\n";
      }
    } else if (dual->parsed()) {
      const InputDocument doc = load(file);
      const auto d = diagram_of(doc);
      if (!d) throw DomainError("rank-0 presentations have no diagram");
      out << format_diagram(reflect_dual(*d));
    } else if (minor->parsed()) {
      cmd_minor(file, ops, out);
    } else if (act->parsed()) {
      const InputDocument doc = load(file);
      ElementSet b;
      std::stringstream list(basis_list);
      for (std::string item; std::getline(list, item, ',');) {
        if (!item.empty()) b.push_back(std::stoi(item));
      }
      std::sort(b.begin(), b.end());
      const auto d = diagram_of(doc);
      if (!d) throw DomainError("rank-0 presentations have no diagram");
      const ActivityCounts a = basis_activities(*d, b);
      out << a.internal << " " << a.external << "\n";
    } else if (bench->parsed()) {
      cmd_bench(family, sizes, bench_algo, out);
    }
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace multipath
