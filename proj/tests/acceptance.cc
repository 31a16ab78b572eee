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


// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "multipath/activities.h"
#include "multipath/diagram.h"
#include "multipath/oracle.h"
#include "multipath/structure.h"
#include "multipath/tutte_dp.h"
#include "support/corpus.h"
#include "support/gamma_bruteforce.h"

namespace mp = multipath;
namespace oracle = multipath::oracle;
using mp::BivariatePolynomial;
using mp::Diagram;
using mp::ElementSet;
using mp::SigmaIntervalSystem;

namespace {

// Pinned tolerances.
constexpr int kExhaustiveMaxN = 7;
constexpr int kRandomCount = 500;
constexpr int kRandomMinN = 8;
constexpr int kRandomMaxN = 12;
constexpr std::uint64_t kRandomSeed = 20260101;
constexpr int kGammaMaxSize = 8;
constexpr int kActivityMaxN = 9;
constexpr double kDpSlopeLimit = 6.5;
constexpr double kActivitySlopeLimit = 5.5;
constexpr double kLargestRunSeconds = 300.0;
constexpr int kTimingRepeats = 3;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name;
  if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

std::vector<ElementSet> oracle_bases(const SigmaIntervalSystem& sys) {
  return oracle::bases_bruteforce(oracle::to_set_system(sys));
}

std::string describe(const SigmaIntervalSystem& sys) {
  std::ostringstream out;
  out << "n=" << sys.size();
  for (const auto& iv : sys.intervals()) {
    out << " [" << iv.first << "," << iv.last << "]";
  }
  return out.str();
}

Outcome criterion_label_sets(const std::vector<SigmaIntervalSystem>& corpus) {
  long checks = 0;
  for (const auto& sys : corpus) {
    const int n = sys.size();
    const auto bases = oracle_bases(sys);
    for (int x = 1; x <= n; ++x) {
      std::vector<ElementSet> got;
      for (const auto& b : mp::label_sets(mp::build_diagram(sys, x))) {
        ElementSet s;
        for (int l : b) s.push_back(mp::anchored_element(n, x, l));
        std::sort(s.begin(), s.end());
        got.push_back(s);
      }
      std::sort(got.begin(), got.end());
      if (got != bases) {
        return {false, describe(sys) + " anchor " + std::to_string(x)};
      }
      ++checks;
    }
  }
  return {true, std::to_string(corpus.size()) + " systems, " +
                    std::to_string(checks) + " anchors"};
}

Outcome criterion_tutte(const std::vector<SigmaIntervalSystem>& all) {
  for (const auto& sys : all) {
    const auto dp = mp::tutte(sys);
    const auto brute = oracle::tutte_subset_expansion(oracle::to_set_system(sys));
    const auto act = mp::tutte_via_activities(sys);
    if (!(dp == brute) || !(dp == act)) return {false, describe(sys)};
  }
  return {true, std::to_string(all.size()) + " systems"};
}

Outcome criterion_whirl() {
  const auto w3 = mp::testing::whirl(3);
  const Diagram d = mp::build_diagram(w3, 1);
  const auto t = mp::tutte(w3);
  const auto dual = mp::tutte_of_diagram(mp::reflect_dual(d));
  std::ostringstream detail;
  detail << "t(1,1)=" << t.evaluate(1, 1) << " t(2,2)=" << t.evaluate(2, 2);
  const bool ok = t.evaluate(1, 1) == 17 && t.evaluate(2, 2) == 64 &&
                  dual == t.swapped() &&
                  mp::activity_polynomial(mp::reflect_dual(d)) == t.swapped();
  return {ok, detail.str()};
}

Outcome criterion_extension() {
  const Diagram d(5, 6, 3, mp::LatticePath("EEEEENENN"),
                  mp::LatticePath("NENNEEEEE"));
  const auto ext = mp::extend(d);
  const Diagram want(5, 6, 9, mp::LatticePath("EEEEENENNNNNNNN"),
                     mp::LatticePath("NENNEEEEENNNNNN"));
  const bool ok = ext.diagram == want && ext.contracted.size() == 6 &&
                  ext.contracted.front() == 10 &&
                  mp::build_diagram(ext.presentation, 1) == want;
  return {ok, ext.diagram.encoding() + " |Z|=" +
                  std::to_string(ext.contracted.size())};
}

Outcome criterion_minor_bound(const std::vector<SigmaIntervalSystem>& all) {
  double worst = 0;
  for (const auto& sys : all) {
    const auto core = mp::split_loops(sys);
    if (!core.diagram) continue;
    const auto g = mp::build_computation_graph(*core.diagram);
    mp::validate_graph(g);
    const auto bound = mp::initial_minor_bound(*core.diagram);
    if (g.size() > bound) return {false, describe(sys)};
    worst = std::max(worst, static_cast<double>(g.size()) / bound);
  }
  std::ostringstream detail;
  detail << "max nu/bound " << worst;
  return {true, detail.str()};
}

Outcome criterion_recurrence(const std::vector<SigmaIntervalSystem>& all) {
  long ordinary = 0;
  for (const auto& sys : all) {
    const int n = sys.size();
    if (n < 2) continue;
    const auto t = mp::tutte(sys);
    const auto loop_set = mp::loops(sys);
    for (int x = 1; x <= n; ++x) {
      const auto del = mp::tutte(mp::delete_element(sys, x));
      const auto con = mp::tutte(mp::contract_element(sys, x));
      BivariatePolynomial want;
      if (std::binary_search(loop_set.begin(), loop_set.end(), x)) {
        want = mp::poly_step(del, mp::PolyStep::kTimesY, t.max_x(), t.max_y());
      } else if (del.evaluate(1, 1) == t.evaluate(1, 1)) {  // isthmus
        want = mp::poly_step(con, mp::PolyStep::kTimesX, t.max_x(), t.max_y());
      } else {
        want = del.resized(t.max_x(), t.max_y());
        want += con;
        ++ordinary;
      }
      if (!(want == t)) {
        return {false, describe(sys) + " x=" + std::to_string(x)};
      }
    }
  }
  return {true, std::to_string(ordinary) + " ordinary elements"};
}

Outcome criterion_gamma(const std::vector<SigmaIntervalSystem>& all) {
  long values = 0;
  int diagrams = 0;
  for (const auto& sys : all) {
    if (sys.size() > kGammaMaxSize) continue;
    const Diagram d = mp::build_diagram(sys, 1);
    for (const Diagram& side : {d, mp::reflect_dual(d)}) {
      const auto table = mp::compute_gamma(side);
      for (int j = 1; j <= side.k(); ++j) {
        for (int t = 0; t <= side.size(); ++t) {
          for (int h = side.low(t); h <= side.high(t); ++h) {
            const auto counts = mp::testing::gamma_by_enumeration(side, t, h, j);
            for (int a = 0; a <= side.r(); ++a) {
              for (int b = 0; b <= side.m(); ++b) {
                for (bool tp : {false, true}) {
                  for (bool tq : {false, true}) {
                    auto it = counts.find({a, b, tp, tq});
                    const long long want = it == counts.end() ? 0 : it->second;
                    if (table.value(t, h, j, a, b, tp, tq) != want) {
                      return {false, side.encoding()};
                    }
                    ++values;
                  }
                }
              }
            }
          }
        }
      }
      ++diagrams;
    }
  }
  return {true, std::to_string(diagrams) + " diagrams, " +
                    std::to_string(values) + " values"};
}

Outcome criterion_activities(const std::vector<SigmaIntervalSystem>& all) {
  long bases_checked = 0;
  for (const auto& sys : all) {
    if (sys.size() > kActivityMaxN) continue;
    const Diagram d = mp::build_diagram(sys, 1);
    const auto bases = mp::label_sets(d);
    for (const auto& b : bases) {
      const auto want = oracle::activities_by_definition(d.size(), bases, b);
      const auto starts = mp::valid_starts(d, b);
      int touching = 0;
      for (int i : starts) {
        const auto got = mp::basis_activities(d, b, i);
        if (got.internal != want.internal || got.external != want.external) {
          return {false, describe(sys) + " start " + std::to_string(i)};
        }
        if (mp::represent(d, b, i).touches_top({0, d.size()})) ++touching;
      }
      if (starts.empty() || touching != 1) {
        return {false, describe(sys) + " representation count"};
      }
      ++bases_checked;
    }
  }
  return {true, std::to_string(bases_checked) + " bases"};
}

Outcome criterion_structure(const std::vector<SigmaIntervalSystem>& all) {
  int non_lattice = 0;
  for (const auto& sys : all) {
    if (mp::has_lattice_path_certificate(sys)) continue;
    ++non_lattice;
    ElementSet firsts;
    for (const auto& iv : sys.intervals()) firsts.push_back(iv.first);
    std::sort(firsts.begin(), firsts.end());
    for (int x = 1; x <= sys.size(); ++x) {
      if (std::binary_search(firsts.begin(), firsts.end(), x)) continue;
      try {
        mp::spanning_circuit(sys, x);
      } catch (const std::exception& e) {
        return {false, describe(sys) + ": " + e.what()};
      }
    }
    if (sys.size() <= oracle::kMaxConnectivitySize &&
        !oracle::is_connected_bruteforce(oracle::to_set_system(sys))) {
      return {false, describe(sys) + " disconnected"};
    }
  }
  const bool examples =
      mp::verify_cocircuit_presentation(
          SigmaIntervalSystem(7, {{5, 2}, {2, 4}, {4, 7}})) &&
      mp::verify_cocircuit_presentation(
          SigmaIntervalSystem(7, {{6, 3}, {2, 4}, {4, 7}}));
  return {examples, std::to_string(non_lattice) + " non-lattice-path systems"};
}

double seconds_of(const std::function<void()>& run) {
  double best = 1e300;
  for (int rep = 0; rep < kTimingRepeats; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

double loglog_slope(const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

Outcome criterion_scaling() {
  const std::vector<int> sizes{20, 40, 80, 160};
  std::vector<double> ns, dp_times, act_times;
  for (int n : sizes) {
    const Diagram d = mp::build_diagram(mp::testing::whirl(n / 2), 1);
    ns.push_back(n);
    dp_times.push_back(seconds_of([&] { mp::tutte_of_diagram(d); }));
    act_times.push_back(seconds_of([&] { mp::activity_polynomial(d); }));
  }
  const double dp_slope = loglog_slope(ns, dp_times);
  const double act_slope = loglog_slope(ns, act_times);
  std::ostringstream detail;
  detail.precision(3);
  detail << "dp slope " << dp_slope << " (limit " << kDpSlopeLimit
         << "), activities slope " << act_slope << " (limit "
         << kActivitySlopeLimit << "), n=160 dp " << dp_times.back()
         << "s activities " << act_times.back() << "s";
  const bool ok = dp_slope <= kDpSlopeLimit &&
                  act_slope <= kActivitySlopeLimit &&
                  dp_times.back() < kLargestRunSeconds &&
                  act_times.back() < kLargestRunSeconds;
  return {ok, detail.str()};
}

}  // namespace

int main() {
  const auto exhaustive = mp::testing::exhaustive_corpus(kExhaustiveMaxN);
  auto all = exhaustive;
  const auto random = mp::testing::random_corpus(kRandomCount, kRandomMinN,
                                                 kRandomMaxN, kRandomSeed);
  all.insert(all.end(), random.begin(), random.end());

  report(1, "label sets equal bases for every antichain n<=7 and anchor",
         criterion_label_sets(exhaustive));
  report(2, "dp, subset expansion and activities agree",
         criterion_tutte(all));
  report(3, "whirl W3 golden values and duality", criterion_whirl());
  report(4, "extension of (5,6,3,E^5NEN^2,NEN^2E^5)", criterion_extension());
  report(5, "computation graph size within the initial-minor bound",
         criterion_minor_bound(all));
  report(6, "deletion-contraction recurrence", criterion_recurrence(all));
  report(7, "gamma table equals constrained path counts for m+r<=8",
         criterion_gamma(all));
  report(8, "path activities equal definitional activities for n<=9",
         criterion_activities(all));
  report(9, "spanning circuits, connectivity and cocircuit presentations",
         criterion_structure(all));
  report(10, "whirl runtime slopes and n=160 wall time", criterion_scaling());
  return failures == 0 ? 0 : 1;
}
