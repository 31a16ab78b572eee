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


#include "multipath/tutte_dp.h"

#include <algorithm>
#include <string>

#include "multipath/errors.h"

namespace multipath {
namespace {

void fail(const std::string& what) { throw GraphInvariantError(what); }

}  // namespace

int ComputationGraph::edge_count() const {
  int edges = 0;
  for (const auto& v : vertices) {
    edges += (v.c_child ? 1 : 0) + (v.d_child ? 1 : 0);
  }
  return edges;
}

ComputationGraph build_computation_graph(const Diagram& d) {
  const int n = d.size();
  ComputationGraph g;
  g.levels.resize(n + 1);
  g.vertices.push_back(GraphVertex{d, ElementKind::kOrdinary, std::nullopt, std::nullopt});
  g.levels[n].push_back(0);
  g.source = 0;

  for (int h = n; h >= 1; --h) {
    std::vector<Diagram> next;
    std::vector<std::optional<Diagram>> c_of, d_of;
    const ElementSet last{h};
    for (int id : g.levels[h]) {
      const Diagram& u = g.vertices[id].diagram;
      auto c = initial_minor_diagram(u, {}, last);
      auto del = initial_minor_diagram(u, last, {});
      // Eq. (2): an isthmus is only contracted, a loop only deleted.
      if (c && del) {
        g.vertices[id].kind = ElementKind::kOrdinary;
      } else if (c) {
        g.vertices[id].kind = ElementKind::kIsthmus;
      } else if (del) {
        g.vertices[id].kind = ElementKind::kLoop;
      } else {
        fail("diagram " + u.encoding() + " has no minor on its last element");
      }
      if (c) next.push_back(*c);
      if (del) next.push_back(*del);
      c_of.push_back(std::move(c));
      d_of.push_back(std::move(del));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    const int base = g.size();
    for (auto& child : next) {
      g.levels[h - 1].push_back(g.size());
      g.vertices.push_back(GraphVertex{std::move(child), ElementKind::kOrdinary,
                                      std::nullopt, std::nullopt});
    }
    auto locate = [&](const Diagram& child) {
      auto it = std::lower_bound(
          g.vertices.begin() + base, g.vertices.end(), child,
          [](const GraphVertex& v, const Diagram& x) { return v.diagram < x; });
      return static_cast<int>(it - g.vertices.begin());
    };
    for (std::size_t i = 0; i < g.levels[h].size(); ++i) {
      GraphVertex& v = g.vertices[g.levels[h][i]];
      if (c_of[i]) v.c_child = locate(*c_of[i]);
      if (d_of[i]) v.d_child = locate(*d_of[i]);
    }
  }
  if (g.levels[0].size() != 1) fail("level 0 must hold exactly the empty diagram");
  g.sink = g.levels[0][0];
  return g;
}

void validate_graph(const ComputationGraph& g) {
  const int n = static_cast<int>(g.levels.size()) - 1;
  if (n < 0) fail("graph has no levels");
  std::vector<int> level_of(g.vertices.size(), -1);
  for (int h = 0; h <= n; ++h) {
    for (int id : g.levels[h]) {
      if (id < 0 || id >= g.size() || level_of[id] != -1) {
        fail("vertex " + std::to_string(id) + " is misplaced in the levels");
      }
      level_of[id] = h;
      if (g.vertices[id].diagram.size() != h) {
        fail("vertex " + std::to_string(id) + " sits on the wrong level");
      }
    }
  }
  std::vector<int> indegree(g.vertices.size(), 0);
  for (int id = 0; id < g.size(); ++id) {
    const GraphVertex& v = g.vertices[id];
    if (level_of[id] == -1) fail("vertex " + std::to_string(id) + " has no level");
    const bool c = v.c_child.has_value();
    const bool d = v.d_child.has_value();
    const bool ok = level_of[id] == 0
                        ? !c && !d
                        : (v.kind == ElementKind::kIsthmus && c && !d) ||
                              (v.kind == ElementKind::kLoop && !c && d) ||
                              (v.kind == ElementKind::kOrdinary && c && d);
    if (!ok) fail("vertex " + std::to_string(id) + " breaks the out-edge rules");
    for (const auto& child : {v.c_child, v.d_child}) {
      if (!child) continue;
      if (*child < 0 || *child >= g.size() ||
          level_of[*child] != level_of[id] - 1) {
        fail("edge from vertex " + std::to_string(id) + " skips a level");
      }
      ++indegree[*child];
    }
  }
  if (g.levels[n].size() != 1 || g.levels[n][0] != g.source) {
    fail("the source must be the only vertex on the top level");
  }
  if (g.levels[0].size() != 1 || g.levels[0][0] != g.sink) {
    fail("the sink must be the only vertex on level 0");
  }
  for (int id = 0; id < g.size(); ++id) {
    if (id != g.source && indegree[id] == 0) {
      fail("vertex " + std::to_string(id) + " is a second source");
    }
  }
}

BivariatePolynomial tutte_from_graph(const ComputationGraph& g,
                                     Execution exec) {
  const int n = static_cast<int>(g.levels.size()) - 1;
  // Position of each vertex within its level.
  std::vector<int> slot(g.vertices.size());
  for (const auto& level : g.levels) {
    for (std::size_t i = 0; i < level.size(); ++i) slot[level[i]] = static_cast<int>(i);
  }
  std::vector<BivariatePolynomial> below{BivariatePolynomial::constant(1)};
  for (int h = 1; h <= n; ++h) {
    const auto& level = g.levels[h];
    std::vector<BivariatePolynomial> here(level.size());
    auto eval = [&](std::size_t i) {
      const GraphVertex& v = g.vertices[level[i]];
      const int r = v.diagram.r();
      const int m = v.diagram.m();
      switch (v.kind) {
        case ElementKind::kIsthmus:
          here[i] = poly_step(below[slot[*v.c_child]], PolyStep::kTimesX, r, m);
          break;
        case ElementKind::kLoop:
          here[i] = poly_step(below[slot[*v.d_child]], PolyStep::kTimesY, r, m);
          break;
        case ElementKind::kOrdinary:
          here[i] = poly_step(below[slot[*v.d_child]], PolyStep::kAdd, r, m,
                              &below[slot[*v.c_child]]);
          break;
      }
    };
    const auto count = static_cast<std::ptrdiff_t>(level.size());
    if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < count; ++i) eval(static_cast<std::size_t>(i));
    } else {
      for (std::ptrdiff_t i = 0; i < count; ++i) eval(static_cast<std::size_t>(i));
    }
    below = std::move(here);
  }
  return std::move(below.front());
}

BivariatePolynomial tutte_of_diagram(const Diagram& d, Execution exec) {
  return tutte_from_graph(build_computation_graph(d), exec);
}

std::int64_t initial_minor_bound(const Diagram& d) {
  const std::int64_t n = d.size();
  const std::int64_t k = d.k();
  return (n + 1) * (std::min(d.r(), d.m()) + 1) * (k * k + k) / 2;
}

LoopFreeCore split_loops(const SigmaIntervalSystem& sys) {
  SigmaIntervalSystem core =
      is_antichain(sys) ? sys : normalize_to_antichain(sys);
  LoopFreeCore out;
  out.size = sys.size();
  out.rank = core.interval_count();
  const ElementSet loop_set = loops(core);
  out.loop_count = static_cast<int>(loop_set.size());
  if (out.loop_count == out.size) return out;
  for (auto it = loop_set.rbegin(); it != loop_set.rend(); ++it) {
    core = delete_element(core, *it);
  }
  out.diagram = build_diagram(core, 1);
  return out;
}

BivariatePolynomial reinstate_loops(const BivariatePolynomial& core_tutte,
                                    const LoopFreeCore& core) {
  BivariatePolynomial out =
      core_tutte.resized(core.rank, core.size - core.rank);
  for (int i = 0; i < core.loop_count; ++i) out.shift_y();
  return out;
}

BivariatePolynomial tutte(const SigmaIntervalSystem& sys, Execution exec) {
  const LoopFreeCore core = split_loops(sys);
  const BivariatePolynomial t = core.diagram
                                    ? tutte_of_diagram(*core.diagram, exec)
                                    : BivariatePolynomial::constant(1);
  return reinstate_loops(t, core);
}

}  // namespace multipath
