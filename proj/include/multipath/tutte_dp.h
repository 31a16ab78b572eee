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


#ifndef MULTIPATH_TUTTE_DP_H_
#define MULTIPATH_TUTTE_DP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "multipath/diagram.h"
#include "multipath/execution.h"
#include "multipath/polynomial.h"
#include "multipath/presentation.h"

namespace multipath {

struct GraphVertex {
  Diagram diagram;
  ElementKind kind = ElementKind::kOrdinary;  // of the greatest element
  std::optional<int> c_child;  // contract the greatest element
  std::optional<int> d_child;  // delete it
};

// Vertices grouped by level; level h holds diagrams on h elements, sorted
// by canonical encoding. Every edge goes from level h to level h-1.
struct ComputationGraph {
  std::vector<GraphVertex> vertices;
  std::vector<std::vector<int>> levels;
  int source = 0;
  int sink = 0;

  int size() const { return static_cast<int>(vertices.size()); }
  int edge_count() const;
};

// Expands D level by level. Children of a level are collected, sorted and
// deduplicated, then located by binary search.
ComputationGraph build_computation_graph(const Diagram& d);

// Out-edge rules, level structure, unique source and sink. Throws
// GraphInvariantError on the first violation.
void validate_graph(const ComputationGraph& g);

// Level sweep from the sink. Only two levels of polynomials are alive at
// once; kParallel evaluates the vertices of a level concurrently.
BivariatePolynomial tutte_from_graph(const ComputationGraph& g,
                                     Execution exec = Execution::kParallel);

BivariatePolynomial tutte_of_diagram(const Diagram& d,
                                     Execution exec = Execution::kParallel);

// (n+1)(min(r,m)+1)(k^2+k)/2, an upper bound on the number of distinct
// initial-minor diagrams of d.
std::int64_t initial_minor_bound(const Diagram& d);

// A presentation with its loops split off. `diagram` is D(core, 1) and is
// absent when every element is a loop.
struct LoopFreeCore {
  int size = 0;
  int rank = 0;
  int loop_count = 0;
  std::optional<Diagram> diagram;
};

// Normalizes a condition (C) presentation (NormalizationError otherwise)
// and removes its loops.
LoopFreeCore split_loops(const SigmaIntervalSystem& sys);

// t(core) * y^loop_count, boxed (rank, size - rank).
BivariatePolynomial reinstate_loops(const BivariatePolynomial& core_tutte,
                                    const LoopFreeCore& core);

// Tutte polynomial of M[sys] through the computation graph of D(sys, 1).
BivariatePolynomial tutte(const SigmaIntervalSystem& sys,
                          Execution exec = Execution::kParallel);

}  // namespace multipath

#endif  // MULTIPATH_TUTTE_DP_H_
