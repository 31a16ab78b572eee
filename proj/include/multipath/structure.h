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


#ifndef MULTIPATH_STRUCTURE_H_
#define MULTIPATH_STRUCTURE_H_

#include "multipath/cyclic.h"
#include "multipath/presentation.h"

namespace multipath {

// F + x with F the set of first elements: a circuit of rank r. Checked by
// matching ranks before it is returned. PreconditionError for a
// non-antichain, a lattice path presentation, r < 2 or x in F.
ElementSet spanning_circuit(const SigmaIntervalSystem& sys, Element x);

// Every interval is a cocircuit: its complement has rank r-1 and adding
// any element of the interval restores rank r.
bool verify_cocircuit_presentation(const SigmaIntervalSystem& sys);

// No interval can lose its first or last element without changing the
// matroid. A single trim suffices: trims only shrink the independent sets,
// so a longer chain of trims that keeps the matroid keeps it at every step.
// ResourceError above kMaxMinimalitySize elements.
inline constexpr int kMaxMinimalitySize = 12;
bool is_minimal_sigma_presentation(const SigmaIntervalSystem& sys);

}  // namespace multipath

#endif  // MULTIPATH_STRUCTURE_H_
