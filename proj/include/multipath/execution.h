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

#ifndef MULTIPATH_EXECUTION_H_
#define MULTIPATH_EXECUTION_H_

namespace multipath {

// Kernels with a data-parallel inner loop take one of these. kSerial is the
// reference path; kParallel splits the loop with OpenMP when available and
// must produce identical results.
enum class Execution { kSerial, kParallel };

// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_threads();

}  // namespace multipath

#endif  // MULTIPATH_EXECUTION_H_
