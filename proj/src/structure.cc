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


#include "multipath/structure.h"

#include <algorithm>
#include <string>

#include "multipath/errors.h"
#include "multipath/oracle.h"

namespace multipath {

ElementSet spanning_circuit(const SigmaIntervalSystem& sys, Element x) {
  sys.order().require_member(x);
  if (!is_antichain(sys)) {
    throw PreconditionError("spanning circuits need an antichain");
  }
  const int r = sys.interval_count();
  if (r < 2) throw PreconditionError("spanning circuits need rank at least 2");
  if (has_lattice_path_certificate(sys)) {
    throw PreconditionError("not applicable to lattice path presentations");
  }
  ElementSet circuit;
  for (const auto& iv : sys.intervals()) circuit.push_back(iv.first);
  std::sort(circuit.begin(), circuit.end());
  if (std::binary_search(circuit.begin(), circuit.end(), x)) {
    throw PreconditionError("element " + std::to_string(x) +
                            " is a first element; choose another");
  }
  circuit.insert(std::upper_bound(circuit.begin(), circuit.end(), x), x);

  const oracle::SetSystem set_system = oracle::to_set_system(sys);
  if (oracle::rank(set_system, circuit) != r) {
    throw DomainError("F + x does not have full rank");
  }
  for (std::size_t drop = 0; drop < circuit.size(); ++drop) {
    ElementSet rest = circuit;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
    if (oracle::rank(set_system, rest) != r) {
      throw DomainError("F + x has a dependent proper subset");
    }
  }
  return circuit;
}

bool verify_cocircuit_presentation(const SigmaIntervalSystem& sys) {
  if (!is_antichain(sys)) {
    throw PreconditionError("cocircuit check needs an antichain");
  }
  const oracle::SetSystem set_system = oracle::to_set_system(sys);
  const int n = sys.size();
  const ElementSet everything = [n] {
    ElementSet all(n);
    for (int e = 1; e <= n; ++e) all[e - 1] = e;
    return all;
  }();
  const int r = oracle::rank(set_system, everything);
  for (const auto& iv : sys.intervals()) {
    const ElementSet members = [&] {
      auto m = interval_members(sys.order(), iv);
      std::sort(m.begin(), m.end());
      return m;
    }();
    ElementSet outside;
    std::set_difference(everything.begin(), everything.end(), members.begin(),
                        members.end(), std::back_inserter(outside));
    if (oracle::rank(set_system, outside) != r - 1) return false;
    for (Element e : members) {
      ElementSet grown = outside;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), e), e);
      if (oracle::rank(set_system, grown) != r) return false;
    }
  }
  return true;
}

bool is_minimal_sigma_presentation(const SigmaIntervalSystem& sys) {
  if (sys.size() > kMaxMinimalitySize) {
    throw ResourceError("minimality search is limited to " +
                        std::to_string(kMaxMinimalitySize) + " elements");
  }
  if (!is_antichain(sys)) {
    throw PreconditionError("minimality check needs an antichain");
  }
  const auto bases = oracle::bases_bruteforce(oracle::to_set_system(sys));
  const CyclicOrder& order = sys.order();
  for (int i = 0; i < sys.interval_count(); ++i) {
    const SigmaInterval iv = sys.interval(i);
    if (interval_size(order, iv) == 1) continue;
    const SigmaInterval trims[] = {{order.successor(iv.first), iv.last},
                                   {iv.first, order.predecessor(iv.last)}};
    for (const SigmaInterval& trimmed : trims) {
      std::vector<SigmaInterval> ivs(sys.intervals().begin(),
                                     sys.intervals().end());
      ivs[i] = trimmed;
      const SigmaIntervalSystem smaller(sys.size(), std::move(ivs));
      if (oracle::bases_bruteforce(oracle::to_set_system(smaller)) == bases) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace multipath
