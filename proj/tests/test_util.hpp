// Copyright 2026 The strongclique Authors
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

#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "strongclique/strongclique.hpp"

namespace strongclique::testing {

inline VertexSet vs(int n, std::initializer_list<Vertex> members) { return VertexSet(n, members); }

/// Sets as sorted member lists, for order-free comparisons.
inline std::set<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& sets) {
  std::set<std::vector<Vertex>> out;
  for (const VertexSet& s : sets) out.insert(s.to_vector());
  return out;
}

/// Paw: triangle {0,1,2} with pendant 3 at 2.
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

/// Bull: a=0, b=1, c=2, d=3, e=4 with edges ab, bc, cd, be, ce.
inline Graph bull() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}); }

/// Every graph of order at most `max_order`, computed once per process.
inline const std::vector<std::vector<SmallGraph>>& corpus(int max_order) {
  static std::vector<std::vector<SmallGraph>> cache;
  if (static_cast<int>(cache.size()) <= max_order) cache = all_graphs_up_to(max_order);
  return cache;
}

inline const OracleConfig kTestCap{64};

}  // namespace strongclique::testing
