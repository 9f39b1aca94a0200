// Copyright 2026 The mdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdd/valuation.hpp"

namespace mdd {

PropertyReport check_properties(const Valuation& v, std::size_t cap) {
  const std::size_t m = v.ground_size();
  require_within_cap("check_properties ground", m, cap);
  const auto table = tabulate(v, cap);
  const Mask full = table.size() - 1;
  PropertyReport out;

  out.empty_value = table[0];
  out.normalized = table[0] == 0;

  for (Item i = 0; i < m; ++i) {
    if (table[Mask{1} << i] == 0) out.trivial_items.push_back(i);
  }

  for (Mask s = 0; s <= full && out.monotone; ++s) {
    for (Item i = 0; i < m; ++i) {
      const Mask bit = Mask{1} << i;
      if ((s & bit) != 0) continue;
      if (table[s] > table[s | bit]) {
        out.monotone = false;
        out.monotone_violation = MonotoneViolation{ItemSet::from_mask(m, s),
                                                   ItemSet::from_mask(m, s | bit)};
        break;
      }
    }
  }

  for (Mask x = 0; x <= full && out.submodular; ++x) {
    for (Item y = 0; y < m && out.submodular; ++y) {
      const Mask by = Mask{1} << y;
      if ((x & by) != 0) continue;
      for (Item z = y + 1; z < m; ++z) {
        const Mask bz = Mask{1} << z;
        if ((x & bz) != 0) continue;
        if (table[x | by | bz] - table[x | by] > table[x | bz] - table[x]) {
          out.submodular = false;
          out.submodular_violation = SubmodularViolation{ItemSet::from_mask(m, x), y, z};
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace mdd
