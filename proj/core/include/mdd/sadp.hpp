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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mdd/valuation.hpp"

namespace mdd {

enum class Construction { kItemTruncation, kValueTruncation };

std::string to_string(Construction c);
Construction parse_construction(std::string_view text);

/// Where an SADP instance came from.
struct Provenance {
  Valuation v;
  Valuation w;
  Construction construction;
  /// Item-count cap y = m for IT, value cap x = 2k v([m]) for VT.
  Value truncation = 0;
};

/// v_1..v_k on a common ground.
class SADPInstance {
 public:
  SADPInstance(std::vector<Valuation> valuations, std::optional<Provenance> provenance = {});

  const std::vector<Valuation>& valuations() const { return valuations_; }
  const Valuation& at(std::size_t l) const { return valuations_.at(l - 1); }  // 1-based
  std::size_t k() const { return valuations_.size(); }
  std::size_t ground_size() const { return valuations_.front().ground_size(); }
  const std::optional<Provenance>& provenance() const { return provenance_; }
  /// Item count m of the source pair (ground / (k-1)).
  std::size_t block_size() const { return ground_size() / (k() - 1); }

 private:
  std::vector<Valuation> valuations_;
  std::optional<Provenance> provenance_;
};

}  // namespace mdd
