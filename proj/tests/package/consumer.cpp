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

#include <iostream>

#include "mdd/instances.hpp"
#include "mdd/solvers.hpp"

int main() {
  const mdd::PerturbableFamily f = mdd::boxs_family(4);
  const mdd::OdpResult r = mdd::brute_force_odp(f.base, mdd::perturb(f, mdd::ItemSet(4, {0, 1})));
  std::cout << mdd::to_string(r.set) << " " << r.value << "\n";
  return r.value == 1 ? 0 : 1;
}
