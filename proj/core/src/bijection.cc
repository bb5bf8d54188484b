// Copyright 2026 The Arndt Compositions Authors
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

#include "arndt/bijection.h"

#include <stdexcept>
#include <vector>

namespace arndt {

Composition reduced_ap_to_arndt(const Composition& c) {
  if (!is_reduced_ap_representative(c)) {
    throw std::domain_error(c.to_string() +
                            " is not a reduced anti-palindromic representative");
  }
  const Parts in = c.parts();
  const std::size_t n = in.size();
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    out.push_back(in[i]);
    out.push_back(in[n - 1 - i]);
  }
  if (n % 2 == 1) out.push_back(in[n / 2]);
  return Composition(std::move(out));
}

Composition arndt_to_reduced_ap(const Composition& c) {
  if (!is_arndt(c)) {
    throw std::domain_error(c.to_string() + " is not an Arndt composition");
  }
  const Parts in = c.parts();
  const std::size_t n = in.size();
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    out[i] = in[2 * i];
    out[n - 1 - i] = in[2 * i + 1];
  }
  if (n % 2 == 1) out[n / 2] = in[n - 1];
  return Composition(std::move(out));
}

}  // namespace arndt
