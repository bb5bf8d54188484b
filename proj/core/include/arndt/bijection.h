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

#ifndef ARNDT_BIJECTION_H_
#define ARNDT_BIJECTION_H_

#include "arndt/composition.h"

namespace arndt {

// Weight- and parts-preserving bijection between reduced anti-palindromic
// representatives and Arndt compositions. The i-th mirrored pair
// (sigma_i, sigma_{l+1-i}) becomes the i-th adjacent pair, outermost first;
// an odd middle part goes last:
//   (2,3,6,2,1) <-> (2,1,3,2,6).

// Throws std::domain_error unless is_reduced_ap_representative(c).
Composition reduced_ap_to_arndt(const Composition& c);

// Throws std::domain_error unless is_arndt(c).
Composition arndt_to_reduced_ap(const Composition& c);

}  // namespace arndt

#endif  // ARNDT_BIJECTION_H_
