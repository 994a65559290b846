// Copyright 2026 The noonecp Authors
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

#ifndef NOONECP_SRC_LADDER_HPP
#define NOONECP_SRC_LADDER_HPP

#include <cmath>

namespace noonecp::detail {

// √((m+n)!/m!), picked up by (a†)^n acting on |m>.
inline double raising_factor(int m, int n) {
  double f = 1.0;
  for (int k = m + 1; k <= m + n; ++k) f *= std::sqrt(static_cast<double>(k));
  return f;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace noonecp::detail

#endif  // NOONECP_SRC_LADDER_HPP
