// SPDX-License-Identifier: Apache-2.0
//
// mcia - closed-form interference alignment for multi-cell downlink networks
// Copyright (C) 2026 The mcia authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "mcia/coders.hpp"

#include <string>

#include "mcia/errors.hpp"

namespace mcia {

void normalize_coders(CoderSet& cs) {
  for (auto& [id, u] : cs.receive_filters) {
    if (numerical_rank(u) < u.cols()) {
      throw Error(ErrorKind::SingularConstruction, "receive filter of user (" + std::to_string(id.cell) + "," +
                                                       std::to_string(id.user) + ") is rank-deficient");
    }
    u = orthonormalize_columns(u);
  }
  for (auto& [id, v] : cs.precoders) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
      const double n = v.col(c).norm();
      if (!(n > 0.0)) {
        throw Error(ErrorKind::SingularConstruction, "precoder column of user (" + std::to_string(id.cell) + "," +
                                                         std::to_string(id.user) + ") vanished");
      }
      v.col(c) /= n;
    }
  }
}

}  // namespace mcia
