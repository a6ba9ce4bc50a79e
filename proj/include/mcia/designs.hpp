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
#pragma once

#include <cstdint>

#include "mcia/coders.hpp"
#include "mcia/tables.hpp"

namespace mcia {

/// Closed-form zero-forcing designs A-E on the fully connected network.
CoderSet design_full_connected(const ChannelSet& ch, Approach approach, std::uint64_t seed);

/// Designs A-E on the cyclic two-side network; ICI only from k-1 and k+1.
CoderSet design_cyclic_two_side(const ChannelSet& ch, Approach approach, std::uint64_t seed);

/// Designs A-E on the cyclic one-side network; edge users hear cell k+1.
CoderSet design_cyclic_one_side(const ChannelSet& ch, Approach approach, std::uint64_t seed);

/// Topology-agnostic entry point shared by the three functions above.
CoderSet design_basic(const ChannelSet& ch, Approach approach, std::uint64_t seed);

}  // namespace mcia
