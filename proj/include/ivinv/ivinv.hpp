// Copyright 2026 The ivinv Authors
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

#ifndef IVINV_IVINV_HPP
#define IVINV_IVINV_HPP

#include "ivinv/allocation.hpp"
#include "ivinv/coalition.hpp"
#include "ivinv/cost_game.hpp"
#include "ivinv/error.hpp"
#include "ivinv/interval.hpp"
#include "ivinv/inventory.hpp"
#include "ivinv/properties.hpp"
#include "ivinv/report.hpp"
#include "ivinv/shapley_sampler.hpp"
#include "ivinv/situation_io.hpp"
#include "ivinv/tolerance.hpp"

#endif  // IVINV_IVINV_HPP
