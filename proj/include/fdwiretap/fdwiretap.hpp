// SPDX-License-Identifier: Apache-2.0
//
// fdwiretap: secrecy-rate simulation for two-way full-duplex MIMOME links
// Copyright (C) 2026 The fdwiretap Authors
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

#ifndef FDWIRETAP_FDWIRETAP_HPP
#define FDWIRETAP_FDWIRETAP_HPP

#include "approx.hpp"
#include "channel.hpp"
#include "coarse_alloc.hpp"
#include "config.hpp"
#include "fine_alloc.hpp"
#include "precoding.hpp"
#include "rates.hpp"
#include "rng.hpp"
#include "types.hpp"

#include "experiments/catalog.hpp"
#include "experiments/config_file.hpp"
#include "experiments/csv.hpp"
#include "experiments/hd_baseline.hpp"
#include "experiments/runner.hpp"
#include "experiments/scenario.hpp"

#endif
