// Copyright 2026 The nashfrag Authors
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

#ifndef NASHFRAG_NASHFRAG_HPP_
#define NASHFRAG_NASHFRAG_HPP_

#include "nashfrag/builtins.hpp"
#include "nashfrag/dynamics.hpp"
#include "nashfrag/equilibrium.hpp"
#include "nashfrag/error.hpp"
#include "nashfrag/game.hpp"
#include "nashfrag/lp.hpp"
#include "nashfrag/newton_support.hpp"
#include "nashfrag/nfg.hpp"
#include "nashfrag/replicator.hpp"
#include "nashfrag/solve.hpp"
#include "nashfrag/stability.hpp"
#include "nashfrag/support_enumeration.hpp"
#include "nashfrag/zero_sum.hpp"

#endif  // NASHFRAG_NASHFRAG_HPP_
