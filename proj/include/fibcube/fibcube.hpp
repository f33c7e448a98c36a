// Copyright 2026 The fibcube Authors
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

#pragma once

// Umbrella include for the whole library.

#include "fibcube/bigint.hpp"
#include "fibcube/bitstring.hpp"
#include "fibcube/cube_oracle.hpp"
#include "fibcube/formulas.hpp"
#include "fibcube/graphs.hpp"
#include "fibcube/json_io.hpp"
#include "fibcube/numbers.hpp"
#include "fibcube/polynomial.hpp"
#include "fibcube/series.hpp"
#include "fibcube/strings.hpp"
#include "fibcube/verify.hpp"
