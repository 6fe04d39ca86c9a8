// Copyright 2026 The qwc Authors
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

#include "qwc/block.hpp"
#include "qwc/cocycle.hpp"
#include "qwc/errors.hpp"
#include "qwc/harness.hpp"
#include "qwc/holevo.hpp"
#include "qwc/ito.hpp"
#include "qwc/mat.hpp"
#include "qwc/models.hpp"
#include "qwc/random.hpp"
#include "qwc/scenario.hpp"
#include "qwc/selftest.hpp"
#include "qwc/walk.hpp"
