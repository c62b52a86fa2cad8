// Copyright 2026 The strongclique Authors
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

#include "strongclique/coloring.hpp"
#include "strongclique/enumerate.hpp"
#include "strongclique/errors.hpp"
#include "strongclique/generators.hpp"
#include "strongclique/graph.hpp"
#include "strongclique/io.hpp"
#include "strongclique/line_analysis.hpp"
#include "strongclique/matching.hpp"
#include "strongclique/oracles.hpp"
#include "strongclique/predicates.hpp"
#include "strongclique/recognizers.hpp"
#include "strongclique/report.hpp"
#include "strongclique/strong.hpp"
#include "strongclique/transforms.hpp"
#include "strongclique/vertex_set.hpp"
