// Copyright 2026 The radrq Authors.
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

#include "radrq/atlas.hpp"
#include "radrq/bleu.hpp"
#include "radrq/corpus.hpp"
#include "radrq/emit.hpp"
#include "radrq/extract.hpp"
#include "radrq/geometry.hpp"
#include "radrq/grounding.hpp"
#include "radrq/lexical.hpp"
#include "radrq/lexicon.hpp"
#include "radrq/matching.hpp"
#include "radrq/pattern.hpp"
#include "radrq/perturb.hpp"
#include "radrq/rng.hpp"
#include "radrq/score.hpp"
#include "radrq/text.hpp"
