// Copyright 2026 The hyperzagreb Authors
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

#ifndef HYPERZAGREB_HPP
#define HYPERZAGREB_HPP

#include "hyperzagreb/canonical.hpp"
#include "hyperzagreb/codec.hpp"
#include "hyperzagreb/enumerate.hpp"
#include "hyperzagreb/families.hpp"
#include "hyperzagreb/graph.hpp"
#include "hyperzagreb/random.hpp"
#include "hyperzagreb/report.hpp"
#include "hyperzagreb/transforms.hpp"
#include "hyperzagreb/verify.hpp"

#endif  // HYPERZAGREB_HPP
