// Copyright 2026 The nml Authors.
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

#ifndef NML_NML_HPP
#define NML_NML_HPP

#include "nml/bounds.hpp"
#include "nml/constructions.hpp"
#include "nml/errors.hpp"
#include "nml/field.hpp"
#include "nml/hamming_space.hpp"
#include "nml/io.hpp"
#include "nml/nm_core.hpp"
#include "nml/rational.hpp"
#include "nml/search.hpp"
#include "nml/seller.hpp"

#endif  // NML_NML_HPP
