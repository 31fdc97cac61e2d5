/* Copyright 2026 The RankSeg Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef RANKSEG_RANKSEG_HPP_
#define RANKSEG_RANKSEG_HPP_

#include "rankseg/error.hpp"
#include "rankseg/metrics.hpp"
#include "rankseg/multiseg.hpp"
#include "rankseg/parallel.hpp"
#include "rankseg/pbdist.hpp"
#include "rankseg/pipeline.hpp"
#include "rankseg/prob_vector.hpp"
#include "rankseg/rankdice.hpp"
#include "rankseg/rankiou.hpp"
#include "rankseg/ranking.hpp"
#include "rankseg/simgen.hpp"

#endif  // RANKSEG_RANKSEG_HPP_
