// Copyright 2026 The rstp Authors
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

#ifndef RSTP_RSTP_HPP_
#define RSTP_RSTP_HPP_

#include "rstp/configuration.hpp"
#include "rstp/graph.hpp"
#include "rstp/instances.hpp"
#include "rstp/mst.hpp"
#include "rstp/oracle.hpp"
#include "rstp/pruning.hpp"
#include "rstp/report.hpp"
#include "rstp/robust.hpp"
#include "rstp/search.hpp"

#endif  // RSTP_RSTP_HPP_
