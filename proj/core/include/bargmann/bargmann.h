// Copyright 2026 The Bargmann Authors
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

#ifndef BARGMANN_BARGMANN_H
#define BARGMANN_BARGMANN_H

#include "bargmann/bloch.h"
#include "bargmann/criteria.h"
#include "bargmann/error.h"
#include "bargmann/estimator.h"
#include "bargmann/fixtures.h"
#include "bargmann/invariants.h"
#include "bargmann/linalg.h"
#include "bargmann/matrix.h"
#include "bargmann/random.h"
#include "bargmann/report_json.h"
#include "bargmann/state.h"
#include "bargmann/state_io.h"
#include "bargmann/word.h"

#endif
