// Copyright 2026 The spinmean Authors
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

#ifndef SPINMEAN_SPINMEAN_H
#define SPINMEAN_SPINMEAN_H

#include "spinmean/error.h"
#include "spinmean/measure.h"
#include "spinmean/qcore.h"
#include "spinmean/represent.h"
#include "spinmean/superpose.h"

#endif
