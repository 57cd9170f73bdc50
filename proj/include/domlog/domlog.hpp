/*
 *  Copyright (c) 2026 The domlog authors.
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include "domlog/asp.hpp"
#include "domlog/cp.hpp"
#include "domlog/error.hpp"
#include "domlog/fca.hpp"
#include "domlog/io.hpp"
#include "domlog/logic.hpp"
#include "domlog/poset.hpp"
#include "domlog/program.hpp"
