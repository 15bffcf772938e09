/*
 * Copyright 2026 The sitesurvey Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SITESURVEY_SITESURVEY_HPP
#define SITESURVEY_SITESURVEY_HPP

#include <sitesurvey/coverage.hpp>
#include <sitesurvey/fit.hpp>
#include <sitesurvey/io.hpp>
#include <sitesurvey/planner.hpp>
#include <sitesurvey/propagation.hpp>
#include <sitesurvey/synthgen.hpp>
#include <sitesurvey/units.hpp>

#endif // SITESURVEY_SITESURVEY_HPP
