// Copyright 2026 The qcx Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>

namespace qcx {

/// Shortest decimal that parses back to exactly `value`,
/// e.g. 1.5707963267948966 for pi/2.
[[nodiscard]] std::string format_angle(double value);

/// Compact rendering with `digits` significant digits for diagrams.
[[nodiscard]] std::string format_angle_short(double value, int digits = 4);

} // namespace qcx
