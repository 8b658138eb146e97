// Copyright 2026 The qkr Authors
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

#pragma once

#include <optional>

namespace qkr {

enum class LambertBranch {
  kPrincipal,  // W0, defined on [-1/e, inf), W >= -1
  kMinusOne,   // W-1, defined on [-1/e, 0), W <= -1
};

/// Real Lambert W: the w solving w * e^w = x on the requested branch.
///
/// Returns std::nullopt when x < -1/e (no real solution on either branch).
/// Throws std::domain_error for the minus-one branch with x >= 0.
///
/// Halley iteration from a branch-appropriate starting point; converges to
/// a residual |w e^w - x| <= 1e-12 * max(1, |x|).
std::optional<double> lambert_w(LambertBranch branch, double x);

}  // namespace qkr
