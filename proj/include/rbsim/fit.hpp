// Copyright 2026 The rbsim Authors
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

#ifndef RBSIM_FIT_HPP
#define RBSIM_FIT_HPP

#include <vector>

#include <stdexcept>

namespace rbsim {

struct DecayPoint {
    double m = 0;       // sequence length
    double mean = 0;    // mean survival over seeds
    double stderr_ = 0; // standard error of the mean (0 allowed)
};

struct DecayFit {
    double a = 0, alpha = 1, b = 0;
    double a_err = 0, alpha_err = 0, b_err = 0;
    double residual = 0;  // weighted sum of squares
    bool degenerate = false;  // flat-at-constant data, alpha pinned to 1
    bool converged = false;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Weighted least squares of A alpha^m + B via Levenberg-Marquardt.
/// b0_init seeds B (1/2^n joint, 1/2 marginal); alpha clamped to [0,1].
DecayFit fit_decay(const std::vector<DecayPoint>& curve, double b0_init);

}  // namespace rbsim

#endif  // RBSIM_FIT_HPP
