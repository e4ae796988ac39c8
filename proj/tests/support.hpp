// Copyright 2026 The entkit authors
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

#ifndef ENTKIT_TESTS_SUPPORT_HPP
#define ENTKIT_TESTS_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <random>

#include "entkit/statebank.hpp"

namespace testsupport {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Sign-change bisection over [lo, hi]; assumes f(lo) and f(hi) bracket a root.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 80) {
    double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

inline entkit::statebank::DensityMatrix state(const std::string& family,
                                              const entkit::statebank::Params& p = {}) {
    return entkit::statebank::make_state(family, p);
}

inline double max_abs_diff(const entkit::matkit::Mat& a, const entkit::matkit::Mat& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testsupport

#endif  // ENTKIT_TESTS_SUPPORT_HPP
