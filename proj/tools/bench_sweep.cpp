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

// Benchmark comparing the OpenMP sweep engine against the serial reference
// and verifying that both produce byte-identical CSV output.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "entkit/sweep.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    int steps = argc > 1 ? std::atoi(argv[1]) : 160;
    entkit::sweep::SweepSpec spec;
    spec.family = "iso3";
    spec.param = "f";
    spec.start = 0.0;
    spec.stop = 1.0;
    spec.steps = steps;
    spec.criteria = {"ppt", "ccnr", "ct", "r_moment", "spa_r", "thm64", "witness_wn"};

    auto t0 = std::chrono::steady_clock::now();
    auto serial = entkit::sweep::run_serial(spec);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = entkit::sweep::run(spec);
    auto t2 = std::chrono::steady_clock::now();

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("sweep: %d points x %zu criteria\n", steps, spec.criteria.size());
    std::printf("serial reference: %8.3f s\n", ts);
    std::printf("openmp (%2d thr):  %8.3f s  (speedup %.2fx)\n", threads, tp, ts / tp);

    std::string cs = entkit::sweep::to_csv(spec, serial);
    std::string cp = entkit::sweep::to_csv(spec, parallel);
    if (cs != cp) {
        std::printf("FAIL: serial and parallel outputs differ\n");
        return 1;
    }
    std::printf("outputs byte-identical: yes\n");
    return 0;
}
