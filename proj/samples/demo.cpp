// Copyright 2026 The qqo Authors
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

// Walks the epsilon family through its three thresholds and prints what each
// certificate reports.

#include <cstdio>

#include "qqo/qqo.hpp"

int main() {
    using namespace qqo;
    std::printf("%8s %20s %10s %12s %10s %12s\n", "eps", "band", "positive", "min_choi", "ks", "ball_norm");
    for (double eps : {0.1, kCpThreshold, 0.25, 1.0 / 3.0, 0.4, kStatePreservingThreshold, 0.6}) {
        const EpsilonParam e(eps);
        const auto pos = positivity_check(e, 5000);
        const auto cp = cp_check(e);
        const auto ks = ks_global_check(build_coeff_tensor(e), 5000);
        const auto ball = ball_invariance_check(e, 5000);
        std::printf("%8.5f %20s %10s %12.6f %10s %12.6f\n", eps, to_string(e.band()).c_str(),
                    pos.is_positive ? "yes" : "no", cp.min_choi_eig, ks ? "violated" : "none found",
                    ball.worst_norm);
    }

    const Trajectory t = iterate(EpsilonParam(0.5), BlochVector(0.6, 0.3, -0.2));
    std::printf("\nV_0.5 from (0.6, 0.3, -0.2): %zu steps, converged=%d\n", t.steps.back().index, t.converged);
    return 0;
}
