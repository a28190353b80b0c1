/*
   Copyright 2026 The lefschetz authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance gate. Runs every verification suite and prints one pass/fail
// line per criterion, with measured runtimes against the pinned budgets.
// Exit code 0 only when every line passes.

#include <cstdio>
#include <vector>

#include "lefschetz/verify.hpp"

using namespace lefschetz;

int main() {
    std::vector<CheckResult> all;
    auto run = [&all](std::vector<CheckResult> results) {
        for (auto& r : results) {
            std::printf("%s %s  [%.2fs]  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        r.seconds, r.detail.c_str());
            std::fflush(stdout);
            all.push_back(std::move(r));
        }
    };
    run(verify_paper_examples());
    run(verify_theorem_main_ci());
    run(verify_properties());
    run(verify_module_consistency());
    std::printf(
        "SKIP 6 primary-decomposition component lists, jumping-conic degree claims, and liaison "
        "dimension counts are excluded by contract\n");
    int passed = 0;
    for (const auto& r : all)
        if (r.passed) ++passed;
    std::printf("%d/%zu criteria passed\n", passed, all.size());
    return all_passed(all) ? 0 : 1;
}
