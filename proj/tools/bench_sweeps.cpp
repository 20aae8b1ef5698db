/* Copyright 2026 The hopf-forge Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

// Times the parallel sweep kernels against the serial reference on the
// heavier condition checks. Usage: bench-sweeps [--heavy]

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "hopf/axiomlab.hpp"
#include "hopf/instances.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

struct BenchCase {
  std::string instance;
  std::string alphabet;
  std::uint64_t bound;
  hopf::Cond cond;
};

double run_once(const hopf::Rule& rule, const hopf::axiomlab::Domain& dom, hopf::Cond cond,
                bool parallel) {
  hopf::axiomlab::CheckOptions opts;
  opts.parallel = parallel;
  const hopf::axiomlab::Report r = hopf::axiomlab::check_condition(rule, cond, dom, opts);
  return r.wall_ms;
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--heavy") == 0) heavy = true;

  std::vector<BenchCase> cases{
      {"free", "ab", 4, hopf::Cond::C2},
      {"shuffle", "ab", heavy ? 4u : 3u, hopf::Cond::C2},
      {"shuffle", "ab", 4, hopf::Cond::CD1},
      {"graph", "", 3, hopf::Cond::C2},
      {"forest", "", 4, hopf::Cond::CD1},
  };

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial path\n");
#endif
  std::printf("%-10s %-5s %-6s %12s %12s %9s\n", "instance", "cond", "bound", "serial ms",
              "parallel ms", "speedup");

  for (const BenchCase& bc : cases) {
    const hopf::Rule rule = hopf::instances::make_rule(bc.instance, bc.alphabet);
    const hopf::axiomlab::Domain dom = hopf::axiomlab::Domain::enumerate(rule, bc.bound);
    const double serial = run_once(rule, dom, bc.cond, false);
    const double parallel = run_once(rule, dom, bc.cond, true);
    std::printf("%-10s %-5s %-6llu %12.1f %12.1f %8.2fx\n", bc.instance.c_str(),
                hopf::cond_name(bc.cond), static_cast<unsigned long long>(bc.bound), serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
  }
  return 0;
}
