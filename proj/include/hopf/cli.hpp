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

#ifndef HOPF_CLI_HPP
#define HOPF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopf::cli {

// Batch front end. `args` excludes the program name. Writes results to `out`
// and diagnostics to `err`; returns 0 on success, 1 on verification failure,
// 2 on usage or parse errors. The HOPF_FORGE_CONFIG environment variable may
// point at a key=value config file; flags override it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli

#endif  // HOPF_CLI_HPP
