// Copyright 2026 The gatecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GATECAP_TESTS_TEST_UTIL_HPP
#define GATECAP_TESTS_TEST_UTIL_HPP

#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "gatecap/qalg.hpp"

#define CHECK_NEAR(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))

namespace testutil {

inline gatecap::StateVector make_state(std::vector<gatecap::Subsystem> layout,
                                       std::vector<gatecap::Complex> amps) {
    gatecap::Vector v(static_cast<int>(amps.size()));
    for (int i = 0; i < v.size(); ++i) {
        v[i] = amps[static_cast<std::size_t>(i)];
    }
    return gatecap::StateVector(std::move(v), std::move(layout));
}

// |Phi_n>_{AA'} |Phi_n>_{BB'} on the standard four-register layout.
inline gatecap::StateVector double_epr(int n) {
    using gatecap::Side;
    using gatecap::StateVector;
    using gatecap::Subsystem;
    StateVector left(gatecap::phi_vector(n),
                     {Subsystem{"A", n, Side::alice}, Subsystem{"A'", n, Side::alice}});
    StateVector right(gatecap::phi_vector(n),
                      {Subsystem{"B", n, Side::bob}, Subsystem{"B'", n, Side::bob}});
    return gatecap::tensor_product(left, right);
}

inline std::string write_temp_file(const std::string &stem, const std::string &content) {
    std::string path = "/tmp/gatecap_test_" + stem;
    std::ofstream out(path);
    out << content;
    out.close();
    return path;
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI binary with the given argument string, capturing stdout
// (and stderr too when merge_stderr is set).
inline CliResult run_cli(const std::string &args, bool merge_stderr = false) {
#ifdef GATECAP_CLI_PATH
    std::string cmd = std::string(GATECAP_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
#else
    std::string cmd = "false";
    (void)merge_stderr;
#endif
    CliResult result;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testutil

#endif
