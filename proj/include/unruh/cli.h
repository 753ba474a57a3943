// Copyright 2026 The Unruh Channel Authors
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

#ifndef UNRUH_CLI_H
#define UNRUH_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace unruh::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kIo = 3,
    kNumerical = 4,
};

enum class Scale { kLinear, kLog };
enum class Format { kCsv, kJson };

struct SweepConfig {
    double omega = 0.1;
    double a_min = 0.05;
    double a_max = 50;
    size_t steps = 200;
    Scale scale = Scale::kLog;
    Format format = Format::kCsv;
    /// "-" writes to the provided output stream.
    std::string output_path = "-";

    /// Throws DomainError on a_min <= 0, a_max <= a_min, omega <= 0 or steps < 2.
    void validate() const;
};

struct SweepRow {
    double a;
    double r;
    double bell_half;
    double concurrence;
    double f_max;
    double qmid;
};

inline constexpr const char *kSweepHeader = "a,r,bell_half,concurrence,f_max,qmid";
inline constexpr const char *kQmidConventionComment =
    "# qmid: marginal eigenvalue pairs closer than 1e-9 are dephased in the computational basis";

/// Accelerations on the configured grid, in order.
std::vector<double> sweep_grid(const SweepConfig &config);
std::vector<SweepRow> compute_sweep(const SweepConfig &config);

/// 12 significant digits, '.' separator.
std::string format_number(double value);

void write_sweep_csv(const std::vector<SweepRow> &rows, std::ostream &out);
void write_sweep_json(const std::vector<SweepRow> &rows, std::ostream &out);

/// Entry point shared by the executable and the tests. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace unruh::cli

#endif
