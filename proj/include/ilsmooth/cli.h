// Copyright 2026 The ilsmooth Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ILSMOOTH_CLI_H_
#define ILSMOOTH_CLI_H_

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "ilsmooth/ils.h"
#include "ilsmooth/image.h"

namespace ilsmooth::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,      // unknown flag, missing argument
  kIo = 3,         // unreadable input, unwritable output, bad format
  kParameter = 4,  // parameter or input out of range
  kInternal = 5,
};

// One timed smoothing run, as written by `bench`.
struct BenchRecord {
  SmoothingMode method = SmoothingMode::kOriginal;
  double lambda = 0.0;
  int iterations = 0;
  double sigma = 0.0;
  int width = 0;
  int height = 0;
  double wall_time_total_s = 0.0;
  double wall_time_per_iter_s = 0.0;
};

inline constexpr const char* kBenchCsvHeader =
    "method,lambda,iterations,sigma,width,height,wall_time_total_s,"
    "wall_time_per_iter_s";

// Times Smooth(img, params) alone (no I/O, no energy tracking); keeps the
// fastest of `repeat` runs.
BenchRecord TimeSmoothing(const MultiChannelImage& img, SmoothingParams params,
                          int repeat);

std::string FormatBenchRow(const BenchRecord& record);

// Entry point; `args` excludes the program name. Diagnostics go to `err` as a
// single line, help text to `out`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ilsmooth::cli

#endif  // ILSMOOTH_CLI_H_
