// Copyright 2026 The sectime Authors
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

#ifndef SECTIME_WORK_CLOCK_H_
#define SECTIME_WORK_CLOCK_H_

#include <cstdint>

namespace sectime {

// Deterministic time. Solvers charge abstract work units for the elementary
// operations they perform and budgets are expressed in "seconds" of that work,
// so a fixed seed and budget always stop at the same point regardless of the
// machine load. The rates are calibrated so one unit-second is roughly one
// wall-clock second on a 2020s desktop core.
class WorkClock {
 public:
  explicit WorkClock(double units_per_second)
      : units_per_second_(units_per_second) {}

  void Charge(int64_t units) { units_ += units; }
  int64_t units() const { return units_; }
  double seconds() const {
    return static_cast<double>(units_) / units_per_second_;
  }
  bool Exceeds(double budget_seconds) const {
    return seconds() >= budget_seconds;
  }

 private:
  double units_per_second_;
  int64_t units_ = 0;
};

// Calibration constants (see benchmarks/).
inline constexpr double kSectioningUnitsPerSecond = 9.0e7;
inline constexpr double kTimetableUnitsPerSecond = 2.7e8;

}  // namespace sectime

#endif  // SECTIME_WORK_CLOCK_H_
