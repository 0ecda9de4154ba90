// Copyright 2026 The admitsim Authors
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

#ifndef ADMITSIM_TRACE_IO_HPP_
#define ADMITSIM_TRACE_IO_HPP_

#include <string>

#include "admitsim/harness.hpp"

namespace admitsim {

/// Header used by write_trace_csv; stable machine contract.
extern const char* const kTraceCsvHeader;

void write_trace_csv(const std::string& path, const std::vector<TraceRecord>& trace);
void write_report_csv(const std::string& path, const RunReport& report);
void write_suite_csv(const std::string& path, const SuiteReport& suite);

/// Aligned human-readable rendering of the suite comparison.
std::string format_suite_table(const SuiteReport& suite);

}  // namespace admitsim

#endif  // ADMITSIM_TRACE_IO_HPP_
