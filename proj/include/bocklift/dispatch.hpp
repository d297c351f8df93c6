// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace bocklift {

// Exit statuses: 0 success / affirmative verdict, 1 negative verdict or
// certified obstruction, 2 usage or input error.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one CLI invocation (args excludes the program name).  Never throws;
// all failures are folded into the exit status and streams.
CliResult dispatch(const std::vector<std::string>& args);

struct CssCode;

// Same dispatcher, but operations that would load --code use the preloaded
// code instead.  This is the C API path: no file staging, and the command
// echo in machine reports stays free of temporary paths.
CliResult dispatch_with_code(const std::vector<std::string>& args, const CssCode* preloaded);

std::string usage_text();

}  // namespace bocklift
