// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
//
// Thin CLI over the bocklift shared library.
#include <cstdio>

#include "bocklift.h"

int main(int argc, char** argv) {
  char* out = nullptr;
  char* err = nullptr;
  const int code = bl_cli_run(argc - 1, const_cast<const char* const*>(argv + 1), &out, &err);
  if (out != nullptr && out[0] != '\0') std::fputs(out, stdout);
  if (err != nullptr && err[0] != '\0') std::fputs(err, stderr);
  bl_string_free(out);
  bl_string_free(err);
  return code;
}
