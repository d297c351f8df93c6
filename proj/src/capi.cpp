// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "bocklift/catalog.hpp"
#include "bocklift/code_io.hpp"
#include "bocklift/css_code.hpp"
#include "bocklift/dispatch.hpp"

struct bl_code {
  bocklift::CssCode code;
};

namespace {

using bocklift::Error;
using bocklift::ErrorKind;

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error != nullptr) *error = dup_string(message);
}

bl_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return BL_ERR_USAGE;
    case ErrorKind::kParse: return BL_ERR_PARSE;
    case ErrorKind::kValidation: return BL_ERR_VALIDATION;
    case ErrorKind::kNotFound: return BL_ERR_NOT_FOUND;
    case ErrorKind::kCapExceeded: return BL_ERR_CAP_EXCEEDED;
    case ErrorKind::kInternal: return BL_ERR_INTERNAL;
    default: return BL_ERR_PRECONDITION;
  }
}

bl_status guard_code(const bl_code* code, char** error) {
  if (code == nullptr) {
    set_error(error, "null code handle");
    return BL_ERR_USAGE;
  }
  return BL_OK;
}

// Every operation funnels through the dispatcher so the C API, the CLI, and
// the golden reports stay byte-compatible.
bl_status run_args(const bl_code* code, std::vector<std::string> args, char** report,
                   char** error) {
  if (report != nullptr) *report = nullptr;
  if (error != nullptr) *error = nullptr;
  try {
    args.push_back("--json");
    const bocklift::CliResult result =
        bocklift::dispatch_with_code(args, code == nullptr ? nullptr : &code->code);
    if (result.exit_code == 0 || result.exit_code == 1) {
      if (report != nullptr) *report = dup_string(result.out);
      return result.exit_code == 0 ? BL_OK : BL_NEGATIVE;
    }
    set_error(error, result.out.empty() ? result.err : result.out);
    return BL_ERR_USAGE;
  } catch (const Error& e) {
    set_error(error, e.what());
    return status_of(e.kind());
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return BL_ERR_INTERNAL;
  }
}

bl_status run_code_op(const bl_code* code, std::vector<std::string> args, char** report,
                      char** error) {
  if (const bl_status s = guard_code(code, error); s != BL_OK) return s;
  return run_args(code, std::move(args), report, error);
}

}  // namespace

extern "C" {

const char* bl_version(void) { return "0.1.0"; }

void bl_string_free(char* s) { delete[] s; }

void bl_code_free(bl_code* code) { delete code; }

bl_status bl_code_from_json(const char* text, bl_code** out, char** error) {
  if (error != nullptr) *error = nullptr;
  if (text == nullptr || out == nullptr) {
    set_error(error, "null argument");
    return BL_ERR_USAGE;
  }
  *out = nullptr;
  try {
    *out = new bl_code{bocklift::parse_code_file(text)};
    return BL_OK;
  } catch (const Error& e) {
    set_error(error, e.what());
    return status_of(e.kind());
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return BL_ERR_INTERNAL;
  }
}

bl_status bl_code_from_catalog(const char* name, bl_code** out, char** error) {
  if (error != nullptr) *error = nullptr;
  if (name == nullptr || out == nullptr) {
    set_error(error, "null argument");
    return BL_ERR_USAGE;
  }
  *out = nullptr;
  try {
    *out = new bl_code{bocklift::catalog_get(name)};
    return BL_OK;
  } catch (const Error& e) {
    set_error(error, e.what());
    return status_of(e.kind());
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return BL_ERR_INTERNAL;
  }
}

bl_status bl_code_to_json(const bl_code* code, char** out, char** error) {
  if (error != nullptr) *error = nullptr;
  if (const bl_status s = guard_code(code, error); s != BL_OK) return s;
  if (out == nullptr) {
    set_error(error, "null output argument");
    return BL_ERR_USAGE;
  }
  *out = dup_string(bocklift::serialize_code(code->code));
  return BL_OK;
}

int bl_code_n(const bl_code* code) { return code == nullptr ? -1 : code->code.n; }
int bl_code_rows_x(const bl_code* code) { return code == nullptr ? -1 : code->code.hx.rows; }
int bl_code_rows_z(const bl_code* code) { return code == nullptr ? -1 : code->code.hz.rows; }
int bl_code_entry_exponent(const bl_code* code) {
  return code == nullptr ? -1 : code->code.entry_exponent;
}
int bl_code_logical_qubits(const bl_code* code) {
  if (code == nullptr) return -1;
  try {
    return bocklift::validate(code->code).k;
  } catch (const std::exception&) {
    return -1;
  }
}

bl_status bl_validate(const bl_code* code, char** report, char** error) {
  return run_code_op(code, {"validate"}, report, error);
}

bl_status bl_commutativity(const bl_code* code, int cap, char** report, char** error) {
  return run_code_op(code, {"commutativity", "--cap", std::to_string(cap)}, report, error);
}

bl_status bl_divisibility(const bl_code* code, int cap, char** report, char** error) {
  return run_code_op(code, {"divisibility", "--cap", std::to_string(cap)}, report, error);
}

bl_status bl_homology(const bl_code* code, int level, char** report, char** error) {
  return run_code_op(code, {"homology", "--level", std::to_string(level)}, report, error);
}

bl_status bl_bases(const bl_code* code, char** report, char** error) {
  return run_code_op(code, {"bases"}, report, error);
}

bl_status bl_bockstein(const bl_code* code, const char* theta, int level, char** report,
                       char** error) {
  if (theta == nullptr) {
    set_error(error, "null theta");
    return BL_ERR_USAGE;
  }
  return run_code_op(code, {"bockstein", "--theta", theta, "--level", std::to_string(level)},
                     report, error);
}

bl_status bl_lift(const bl_code* code, const char* theta, int level, char** report,
                  char** error) {
  if (theta == nullptr) {
    set_error(error, "null theta");
    return BL_ERR_USAGE;
  }
  return run_code_op(code, {"lift", "--theta", theta, "--level", std::to_string(level)},
                     report, error);
}

bl_status bl_lift_to_level(const bl_code* code, const char* theta, int target, char** report,
                           char** error) {
  if (theta == nullptr) {
    set_error(error, "null theta");
    return BL_ERR_USAGE;
  }
  return run_code_op(code,
                     {"lift", "--theta", theta, "--level", "1", "--target",
                      std::to_string(target)},
                     report, error);
}

bl_status bl_chain_lift(const bl_code* code, int level, char** report, char** error) {
  return run_code_op(code, {"lift-chain", "--level", std::to_string(level)}, report, error);
}

bl_status bl_rotation(const bl_code* code, int logical_index, int level, char** report,
                      char** error) {
  return run_code_op(code,
                     {"rotation", "--logical-index", std::to_string(logical_index), "--level",
                      std::to_string(level)},
                     report, error);
}

bl_status bl_oracle(const bl_code* code, const char* theta, int level, char** report,
                    char** error) {
  if (theta == nullptr) {
    set_error(error, "null theta");
    return BL_ERR_USAGE;
  }
  return run_code_op(code, {"oracle", "--theta", theta, "--level", std::to_string(level)},
                     report, error);
}

bl_status bl_compare(const bl_code* code, const char* theta, int level, char** report,
                     char** error) {
  if (theta == nullptr) {
    set_error(error, "null theta");
    return BL_ERR_USAGE;
  }
  return run_code_op(code, {"compare", "--theta", theta, "--level", std::to_string(level)},
                     report, error);
}

bl_status bl_catalog_list(char** report, char** error) {
  return run_args(nullptr, {"catalog", "list"}, report, error);
}

int bl_cli_run(int argc, const char* const* argv, char** out_stdout, char** out_stderr) {
  if (out_stdout != nullptr) *out_stdout = nullptr;
  if (out_stderr != nullptr) *out_stderr = nullptr;
  std::vector<std::string> args;
  for (int i = 0; i < argc; ++i) {
    if (argv[i] == nullptr) return 2;
    args.emplace_back(argv[i]);
  }
  try {
    const bocklift::CliResult result = bocklift::dispatch(args);
    if (out_stdout != nullptr) *out_stdout = dup_string(result.out);
    if (out_stderr != nullptr) *out_stderr = dup_string(result.err);
    return result.exit_code;
  } catch (const std::exception& e) {
    if (out_stderr != nullptr) *out_stderr = dup_string(std::string("error: ") + e.what() + "\n");
    return 2;
  }
}

}  // extern "C"
