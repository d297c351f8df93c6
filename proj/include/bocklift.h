/* Copyright 2026 the bocklift authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the bocklift shared library.
 *
 * A bl_code is an opaque handle to a validated CSS code.  Operations return
 * a bl_status and, on success, a heap-allocated JSON report in *report (one
 * self-describing document, the same payloads the CLI emits with --json).
 * Strings handed out by the library are released with bl_string_free.
 *
 * Status convention:
 *   BL_OK               computed, affirmative verdict
 *   BL_NEGATIVE         computed, negative verdict (obstruction, not
 *                       logical, hypothesis violated, ...)
 *   anything >= 2       the operation did not run; *error (when requested)
 *                       carries a message
 */
#ifndef BOCKLIFT_H
#define BOCKLIFT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bl_code bl_code;

typedef enum bl_status {
  BL_OK = 0,
  BL_NEGATIVE = 1,
  BL_ERR_USAGE = 2,
  BL_ERR_PARSE = 3,
  BL_ERR_VALIDATION = 4,
  BL_ERR_PRECONDITION = 5,
  BL_ERR_CAP_EXCEEDED = 6,
  BL_ERR_NOT_FOUND = 7,
  BL_ERR_INTERNAL = 8
} bl_status;

const char* bl_version(void);

void bl_string_free(char* s);
void bl_code_free(bl_code* code);

/* Constructors.  On success *out owns a new handle. */
bl_status bl_code_from_json(const char* text, bl_code** out, char** error);
bl_status bl_code_from_catalog(const char* name, bl_code** out, char** error);

/* Serializes the code back into the JSON file schema. */
bl_status bl_code_to_json(const bl_code* code, char** out, char** error);

/* Shape accessors; return -1 on a null handle. */
int bl_code_n(const bl_code* code);
int bl_code_rows_x(const bl_code* code);
int bl_code_rows_z(const bl_code* code);
int bl_code_entry_exponent(const bl_code* code);
int bl_code_logical_qubits(const bl_code* code);

/* Operations.  theta is given in the CLI syntax: "1,0,3", "ones", "zeros".
 * Every report is a JSON object on success (BL_OK or BL_NEGATIVE). */
bl_status bl_validate(const bl_code* code, char** report, char** error);
bl_status bl_commutativity(const bl_code* code, int cap, char** report, char** error);
bl_status bl_divisibility(const bl_code* code, int cap, char** report, char** error);
bl_status bl_homology(const bl_code* code, int level, char** report, char** error);
bl_status bl_bases(const bl_code* code, char** report, char** error);
bl_status bl_bockstein(const bl_code* code, const char* theta, int level,
                       char** report, char** error);
bl_status bl_lift(const bl_code* code, const char* theta, int level,
                  char** report, char** error);
bl_status bl_lift_to_level(const bl_code* code, const char* theta, int target,
                           char** report, char** error);
bl_status bl_chain_lift(const bl_code* code, int level, char** report, char** error);
bl_status bl_rotation(const bl_code* code, int logical_index, int level,
                      char** report, char** error);
bl_status bl_oracle(const bl_code* code, const char* theta, int level,
                    char** report, char** error);
bl_status bl_compare(const bl_code* code, const char* theta, int level,
                     char** report, char** error);

bl_status bl_catalog_list(char** report, char** error);

/* Full CLI entry point: argv excludes the program name.  Returns the process
 * exit status (0 affirmative, 1 negative verdict, 2 usage/input error) and
 * fills the two streams. */
int bl_cli_run(int argc, const char* const* argv, char** out_stdout, char** out_stderr);

#ifdef __cplusplus
}
#endif

#endif /* BOCKLIFT_H */
