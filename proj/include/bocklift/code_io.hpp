// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "bocklift/css_code.hpp"
#include "bocklift/residue.hpp"

namespace bocklift {

// Code file schema (JSON):
//   name            string
//   n               integer
//   hx, hz          arrays of arrays of integers (rows of length n)
//   entry_exponent  integer, optional, default 1
// Entries must already be reduced into [0, 2^entry_exponent).  The parsed
// code is validated before it is returned.
CssCode parse_code_file(const std::string& text);
std::string serialize_code(const CssCode& code);

// "catalog:NAME" resolves an embedded fixture, anything else is a file path.
CssCode load_code(const std::string& spec);

// Phase vector input: a comma-separated entry list, or the shorthands
// "ones" / "zeros".  Entries must be reduced modulo 2^level.
ResidueVector parse_theta(const std::string& spec, int n, int level);

}  // namespace bocklift
