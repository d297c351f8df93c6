// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "bocklift/css_code.hpp"

namespace bocklift {

// Embedded fixtures.  Every catalog code passes validate().
std::vector<std::string> catalog_names();
CssCode catalog_get(const std::string& name);

}  // namespace bocklift
