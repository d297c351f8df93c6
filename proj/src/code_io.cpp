// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include "bocklift/code_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bocklift/catalog.hpp"

namespace bocklift {

namespace {

using nlohmann::json;

ResidueMatrix parse_check_matrix(const json& j, const std::string& key, int n, int exponent) {
  if (!j.contains(key)) fail(ErrorKind::kParse, "missing field: " + key);
  const json& rows = j.at(key);
  if (!rows.is_array()) fail(ErrorKind::kParse, "field " + key + " must be an array of rows");
  const u64 bound = mod_mask(exponent);
  std::vector<std::vector<u64>> out;
  int r = 0;
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      fail(ErrorKind::kParse,
           key + " row " + std::to_string(r) + " must have length n = " + std::to_string(n));
    }
    std::vector<u64> entries;
    int c = 0;
    for (const json& cell : row) {
      if (!cell.is_number_integer() || cell.is_number_float()) {
        fail(ErrorKind::kParse, key + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                    "] must be an integer");
      }
      const auto raw = cell.get<long long>();
      if (raw < 0 || static_cast<u64>(raw) > bound) {
        fail(ErrorKind::kParse, key + "[" + std::to_string(r) + "][" + std::to_string(c) +
                                    "] = " + std::to_string(raw) +
                                    " is out of range for entry_exponent " +
                                    std::to_string(exponent));
      }
      entries.push_back(static_cast<u64>(raw));
      ++c;
    }
    out.push_back(std::move(entries));
    ++r;
  }
  if (out.empty()) return ResidueMatrix(0, n, exponent);
  return ResidueMatrix::from_rows(exponent, out);
}

}  // namespace

CssCode parse_code_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("invalid code file: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::kParse, "code file must be a JSON object");
  if (!j.contains("name") || !j.at("name").is_string()) {
    fail(ErrorKind::kParse, "missing or non-string field: name");
  }
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    fail(ErrorKind::kParse, "missing or non-integer field: n");
  }
  const int n = j.at("n").get<int>();
  if (n < 0) fail(ErrorKind::kParse, "n must be nonnegative");
  int exponent = 1;
  if (j.contains("entry_exponent")) {
    if (!j.at("entry_exponent").is_number_integer()) {
      fail(ErrorKind::kParse, "entry_exponent must be an integer");
    }
    exponent = j.at("entry_exponent").get<int>();
    if (exponent < 1 || exponent > kMaxExponent) {
      fail(ErrorKind::kParse, "entry_exponent out of range");
    }
  }

  CssCode code = make_code(j.at("name").get<std::string>(), n,
                           parse_check_matrix(j, "hx", n, exponent),
                           parse_check_matrix(j, "hz", n, exponent), exponent);
  validate(code);
  return code;
}

std::string serialize_code(const CssCode& code) {
  json j;
  j["name"] = code.name;
  j["n"] = code.n;
  j["entry_exponent"] = code.entry_exponent;
  json hx = json::array();
  for (int r = 0; r < code.hx.rows; ++r) hx.push_back(code.hx.row(r).entries);
  json hz = json::array();
  for (int r = 0; r < code.hz.rows; ++r) hz.push_back(code.hz.row(r).entries);
  j["hx"] = std::move(hx);
  j["hz"] = std::move(hz);
  return j.dump(2) + "\n";
}

CssCode load_code(const std::string& spec) {
  constexpr std::string_view kCatalogPrefix = "catalog:";
  if (spec.rfind(kCatalogPrefix, 0) == 0) {
    return catalog_get(spec.substr(kCatalogPrefix.size()));
  }
  std::ifstream in(spec, std::ios::binary);
  if (!in) fail(ErrorKind::kParse, "cannot open code file: " + spec);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_code_file(buffer.str());
}

ResidueVector parse_theta(const std::string& spec, int n, int level) {
  if (level < 1 || level > kMaxExponent) fail(ErrorKind::kUsage, "level out of range");
  if (spec == "ones") return ResidueVector(level, std::vector<u64>(static_cast<size_t>(n), 1));
  if (spec == "zeros") return zero_vector(level, n);

  std::vector<u64> entries;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::kUsage, "theta entry is not an integer: '" + token + "'");
    }
    if (pos != token.size()) {
      fail(ErrorKind::kUsage, "theta entry is not an integer: '" + token + "'");
    }
    if (value < 0 || static_cast<u64>(value) > mod_mask(level)) {
      fail(ErrorKind::kUsage, "theta entry " + std::to_string(value) +
                                  " is out of range for level " + std::to_string(level));
    }
    entries.push_back(static_cast<u64>(value));
  }
  if (static_cast<int>(entries.size()) != n) {
    fail(ErrorKind::kUsage, "theta has " + std::to_string(entries.size()) +
                                " entries, expected n = " + std::to_string(n));
  }
  return ResidueVector(level, std::move(entries));
}

}  // namespace bocklift
