// Copyright 2026 the bocklift authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "bocklift/catalog.hpp"
#include "bocklift/code_io.hpp"
#include "bocklift/css_code.hpp"

using namespace bocklift;

TEST_CASE("parse_code_file round-trips the catalog") {
  for (const std::string& name : catalog_names()) {
    const CssCode code = catalog_get(name);
    const CssCode parsed = parse_code_file(serialize_code(code));
    CHECK(parsed.name == code.name);
    CHECK(parsed.n == code.n);
    CHECK(parsed.hx == code.hx);
    CHECK(parsed.hz == code.hz);
    CHECK(parsed.entry_exponent == code.entry_exponent);
  }
}

TEST_CASE("parse_code_file rejects malformed input") {
  CHECK_THROWS_AS(parse_code_file("not json"), Error);
  CHECK_THROWS_AS(parse_code_file("[1,2,3]"), Error);
  CHECK_THROWS_AS(parse_code_file(R"({"n": 2, "hx": [], "hz": []})"), Error);  // no name

  // Row length mismatch.
  CHECK_THROWS_AS(parse_code_file(R"({"name":"x","n":3,"hx":[[1,1]],"hz":[]})"), Error);

  // Entry out of range for the declared exponent.
  CHECK_THROWS_AS(
      parse_code_file(R"({"name":"x","n":1,"hx":[[5]],"hz":[],"entry_exponent":2})"), Error);
  CHECK_THROWS_AS(parse_code_file(R"({"name":"x","n":1,"hx":[[-1]],"hz":[]})"), Error);

  // Structurally fine but not a CSS pair.
  CHECK_THROWS_AS(parse_code_file(R"({"name":"x","n":2,"hx":[[1,0]],"hz":[[1,0]]})"), Error);
}

TEST_CASE("parse_code_file defaults and validation") {
  const CssCode code =
      parse_code_file(R"({"name":"pair","n":2,"hx":[[1,1]],"hz":[[1,1]]})");
  CHECK(code.entry_exponent == 1);
  CHECK(validate(code).k == 0);

  // Degenerate shapes are first-class.
  const CssCode empty = parse_code_file(R"({"name":"empty","n":0,"hx":[],"hz":[]})");
  CHECK(validate(empty).k == 0);
  const CssCode free3 = parse_code_file(R"({"name":"free","n":3,"hx":[],"hz":[]})");
  CHECK(validate(free3).k == 3);
}

TEST_CASE("catalog") {
  CHECK(catalog_names() ==
        std::vector<std::string>{"c4", "cdep", "rep3", "rm15", "shor9", "steane"});
  for (const std::string& name : catalog_names()) {
    const CssCode code = catalog_get(name);
    CHECK_NOTHROW(validate(code));
  }
  const CssCode rm = catalog_get("rm15");
  CHECK(rm.n == 15);
  CHECK(rm.hx.rows == 4);
  CHECK_THROWS_AS(catalog_get("nosuch"), Error);
}

TEST_CASE("parse_theta") {
  CHECK(parse_theta("ones", 3, 2).entries == std::vector<u64>{1, 1, 1});
  CHECK(parse_theta("zeros", 2, 1).entries == std::vector<u64>{0, 0});
  CHECK(parse_theta("1,0,3", 3, 2).entries == std::vector<u64>{1, 0, 3});
  CHECK_THROWS_AS(parse_theta("1,0", 3, 2), Error);      // wrong length
  CHECK_THROWS_AS(parse_theta("4,0,0", 3, 2), Error);    // out of range
  CHECK_THROWS_AS(parse_theta("a,b,c", 3, 2), Error);    // not integers
  CHECK_THROWS_AS(parse_theta("-1,0,0", 3, 2), Error);   // negative
}
