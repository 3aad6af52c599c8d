#include <stdexcept>
#include <string>

#include "adderbound/codebook.hpp"
#include "adderbound/codebook_io.hpp"
#include "doctest.h"

using namespace adderbound;

TEST_CASE("parses plain codebooks, ignoring comments and blanks") {
  Codebook c = parse_codebook("# header\n\n00\n11\n\n# trailing\n");
  CHECK(c == Codebook(2, {0b00, 0b11}));
}

TEST_CASE("parses CRLF input") {
  Codebook c = parse_codebook("01\r\n10\r\n");
  CHECK(c == Codebook(2, {0b01, 0b10}));
}

TEST_CASE("words parse in any order, serialize in ascending order") {
  Codebook c = parse_codebook("11\n00\n01\n");
  CHECK(serialize_codebook(c) == "00\n01\n11\n");
}

TEST_CASE("serialize-parse round trip") {
  Codebook c = hamming_ball(5, 2);
  CHECK(parse_codebook(serialize_codebook(c)) == c);
  CHECK_THROWS_AS(serialize_codebook(Codebook(0, {0})), std::invalid_argument);
}

TEST_CASE("parse errors carry 1-based line numbers") {
  CHECK_THROWS_WITH_AS(parse_codebook("01\n10\n01x\n"), "line 3: invalid character", ParseError);
  CHECK_THROWS_WITH_AS(parse_codebook("01\n101\n"), "line 2: length mismatch (expected 2 characters)",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_codebook("00\n01\n00\n"), "line 3: duplicate codeword (first at line 1)",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_codebook(std::string(65, '0') + "\n"),
                       "line 1: codeword longer than 64 bits", ParseError);
  CHECK_THROWS_AS(parse_codebook(""), ParseError);
  CHECK_THROWS_AS(parse_codebook("# only comments\n"), ParseError);
  // Comment lines still count toward line numbers.
  CHECK_THROWS_WITH_AS(parse_codebook("# one\n\n0x\n"), "line 3: invalid character", ParseError);
}

TEST_CASE("single-codebook parse rejects separated blocks") {
  CHECK_THROWS_AS(parse_codebook("0\n---\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_codebook("0\n===\n1\n"), ParseError);
}

TEST_CASE("block lists split on the codebook separator") {
  auto blocks = parse_codebook_blocks("00\n11\n---\n00\n01\n10\n");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == Codebook(2, {0b00, 0b11}));
  CHECK(blocks[1] == Codebook(2, {0b00, 0b01, 0b10}));
  CHECK(parse_codebook_blocks("1\n0\n").size() == 1);
  CHECK_THROWS_WITH_AS(parse_codebook_blocks("00\n---\n---\n11\n"), "line 3: empty codebook block",
                       ParseError);
  CHECK_THROWS_AS(parse_codebook_blocks("00\n11\n---\n"), ParseError);
}

TEST_CASE("system files: pairs in order, systems split on the system separator") {
  std::string text =
      "0\n---\n0\n---\n1\n---\n1\n"
      "===\n"
      "00\n11\n---\n00\n01\n10\n";
  auto systems = parse_systems(text);
  REQUIRE(systems.size() == 2);
  REQUIRE(systems[0].pairs.size() == 2);
  CHECK(systems[0].pairs[0].first == Codebook(1, {0}));
  CHECK(systems[0].pairs[0].second == Codebook(1, {0}));
  CHECK(systems[0].pairs[1].first == Codebook(1, {1}));
  CHECK(systems[0].pairs[1].second == Codebook(1, {1}));
  REQUIRE(systems[1].pairs.size() == 1);
  CHECK(systems[1].pairs[0].second.size() == 3);

  CHECK(is_zero_error_system(systems[0]).ok);
  CHECK(is_zero_error_system(systems[1]).ok);
}

TEST_CASE("system files with an odd number of codebooks are rejected") {
  CHECK_THROWS_WITH_AS(parse_systems("0\n---\n0\n---\n1\n"),
                       "system starting at line 1 has an odd number of codebooks (3)", ParseError);
}

TEST_CASE("system serialization round trip") {
  ZeroErrorSystem v{{{Codebook(1, {0}), Codebook(1, {0})},
                     {Codebook(1, {1}), Codebook(1, {1})}}};
  std::string text = serialize_system(v);
  CHECK(text == "0\n---\n0\n---\n1\n---\n1\n");
  auto back = parse_systems(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0].pairs.size() == 2);
}

TEST_CASE("codebooks from string literals") {
  Codebook c = make_codebook({"010", "001"});
  CHECK(c == Codebook(3, {0b001, 0b010}));
  CHECK_THROWS_AS(make_codebook({}), std::invalid_argument);
  CHECK_THROWS_AS(make_codebook({"01", "011"}), std::invalid_argument);
}

TEST_CASE("read_file reports missing files") {
  CHECK_THROWS_AS(read_file("/nonexistent/path/x.txt"), std::runtime_error);
}
