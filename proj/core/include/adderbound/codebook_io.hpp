#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "adderbound/codebook.hpp"

// Text format: one codeword per line, ASCII '0'/'1'. Blank lines and lines
// starting with '#' are ignored. A line of '---' separates codebooks; '==='
// separates systems; a system's codebooks pair up in order (first,second),
// (third,fourth), ... Parse errors carry 1-based line numbers.

namespace adderbound {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exactly one codebook in the text.
Codebook parse_codebook(const std::string& text);

// '---'-separated codebooks, at least one.
std::vector<Codebook> parse_codebook_blocks(const std::string& text);

// '==='-separated systems of '---'-separated codebooks; each system must
// contain an even number of codebooks.
std::vector<ZeroErrorSystem> parse_systems(const std::string& text);

// Convenience for literals: rows are codeword strings.
Codebook make_codebook(const std::vector<std::string>& rows);

// Canonical form: ascending word order, one per line, trailing newline.
// Throws for zero-length words (not representable in the format).
std::string serialize_codebook(const Codebook& c);

// All 2*m0 codebooks '---'-separated, pairs in order.
std::string serialize_system(const ZeroErrorSystem& v);

std::string read_file(const std::string& path);

}  // namespace adderbound
