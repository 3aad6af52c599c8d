#include "adderbound/codebook_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace adderbound {

namespace {

struct Line {
  int no;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back({no, std::move(line)});
  }
  return out;
}

Codebook build_block(const std::vector<Line>& lines) {
  std::size_t width = lines.front().text.size();
  std::map<word_t, int> seen;
  std::vector<word_t> words;
  words.reserve(lines.size());
  for (const Line& l : lines) {
    for (char ch : l.text) {
      if (ch != '0' && ch != '1') {
        throw ParseError("line " + std::to_string(l.no) + ": invalid character");
      }
    }
    if (l.text.size() != width) {
      throw ParseError("line " + std::to_string(l.no) + ": length mismatch (expected " +
                       std::to_string(width) + " characters)");
    }
    if (width > 64) {
      throw ParseError("line " + std::to_string(l.no) + ": codeword longer than 64 bits");
    }
    word_t w = word_from_string(l.text);
    auto [it, fresh] = seen.emplace(w, l.no);
    if (!fresh) {
      throw ParseError("line " + std::to_string(l.no) + ": duplicate codeword (first at line " +
                       std::to_string(it->second) + ")");
    }
    words.push_back(w);
  }
  return Codebook(static_cast<int>(width), std::move(words));
}

// Splits on '---' lines; '===' is rejected unless allow_system_sep, in which
// case it flushes the current group boundary via the out-parameter.
std::vector<Codebook> blocks_from_lines(const std::vector<Line>& lines) {
  std::vector<Codebook> blocks;
  std::vector<Line> current;
  auto flush = [&](int sep_line_no) {
    if (current.empty()) {
      throw ParseError("line " + std::to_string(sep_line_no) + ": empty codebook block");
    }
    blocks.push_back(build_block(current));
    current.clear();
  };
  for (const Line& l : lines) {
    if (l.text == "---") {
      flush(l.no);
    } else if (l.text == "===") {
      throw ParseError("line " + std::to_string(l.no) + ": unexpected system separator");
    } else {
      current.push_back(l);
    }
  }
  if (current.empty()) {
    int last = lines.empty() ? 1 : lines.back().no;
    throw ParseError("line " + std::to_string(last) + ": empty codebook block");
  }
  blocks.push_back(build_block(current));
  return blocks;
}

}  // namespace

Codebook parse_codebook(const std::string& text) {
  auto blocks = parse_codebook_blocks(text);
  if (blocks.size() != 1) {
    throw ParseError("expected a single codebook, found " + std::to_string(blocks.size()) +
                     " blocks");
  }
  return std::move(blocks.front());
}

std::vector<Codebook> parse_codebook_blocks(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("no codewords found");
  return blocks_from_lines(lines);
}

std::vector<ZeroErrorSystem> parse_systems(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("no codewords found");
  std::vector<std::vector<Line>> chunks(1);
  for (const Line& l : lines) {
    if (l.text == "===") {
      if (chunks.back().empty()) throw ParseError("line " + std::to_string(l.no) + ": empty system");
      chunks.emplace_back();
    } else {
      chunks.back().push_back(l);
    }
  }
  if (chunks.back().empty()) {
    throw ParseError("line " + std::to_string(lines.back().no) + ": empty system");
  }
  std::vector<ZeroErrorSystem> systems;
  for (const auto& chunk : chunks) {
    auto blocks = blocks_from_lines(chunk);
    if (blocks.size() % 2 != 0) {
      throw ParseError("system starting at line " + std::to_string(chunk.front().no) +
                       " has an odd number of codebooks (" + std::to_string(blocks.size()) + ")");
    }
    ZeroErrorSystem sys;
    for (std::size_t i = 0; i < blocks.size(); i += 2) {
      sys.pairs.emplace_back(std::move(blocks[i]), std::move(blocks[i + 1]));
    }
    systems.push_back(std::move(sys));
  }
  return systems;
}

Codebook make_codebook(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("make_codebook: no rows");
  std::vector<word_t> words;
  words.reserve(rows.size());
  for (const std::string& r : rows) {
    if (r.size() != rows.front().size()) {
      throw std::invalid_argument("make_codebook: unequal row lengths");
    }
    words.push_back(word_from_string(r));
  }
  return Codebook(static_cast<int>(rows.front().size()), std::move(words));
}

std::string serialize_codebook(const Codebook& c) {
  if (c.length() == 0) {
    throw std::invalid_argument("serialize_codebook: zero-length words are not representable");
  }
  std::string out;
  out.reserve((static_cast<std::size_t>(c.length()) + 1) * c.size());
  for (word_t w : c.words()) {
    out += word_to_string(w, c.length());
    out += '\n';
  }
  return out;
}

std::string serialize_system(const ZeroErrorSystem& v) {
  std::string out;
  bool first = true;
  for (const auto& [a, b] : v.pairs) {
    if (!first) out += "---\n";
    first = false;
    out += serialize_codebook(a);
    out += "---\n";
    out += serialize_codebook(b);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace adderbound
