#pragma once

#include <string>

#include "greynoise/mlfun.hpp"

namespace greynoise {

// Text form of a constructor descriptor: key=value lines, one block per
// node, blocks separated by a blank line, block 0 is the root. Children are
// referenced by block index.
//
//   kind=compose
//   children=1,2
//
//   kind=exp
//   order=64
//
//   kind=mittag_leffler
//   alpha=0.5
//   order=64
//
// Recognized kinds: exp, mittag_leffler, custom (taylor=...), mix
// (weights=..., children=...), product, compose (children=outer,inner).
std::string serialize_descriptor(const MLFunction& phi);
MLFunction parse_descriptor(const std::string& text);
MLFunction load_descriptor_file(const std::string& path);

// Shorthand accepted on the command line: "exp", "ml:<alpha>", or
// "file:<path>".
MLFunction phi_from_cli_spec(const std::string& spec, int order = MLFunction::kDefaultOrder);

} // namespace greynoise
