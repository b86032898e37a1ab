#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monreg/monomial.hpp"

namespace monreg {

/// Result of reading an ideal file: the (minimized) ideal plus any
/// non-fatal warnings, e.g. generators that were duplicates or divisible by
/// earlier ones.
struct ParsedIdeal {
    MonomialIdeal ideal;
    std::vector<std::string> warnings;
};

/// Reads the line format:
///   line 1: the variable count n (1..64)
///   each further non-empty line that is not a '#' comment: n space-separated
///   nonnegative integers, one generator's exponent tuple.
/// A file with no generator lines denotes the zero ideal.  Malformed input
/// throws ParseError carrying the 1-based line number.
ParsedIdeal parse_ideal(std::istream& in);
ParsedIdeal parse_ideal_text(const std::string& text);
ParsedIdeal parse_ideal_file(const std::string& path);

/// Inverse of parse_ideal up to minimization: emits the variable count line
/// followed by one exponent-tuple line per minimal generator.
std::string format_ideal_file(const MonomialIdeal& ideal);

}  // namespace monreg
