#include "monreg/ideal_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "monreg/errors.hpp"

namespace monreg {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Exponent parse_entry(const std::string& token, int line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "not an integer: '" + token + "'");
    }
    if (used != token.size())
        throw ParseError(line, "trailing characters in '" + token + "'");
    if (value < 0) throw ParseError(line, "negative exponent " + token);
    return value;
}

}  // namespace

ParsedIdeal parse_ideal(std::istream& in) {
    std::string line;
    int lineno = 0;

    int nvars = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token)) continue;
        const Exponent n = parse_entry(token, lineno);
        if (n < 1 || n > 64)
            throw ParseError(lineno, "variable count must be in 1..64, got " +
                                         std::to_string(n));
        std::string extra;
        if (fields >> extra)
            throw ParseError(lineno, "variable count line has extra tokens");
        nvars = static_cast<int>(n);
        break;
    }
    if (nvars < 0) throw ParseError(lineno + 1, "missing variable count line");

    std::vector<Monomial> gens;
    std::vector<std::string> warnings;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        std::vector<Exponent> exponents;
        std::string token;
        while (fields >> token) exponents.push_back(parse_entry(token, lineno));
        if (static_cast<int>(exponents.size()) != nvars)
            throw ParseError(lineno, "expected " + std::to_string(nvars) +
                                         " exponents, got " +
                                         std::to_string(exponents.size()));
        gens.emplace_back(std::move(exponents));
    }

    MonomialIdeal ideal(nvars, gens);
    if (ideal.gens().size() < gens.size()) {
        std::size_t dropped = gens.size() - ideal.gens().size();
        warnings.push_back(std::to_string(dropped) +
                           " generator(s) were duplicates or divisible by "
                           "others and were dropped");
    }
    return {std::move(ideal), std::move(warnings)};
}

ParsedIdeal parse_ideal_text(const std::string& text) {
    std::istringstream in(text);
    return parse_ideal(in);
}

ParsedIdeal parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_ideal(in);
}

std::string format_ideal_file(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << ideal.nvars() << "\n";
    for (const Monomial& g : ideal.gens()) {
        for (int j = 0; j < ideal.nvars(); ++j) {
            if (j > 0) out << " ";
            out << g.exponent(j);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace monreg
