#ifndef ALTEXT_COCHAIN_IO_HPP
#define ALTEXT_COCHAIN_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "altext/cochain.hpp"

namespace altext {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Plain-text cochain format.  Header:
///   B = n1,n2,...
///   A = m1,m2,...
///   arity = n
/// followed by one entry per line,
///   ((c11,..),(c21,..),...) : (a1,..)
/// with inner parentheses optional for single-factor groups.  Omitted tuples
/// are zero; '#' starts a comment.  Duplicate tuples, out-of-range residues
/// and normalization violations are rejected.
Cochain parse_cochain(std::string_view text);

/// Canonical form: header plus the nonzero entries in lexicographic tuple
/// order.  parse_cochain(serialize_cochain(c)) == c.
std::string serialize_cochain(const Cochain& c);

/// Reads and parses a cochain file; file-system failures throw
/// std::runtime_error, parse failures ParseError.
Cochain load_cochain(const std::string& path);

void save_cochain(const Cochain& c, const std::string& path);

}  // namespace altext

#endif
