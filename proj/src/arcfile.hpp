// Plain-text arc files: a header describing the field and size, one point
// per line, an optional construction comment, and an optional trailing
// completeness verdict. The format is line-oriented so files diff cleanly
// and can be exchanged with other implementations.
//
//   q=<p>^<h> k=<size> poly=<digits>
//   # kind=A param=36
//   x0:x1:x2            (k lines, integer element codes)
//   complete=true
//
// The poly digits are the monic modulus coefficients, lowest first, one
// base-p digit each; for p > 9 the digits are separated by dots. For h = 1
// the modulus is x minus the primitive element.
#pragma once

#include "plane.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgarc {

struct ArcFileError : std::runtime_error {
    uint32_t line;  // 1-based line the problem was found on
    ArcFileError(uint32_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

struct ArcFileContents {
    uint32_t p = 0, h = 0, q = 0;
    uint32_t k = 0;
    std::string poly;             // digit string exactly as in the header
    char kind = 0;                // 'A'/'B'/'C' when the comment is present
    int64_t param = 0;
    std::vector<Point> points;
    std::optional<bool> complete;  // trailing verdict, if any
};

// Digit string for the field's modulus as written in headers.
std::string poly_digits(const Field& f);

std::string arc_file_text(const Field& f, const std::vector<Point>& pts,
                          char kind = 0, int64_t param = 0,
                          std::optional<bool> complete = std::nullopt);
void write_arc_file(const std::string& path, const Field& f,
                    const std::vector<Point>& pts, char kind = 0,
                    int64_t param = 0,
                    std::optional<bool> complete = std::nullopt);

// Structural parse and validation; throws ArcFileError with the offending
// line. Field semantics (p prime, modulus matching this implementation)
// are left to the caller.
ArcFileContents read_arc_file(std::istream& in);
ArcFileContents read_arc_file(const std::string& path);

}  // namespace pgarc
