#ifndef ENT_ERRORS_HPP
#define ENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ent {

// Error taxonomy mirrors the CLI exit codes: parse (2), semantic (3),
// resource cap (4).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(std::string file, int line, int column, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
                ": " + what),
          file(std::move(file)), line(line), column(column) {}
    std::string file;
    int line;
    int column;
};

struct SemanticError : Error {
    using Error::Error;
};

struct CapError : Error {
    using Error::Error;
};

} // namespace ent

#endif
