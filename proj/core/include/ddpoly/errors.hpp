#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ddpoly {

// Failure with a stable machine-readable code ("NotNumerical",
// "SignatureMismatch", ...). Codes are part of the public contract: the CLI
// and the JSON reports surface them verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Parse failure carrying the 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error("ParseError",
                message + " (line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace ddpoly
