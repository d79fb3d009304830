#ifndef TRUNG_ERRORS_HPP
#define TRUNG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trung {

// Malformed input text (edge lists, graph6 records, rationals).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    // 1-based line of the offending input, 0 when not line-oriented.
    int line() const { return line_; }

private:
    int line_;
};

// A hard size cap was exceeded (64-vertex graphs, enumeration guards).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace trung

#endif  // TRUNG_ERRORS_HPP
