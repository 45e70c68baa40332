#ifndef HPD_ERRORS_HPP
#define HPD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace hpd {

// Thrown when an exact-mode operation would exceed its configured work cap.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the property-distance oracle when no graph on the given vertex
// count satisfies the property, so the distance is undefined.
struct PropertyEmptyError : std::runtime_error {
    explicit PropertyEmptyError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries the path and a 1-based line for diagnostics
// (line 0 means the location is unknown).
struct ParseError : std::runtime_error {
    std::string path;
    int line;
    ParseError(std::string p, int ln, const std::string& msg)
        : std::runtime_error(p + ":" + std::to_string(ln) + ": " + msg),
          path(std::move(p)),
          line(ln) {}
};

}  // namespace hpd

#endif
