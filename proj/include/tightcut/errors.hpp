#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tightcut {

/// Domain error: an operation was called outside its contract
/// (empty shore, odd order, unknown vertex, ...).
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a structure extractor's postcondition fails.  These
/// postconditions are theorems, so a violation is a bug witness rather
/// than a user error; the verification suites catch and report them.
class TheoremViolation : public std::runtime_error {
public:
    explicit TheoremViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// graph6 parse failure.  `offset` is the byte position in the input line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace tightcut
