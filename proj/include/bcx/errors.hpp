#pragma once

#include <stdexcept>
#include <string>

namespace bcx {

// Malformed edge-list input. Messages carry the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Method cannot run on this graph (directed input to the algebraic
// method, disconnected input to a method that requires connectivity,
// inconsistent forward-pass data).
class MethodError : public std::runtime_error {
 public:
  explicit MethodError(const std::string& msg) : std::runtime_error(msg) {}
};

// A path count left the representable range. Counts are exact or absent,
// never wrapped.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

// Oracle size or path-count cap exceeded.
class OracleCapError : public std::runtime_error {
 public:
  explicit OracleCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Sampled forward pass ran out of resampling rounds.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bcx
