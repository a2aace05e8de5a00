#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fillprobe {

// Numeric values mirror fp_status in the public C header.
enum class ErrorCode {
  kInvalidArgument = 1,
  kSyntax = 2,
  kNotClosed = 3,
  kNoFilling = 4,
  kResource = 5,
  kIncompleteRewriting = 6,
  kIo = 7,
  kInternal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorCode::kSyntax, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A cap (vertex count, explored walks, branch-and-bound nodes) was exceeded.
// Branch-and-bound failures carry the best bounds known at the time.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorCode::kResource, what) {}
  ResourceError(const std::string& what, std::optional<mpq_class> lower,
                std::optional<mpq_class> upper)
      : Error(ErrorCode::kResource, what), lower_(std::move(lower)), upper_(std::move(upper)) {}

  const std::optional<mpq_class>& lower_bound() const noexcept { return lower_; }
  const std::optional<mpq_class>& upper_bound() const noexcept { return upper_; }

 private:
  std::optional<mpq_class> lower_;
  std::optional<mpq_class> upper_;
};

}  // namespace fillprobe
