#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace saptree {

enum class ErrorCode {
  invalid_argument,
  empty_neighbors,
  unknown_vertex,
  cycle,
  not_arrived,
  not_an_edge,
  not_in_component,
  dir_undefined,
  dist_infinite,
  dispatch_undefined,
  not_free,
  invalid_matching,
  invalid_path,
  budget_exceeded,
  infeasible_family,
  parse,
  precondition,
  ledger_infeasible,
  claim_violated,
  audit_failure,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Positioned failure while reading an instance or record document.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t field, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::size_t field_;
};

}  // namespace saptree
