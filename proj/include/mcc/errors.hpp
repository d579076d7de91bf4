#pragma once

#include <stdexcept>
#include <string>

namespace mcc {

// Exit codes used by the command-line front end.
enum class exit_code : int {
  ok = 0,
  precondition = 2,
  cap = 3,
  not_found = 10,
  usage = 64,
};

class error : public std::runtime_error {
 public:
  error(const std::string& what, exit_code code) : std::runtime_error(what), code_(code) {}
  exit_code code() const noexcept { return code_; }

 private:
  exit_code code_;
};

/// Input outside the mathematical domain of an operation (zero where nonzero is required, ...).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what, exit_code::precondition) {}
};

class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(what, exit_code::precondition) {}
};

/// Ill-posed but well-typed input, e.g. an all-zero matrix subspace.
class degenerate_error : public error {
 public:
  explicit degenerate_error(const std::string& what) : error(what, exit_code::precondition) {}
};

class cap_exceeded : public error {
 public:
  explicit cap_exceeded(const std::string& what) : error(what, exit_code::cap) {}
};

/// p-adic precision too small to certify a result.
class precision_error : public error {
 public:
  explicit precision_error(const std::string& what) : error(what, exit_code::cap) {}
};

}  // namespace mcc
