#pragma once

#include <stdexcept>
#include <string>

namespace covspec {

// Malformed or out-of-contract input (bad JSON, singular basis, disconnected graph, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration or table cap was hit before the computation finished.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The membership oracle could not decide a query the covering spectrum depends on.
class OracleUndecided : public std::runtime_error {
 public:
  OracleUndecided(std::string what, std::string query)
      : std::runtime_error(std::move(what)), query_(std::move(query)) {}
  const std::string& query() const noexcept { return query_; }

 private:
  std::string query_;
};

}  // namespace covspec
