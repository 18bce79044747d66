#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace nagata {

/// Base for all errors raised by the library. Carries an optional JSON
/// payload with the offending indices or sets so callers can re-check it.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, nlohmann::json payload = nullptr);
  const nlohmann::json& payload() const noexcept { return payload_; }

 private:
  nlohmann::json payload_;
};

/// Malformed or contract-violating input (bad matrix, unknown point, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A construction stage could not produce its output (provider exhausted,
/// pair never co-contained, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace nagata
