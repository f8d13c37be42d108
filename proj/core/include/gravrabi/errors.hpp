#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gravrabi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma or 1F1 parameter sits on a pole.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::complex<double> where)
      : Error(what), where_(where) {}
  std::complex<double> where() const { return where_; }

 private:
  std::complex<double> where_;
};

/// A series or expansion did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int terms, double last_rel_term)
      : Error(what), terms_(terms), last_rel_term_(last_rel_term) {}
  int terms() const { return terms_; }
  double last_rel_term() const { return last_rel_term_; }

 private:
  int terms_;
  double last_rel_term_;
};

/// Non-finite input or an argument outside the documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A physical validity gate failed; the message names the gate.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class StepLimitError : public Error {
 public:
  StepLimitError(const std::string& what, double worst_error)
      : Error(what), worst_error_(worst_error) {}
  double worst_local_error() const { return worst_error_; }

 private:
  double worst_error_;
};

class SingularExponentError : public Error {
 public:
  using Error::Error;
};

/// Momentum grid problems: margins, misaligned shifts, truncation.
class GridError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string key)
      : Error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace gravrabi
