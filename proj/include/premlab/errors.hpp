#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace premlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid model parameters (family constraints, k/h/N ranges, bad planted set).
struct SpecError : Error {
  using Error::Error;
};

// size < 2, so log(size) would not be positive.
struct DegenerateSize : Error {
  using Error::Error;
};

// Malformed subset or out-of-range rank in the subset codec.
struct IndexError : Error {
  using Error::Error;
};

// solution_weight asked for a set too small to contain one hyperedge.
struct EmptySupport : Error {
  using Error::Error;
};

// Enumeration would visit more candidates than the configured budget.
struct BudgetError : Error {
  std::uint64_t candidates;
  BudgetError(const std::string& msg, std::uint64_t n) : Error(msg), candidates(n) {}
};

// k >= M, so no alpha in (0,1) satisfies k <= M^alpha.
struct AlphaOutOfRange : Error {
  using Error::Error;
};

// gamma is exactly 1 or 2, where the success asymptotics are undefined.
struct BoundaryGamma : Error {
  using Error::Error;
};

// Coverage group would be empty (or too small to define an induced model).
struct DegenerateCoverage : Error {
  using Error::Error;
};

// Recovery curve never straddles 1/2.
struct NoCrossing : Error {
  using Error::Error;
};

// No failures observed at any size; only a lower bound on the exponent exists.
struct ExponentLowerBoundOnly : Error {
  double bound;
  ExponentLowerBoundOnly(const std::string& msg, double b) : Error(msg), bound(b) {}
};

// Bad or missing configuration key.
struct ConfigError : Error {
  std::string key;
  ConfigError(const std::string& msg, std::string key_name)
      : Error(msg), key(std::move(key_name)) {}
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace premlab
