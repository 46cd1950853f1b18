#pragma once

#include <stdexcept>
#include <string>

namespace mindist {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input: schema violations, parse failures, violated preconditions.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// Exponent-vector length disagreement.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Operands live over different coefficient fields or variable counts.
class RingMismatchError : public Error {
public:
  explicit RingMismatchError(const std::string& what) : Error(what) {}
};

// The zero ideal is outside the domain of every operation here.
class ZeroIdealError : public Error {
public:
  explicit ZeroIdealError(const std::string& what) : Error(what) {}
};

// Instance exceeds a documented size guard (vertex counts, variable counts, ...).
class SizeGuardError : public Error {
public:
  explicit SizeGuardError(const std::string& what) : Error(what) {}
};

// Candidate enumeration would exceed the configured budget.  Carries the number of
// degree-d standard monomials and the implied candidate count q^n - 1 (as text, since
// the count can overflow any machine integer).
class BudgetError : public Error {
public:
  BudgetError(const std::string& what, long long standard_monomials,
              std::string candidate_count)
      : Error(what),
        standard_monomials_(standard_monomials),
        candidate_count_(std::move(candidate_count)) {}

  long long standard_monomials() const { return standard_monomials_; }
  const std::string& candidate_count() const { return candidate_count_; }

private:
  long long standard_monomials_;
  std::string candidate_count_;
};

// An operation requiring unmixedness was called without a certificate or assertion.
class UnmixednessUnknownError : public Error {
public:
  explicit UnmixednessUnknownError(const std::string& what) : Error(what) {}
};

// A bounded search ran out of its cap without settling the answer.  Carries the cap.
class InconclusiveError : public Error {
public:
  InconclusiveError(const std::string& what, long long cap) : Error(what), cap_(cap) {}
  long long cap() const { return cap_; }

private:
  long long cap_;
};

// A built-in cross-check failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace mindist
