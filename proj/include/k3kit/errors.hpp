// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace k3kit {

// Error categories. "budget" errors signal that a computation was refused
// because it would exceed a configured enumeration budget, not that the
// input is invalid; callers (and the CLI) treat the two differently.
enum class errc {
  zero_input,
  not_coprime,
  degenerate_lattice,
  odd_lattice,
  unsupported_prime,
  mismatched_context,
  budget_exceeded,
  budget_exhausted,
  singular_minor,
  zero_entry,
  division_by_zero,
  not_prime,
  degenerate_pencil,
  invalid_pencil,
  ambiguous_reconstruction,
  inconsistent,
  on_discriminant,
  representative_undefined,
  certificate_failed,
  degenerate_matrix,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_input: return "ZeroInput";
    case errc::not_coprime: return "NotCoprime";
    case errc::degenerate_lattice: return "DegenerateLattice";
    case errc::odd_lattice: return "OddLattice";
    case errc::unsupported_prime: return "UnsupportedPrime";
    case errc::mismatched_context: return "MismatchedContext";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::singular_minor: return "SingularMinor";
    case errc::zero_entry: return "ZeroEntry";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_prime: return "NotPrime";
    case errc::degenerate_pencil: return "DegeneratePencil";
    case errc::invalid_pencil: return "InvalidPencil";
    case errc::ambiguous_reconstruction: return "AmbiguousReconstruction";
    case errc::inconsistent: return "Inconsistent";
    case errc::on_discriminant: return "OnDiscriminant";
    case errc::representative_undefined: return "RepresentativeUndefined";
    case errc::certificate_failed: return "CertificateFailed";
    case errc::degenerate_matrix: return "DegenerateMatrix";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

inline bool is_budget_error(errc c) {
  return c == errc::budget_exceeded || c == errc::budget_exhausted;
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace k3kit
