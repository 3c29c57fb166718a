// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilcid/frobenius.hpp"
#include "weilcid/monogeneity.hpp"

namespace weilcid {

struct ModulusAnalysis {
  Integer n;
  std::optional<SplittingReport> report;
  /// Primes l | n with the applicability verdict of the matrix at l.
  std::vector<std::pair<std::uint64_t, Applicability>> applicability;
  std::string error;
};

struct Analysis {
  WeilCandidate candidate;
  bool is_weil = false;
  std::optional<bool> is_irreducible;
  std::optional<unsigned> p_rank;
  std::optional<Integer> order_discriminant;
  std::vector<ModulusAnalysis> moduli;
  /// Why the analysis stopped early, if it did.
  std::string status;
};

/// Metadata for the polynomial and one splitting report per modulus.
/// Non-Weil or reducible input stops after the failing check; a modulus
/// sharing a factor with p yields an error entry and the run continues.
Analysis analyze(std::uint64_t p, unsigned m, unsigned g, const std::vector<Integer>& free_coeffs,
                 const std::vector<Integer>& moduli);

std::string to_json(const Analysis& a, int indent = 2);

}  // namespace weilcid
