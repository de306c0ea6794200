#pragma once

#include <cstdint>
#include <vector>

#include "gin3/buchberger.hpp"
#include "gin3/gin.hpp"
#include "gin3/hilbert.hpp"

namespace gin3 {

struct OracleConfig {
  std::int64_t prime = 32003;
  int retry_limit = 8;
  /// Apply a random invertible change of coordinates before the Groebner
  /// run. Without it the initial ideal of special inputs (e.g. the
  /// monomial regular sequence) differs from the generic one.
  bool coordinate_change = true;
  /// Use x1^d1, x2^d2, x3^d3 instead of random dense forms (negative
  /// control).
  bool monomial_inputs = false;

  bool small_modulus_warning() const { return prime < 1000; }
};

struct OracleVerdict {
  DegreeTriple degrees;
  std::int64_t p;
  std::uint64_t seed;
  /// Quotient Hilbert function of the computed initial ideal matched the
  /// complete-intersection series (regularity/genericity gate).
  bool hilbert_gate = false;
  /// Exact equality of minimal generators with the greedy prediction.
  bool match = false;
  int retries = 0;
  bool exhausted = false;
  MonomialIdeal computed;
  MonomialIdeal predicted;
};

/// One seeded verification run: draw the regular sequence, rotate by a
/// random invertible change, compute the truncated initial ideal, gate on
/// the Hilbert function (resampling up to the retry limit), then compare
/// with the greedy prediction.
OracleVerdict oracle_compare(const DegreeTriple& degrees, std::uint64_t seed,
                             const OracleConfig& config = {});

}  // namespace gin3
