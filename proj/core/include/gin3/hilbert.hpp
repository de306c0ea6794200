#pragma once

#include <string>
#include <vector>

#include "gin3/monomial.hpp"

namespace gin3 {

/// Degrees (d1,d2,d3) of a regular sequence, sorted ascending with
/// 2 <= d1 <= d2 <= d3. Unsorted input is accepted and sorted; any d_i < 2
/// is rejected.
class DegreeTriple {
 public:
  DegreeTriple(int a, int b, int c);

  int d1() const { return d_[0]; }
  int d2() const { return d_[1]; }
  int d3() const { return d_[2]; }
  int alpha() const { return d_[0] + d_[1] - d_[2]; }

  /// Top nonzero degree of the artinian quotient.
  int socle_degree() const { return d_[0] + d_[1] + d_[2] - 3; }
  /// First degree at which the slice of the initial ideal is full.
  int terminal_degree() const { return d_[0] + d_[1] + d_[2] - 2; }

  long long total_dimension() const {
    return static_cast<long long>(d_[0]) * d_[1] * d_[2];
  }

  bool was_unsorted() const { return was_unsorted_; }

  friend bool operator==(const DegreeTriple& a, const DegreeTriple& b) {
    return a.d_ == b.d_;
  }

 private:
  std::array<int, 3> d_;
  bool was_unsorted_ = false;
};

/// The six case classes of a degree triple. Case I is d1+d2 <= d3+1,
/// case II is d1+d2 > d3+1; the suffix records the equality pattern of
/// the sorted degrees.
enum class CaseTag { I_eq_lt, I_lt_lt, II_eq_eq, II_eq_lt, II_lt_eq, II_lt_lt };

std::string to_string(CaseTag tag);

CaseTag classify_case(const DegreeTriple& degrees);

/// Hilbert function of the artinian complete-intersection quotient,
/// finitely supported on 0..socle_degree. Construction checks H(0)=1,
/// the symmetry H(k)=H(socle-k) and the total dimension d1*d2*d3.
class HilbertTable {
 public:
  HilbertTable(const DegreeTriple& degrees, std::vector<long long> values);

  long long at(int k) const {
    if (k < 0 || k > socle_degree_) return 0;
    return values_[static_cast<std::size_t>(k)];
  }
  const std::vector<long long>& values() const { return values_; }
  int socle_degree() const { return socle_degree_; }

 private:
  std::vector<long long> values_;
  int socle_degree_;
};

/// Coefficient list of (1+t+..+t^{d1-1})(1+t+..+t^{d2-1})(1+t+..+t^{d3-1}).
HilbertTable ci_hilbert_series(const DegreeTriple& degrees);

/// |J_k| = C(k+2,2) - H(A,k) for 0 <= k <= terminal_degree.
std::vector<long long> target_counts(const DegreeTriple& degrees);

/// Result of evaluating one of the catalogued piecewise formulas at k.
/// The product series stays the ground truth: `agrees` records whether the
/// formula reproduces it, `covered` whether any piece applied at all, and
/// `integral` whether the printed arithmetic even produced an integer.
struct PiecewiseValue {
  long long value = 0;
  bool covered = false;
  bool integral = true;
  bool agrees = false;
};

/// Case-appropriate closed-form value of H(A,k). Formulas are evaluated as
/// catalogued (first matching piece wins); disagreement with the product
/// series only sets the flag.
PiecewiseValue piecewise_hilbert(const DegreeTriple& degrees, int k);

/// Case-appropriate closed-form value of |J_k|, same conventions.
PiecewiseValue piecewise_count(const DegreeTriple& degrees, int k);

}  // namespace gin3
