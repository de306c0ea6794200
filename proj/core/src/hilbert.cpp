#include "gin3/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gin3 {

DegreeTriple::DegreeTriple(int a, int b, int c) : d_{a, b, c} {
  std::array<int, 3> sorted = d_;
  std::sort(sorted.begin(), sorted.end());
  was_unsorted_ = sorted != d_;
  d_ = sorted;
  if (d_[0] < 2)
    throw std::invalid_argument(
        "degree triple violates the hypothesis 2 <= d1 <= d2 <= d3 (smallest degree " +
        std::to_string(d_[0]) + " < 2)");
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I_eq_lt: return "I.eq-lt";
    case CaseTag::I_lt_lt: return "I.lt-lt";
    case CaseTag::II_eq_eq: return "II.eq-eq";
    case CaseTag::II_eq_lt: return "II.eq-lt";
    case CaseTag::II_lt_eq: return "II.lt-eq";
    case CaseTag::II_lt_lt: return "II.lt-lt";
  }
  return "?";
}

CaseTag classify_case(const DegreeTriple& t) {
  const int d1 = t.d1(), d2 = t.d2(), d3 = t.d3();
  if (d1 == d2 && d2 == d3) return CaseTag::II_eq_eq;
  if (d1 == d2) return 2 * d1 <= d3 + 1 ? CaseTag::I_eq_lt : CaseTag::II_eq_lt;
  if (d2 == d3) return CaseTag::II_lt_eq;  // d1+d2 > d2+1 always holds here
  return d1 + d2 <= d3 + 1 ? CaseTag::I_lt_lt : CaseTag::II_lt_lt;
}

HilbertTable::HilbertTable(const DegreeTriple& degrees, std::vector<long long> values)
    : values_(std::move(values)), socle_degree_(degrees.socle_degree()) {
  if (static_cast<int>(values_.size()) != socle_degree_ + 1)
    throw std::invalid_argument("HilbertTable: wrong support length");
  if (values_.front() != 1) throw std::invalid_argument("HilbertTable: H(0) != 1");
  long long total = 0;
  for (int k = 0; k <= socle_degree_; ++k) {
    const long long v = values_[static_cast<std::size_t>(k)];
    if (v < 0) throw std::invalid_argument("HilbertTable: negative value");
    if (v != values_[static_cast<std::size_t>(socle_degree_ - k)])
      throw std::invalid_argument("HilbertTable: symmetry violated");
    total += v;
  }
  if (total != degrees.total_dimension())
    throw std::invalid_argument("HilbertTable: total dimension != d1*d2*d3");
}

HilbertTable ci_hilbert_series(const DegreeTriple& degrees) {
  std::vector<long long> h{1};
  for (int d : {degrees.d1(), degrees.d2(), degrees.d3()}) {
    std::vector<long long> next(h.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j)] += h[i];
    h = std::move(next);
  }
  return HilbertTable(degrees, std::move(h));
}

std::vector<long long> target_counts(const DegreeTriple& degrees) {
  const HilbertTable h = ci_hilbert_series(degrees);
  std::vector<long long> counts;
  counts.reserve(static_cast<std::size_t>(degrees.terminal_degree()) + 1);
  for (int k = 0; k <= degrees.terminal_degree(); ++k) counts.push_back(slice_size(k) - h.at(k));
  return counts;
}

namespace {

// Exact rational scratch value. The catalogued formulas are evaluated
// verbatim, and a few of them do not even produce integers at every index;
// the flag records that instead of silently rounding.
struct Rat {
  long long n = 0;
  long long d = 1;

  static Rat of(long long v) { return Rat{v, 1}; }
  static Rat frac(long long num, long long den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rat{num, den};
  }
  Rat operator+(const Rat& o) const { return frac(n * o.d + o.n * d, d * o.d); }
  bool integral() const { return d == 1; }
};

struct Eval {
  Rat value;
  bool covered = false;
};

Eval uncovered() { return Eval{}; }
Eval val(Rat r) { return Eval{r, true}; }
Eval val(long long v) { return Eval{Rat::of(v), true}; }

// sum_{i=1}^{j} (c0 - c1*i); empty for j <= 0.
long long sum_linear(long long j, long long c0, long long c1) {
  if (j <= 0) return 0;
  return j * c0 - c1 * j * (j + 1) / 2;
}

long long binom2(long long n) { return n * (n - 1) / 2; }  // C(n,2)

// --- Hilbert-function pieces, by case (first matching piece wins) ---

Eval hilbert_I_eq_lt(const DegreeTriple& t, int k) {
  const long long d = t.d1(), d3 = t.d3();
  if (k <= d - 1) return val(slice_size(k));
  if (k <= 2 * d - 2) {
    const long long j = k - (d - 1);
    return val(binom2(d + 1) + sum_linear(j, d, 1));
  }
  if (k <= d3 - 1) return val(d * d);
  return hilbert_I_eq_lt(t, static_cast<int>(2 * d + d3 - 3 - k));
}

Eval hilbert_I_lt_lt(const DegreeTriple& t, int k) {
  const long long d1 = t.d1(), d2 = t.d2(), d3 = t.d3();
  if (k <= d1 - 1) return val(slice_size(k));
  if (k <= d2 - 1) return val(binom2(d1 + 1) + (k - (d1 - 1)) * d1);
  if (k <= d1 + d2 - 2) {
    const long long j = k - (d2 - 1);
    return val(binom2(d1 + 1) + d1 * (d2 - d1) + sum_linear(j, d1, 1));
  }
  if (k <= d3 - 1) return val(d1 * d2);
  return hilbert_I_lt_lt(t, static_cast<int>(d1 + d2 + d3 - 3 - k));
}

Eval hilbert_II_eq_eq(const DegreeTriple& t, int k) {
  const long long d = t.d1();
  if (k <= d - 1) return val(slice_size(k));
  const long long j = k - (d - 1);
  if (j <= (d - 1) / 2) return val(slice_size(k) - 3 * j * (j + 1) / 2);
  if (2 * k >= 3 * d - 3) return hilbert_II_eq_eq(t, static_cast<int>(3 * d - 3 - k));
  return uncovered();
}

Eval hilbert_II_eq_lt(const DegreeTriple& t, int k) {
  const long long d = t.d1(), d3 = t.d3();
  if (k <= d - 1) return val(slice_size(k));
  if (k <= d3 - 1) return val(binom2(d + 1) + sum_linear(k - (d - 1), d, 1));
  const long long j = k - (d3 - 1);
  if (j <= (2 * d - d3 - 1) / 2)
    return val(binom2(d + 1) + sum_linear(d3 - d, d, 1) + sum_linear(j, 2 * d - d3, 2));
  if (2 * k >= d3 + 2 * d - 3) return hilbert_II_eq_lt(t, static_cast<int>(d3 + 2 * d - 3 - k));
  return uncovered();
}

Eval hilbert_II_lt_eq(const DegreeTriple& t, int k) {
  const long long d1 = t.d1(), d = t.d3();
  if (k <= d1 - 2) return val(slice_size(k));
  if (k <= d - 1) return val(binom2(d1 + 1) + (k - (d1 - 1)) * d1);
  const long long j = k - (d - 1);
  if (j <= (d1 - 1) / 2) return val(binom2(d1 + 1) + d1 * (d - d1) + sum_linear(j, d1, 2));
  if (2 * k >= d1 + 2 * d - 3) return hilbert_II_lt_eq(t, static_cast<int>(d1 + 2 * d - 3 - k));
  return uncovered();
}

Eval hilbert_II_lt_lt(const DegreeTriple& t, int k) {
  const long long d1 = t.d1(), d2 = t.d2(), d3 = t.d3();
  const long long alpha = t.alpha();
  if (k <= d1 - 2) return val(slice_size(k));
  if (k <= d2 - 1) return val(binom2(d1 + 1) + (k - (d1 - 1)) * d1);
  if (k <= d3 - 1) {
    const long long j = k - (d2 - 1);
    return val(binom2(d1 + 1) + d1 * (d2 - d1) + sum_linear(j, d1, 1));
  }
  const long long j = k - (d3 - 1);
  if (j <= (alpha - 1) / 2) {
    // Catalogued verbatim: the third summand reads sum_{i=1..d3-1}(d1-j),
    // i.e. (d3-1)*(d1-j); the product series stays authoritative.
    return val(binom2(d1 + 1) + d1 * (d2 - d1) + (d3 - 1) * (d1 - j) +
               sum_linear(j, alpha, 2));
  }
  return hilbert_II_lt_lt(t, static_cast<int>(d1 + d2 + d3 - 3 - k));
}

// --- |J_k| pieces, by case ---

Eval count_I_eq_lt(const DegreeTriple& t, int k) {
  const long long d = t.d1(), d3 = t.d3();
  if (k >= t.terminal_degree()) return val(slice_size(k));
  if (k <= d - 1) return val(0);
  if (k <= 2 * d - 2) {
    const long long j = k - (d - 1);
    return val(j * (j + 1));
  }
  if (k <= d3 - 1) {
    const long long j = k - (2 * d - 2);
    return val(d * (d - 1) + 2 * d * j + j * (j - 1) / 2);
  }
  if (k <= d + d3 - 2) {
    const long long j = k - (d3 - 1);
    return val(d3 * (d3 + 1) / 2 - d * d + j * d3 + j * (j + 1));
  }
  const long long j = k - (d + d3 - 2);
  if (j <= d) return val(d3 * (d3 - 1) / 2 + d * (d3 - 1) + j * (d3 + 2 * d));
  return uncovered();
}

Eval count_I_lt_lt(const DegreeTriple& t, int k) {
  const long long d1 = t.d1(), d2 = t.d2(), d3 = t.d3();
  if (k >= t.terminal_degree()) return val(slice_size(k));
  if (k <= d1 - 1) return val(0);
  if (k <= d2 - 1) {
    const long long j = k - (d1 - 1);
    return val(Rat::frac(j * (j + 1), 2));
  }
  if (k <= d1 + d2 - 2) {
    const long long j = k - (d2 - 1);
    return val(binom2(d2 - d1) + j * (d2 - d1) + j * (j + 1));
  }
  if (k <= d3 - 1) {
    const long long j = k - (d1 + d2 - 2);
    return val((d1 * d1 + d2 * d2 - d1 - d2) / 2 + j * (d1 + d2) + j * (j - 1) / 2);
  }
  if (k <= d1 + d3 - 2) {
    const long long j = k - (d3 - 1);
    return val(Rat::frac(d3 * d3 + d3 - 2 * d1 * d2, 2) + Rat::of(j * d3 + j * (j + 1)));
  }
  if (k <= d2 + d3 - 2) {
    const long long j = k - (d1 + d3 - 2);
    return val(Rat::frac((d1 + d3) * (d1 + d3 - 1) + d1 * d1 - d1 - 2 * d1 * d2, 2) +
               Rat::of(j * (d3 + 2 * d1) + j * (j - 1) / 2));
  }
  const long long j = k - (d2 + d3 - 2);
  if (j <= d1 - 1)
    return val(Rat::frac((d2 + d3) * (d2 + d3 - 1) + d1 * (d1 - 1), 2) +
               Rat::of(j * (d1 + d2 + d3)));
  return uncovered();
}

Eval count_II_eq_eq(const DegreeTriple& t, int k) {
  const long long d = t.d1();
  if (k >= t.terminal_degree()) return val(slice_size(k));
  if (k <= d - 1) return val(0);
  {
    const long long j = k - (d - 1);
    if (j <= (3 * d - 1) / 2) return val(3 * j * (j + 1) / 2);
  }
  if (d % 2 == 0) {
    const long long j = k - (3 * d - 2) / 2;
    if (j >= 0 && j <= (d - 2) / 2)
      return val(Rat::frac(3 * d * d + 3 * d * (4 * j + 2), 8) + Rat::of(3 * j * (j + 1) / 2));
  } else {
    const long long j = k - (3 * d - 3) / 2;
    if (j >= 0 && j <= (d - 1) / 2)
      return val(Rat::frac(3 * (d * d - 1) + 12 * j * d, 8) + Rat::frac(3 * j * j, 2));
  }
  {
    const long long j = k - (2 * d - 2);
    if (j >= 0 && j <= d - 1) return val(3 * d * (d - 1) / 2 + 3 * j * d);
  }
  return uncovered();
}

Eval count_II_eq_lt(const DegreeTriple& t, int k) {
  const long long d = t.d1(), d3 = t.d3();
  if (k >= t.terminal_degree()) return val(slice_size(k));
  if (k <= d - 1) return val(0);
  {
    const long long j = k - (d - 1);
    if (j <= d3 - d) return val(j * (j + 1));
  }
  {
    const long long j = k - (d3 - 1);
    if (j >= 0 && j <= (2 * d - d3 - 1) / 2)
      return val(Rat::of(d3 * d3 + d3 - d * d - d - 2 * d * d3 + j * (2 * d3 - d)) +
                 Rat::frac(3 * j * (j + 1), 2));
  }
  if (d3 % 2 == 0) {
    const long long j = k - (2 * d + d3 - 2) / 2;
    if (j >= 0 && j <= (2 * d - d3 - 2) / 2)
      return val(Rat::frac(4 * d * d + 3 * d3 * d3 - 4 * d * d3 + 4 * d, 8) +
                 Rat::frac(j * (2 * d + d3), 2) + Rat::frac(3 * j * (j + 1), 2));
  } else {
    const long long j = k - (2 * d + d3 - 3) / 2;
    if (j >= 0 && j <= (2 * d - d3 - 1) / 2)
      return val(Rat::frac(3 * d3 * d3 + 4 * d * d - 4 * d * d3 - 3, 2) +
                 Rat::frac(j * (2 * d + d3 - 3), 2) + Rat::frac(3 * j * (j + 1), 2));
  }
  {
    const long long j = k - (2 * d - 2);
    if (j >= 0 && j <= d3 - d)
      return val(3 * d * d - 2 * d + d3 * (d3 + 1) / 2 - 2 * d * d3 + (4 * d - d3) * j +
                 j * (j - 1));
  }
  {
    const long long j = k - (d3 + d - 2);
    if (j >= 0 && j <= d - 1)
      return val((d + d3) * (d + d3 - 1) / 2 - d * (d + 1) / 2 + j * (2 * d + d3));
  }
  return uncovered();
}

Eval count_II_lt_eq(const DegreeTriple& t, int k) {
  const long long d1 = t.d1(), d = t.d3();
  if (k >= t.terminal_degree()) return val(slice_size(k));
  if (k <= d1 - 1) return val(0);
  {
    const long long j = k - (d1 - 1);
    if (j <= d - d1) return val(Rat::frac(j * (j + 1), 2));
  }
  {
    const long long j = k - (d - 1);
    if (j >= 0 && j <= (d1 - 1) / 2)
      return val(binom2(d - d1) + j * (d - d1) + 3 * j * (j + 1) / 2);
  }
  if (d1 % 2 == 0) {
    const long long j = k - (2 * d + d1 - 2) / 2;
    if (j >= 0 && j <= (d1 - 2) / 2)
      return val(Rat::frac(3 * d1 * d1 + 2 * d1 + 4 * d * d + 4 * d - 4 * d * d1, 8) +
                 Rat::frac(j * (2 * d + d1), 2) + Rat::frac(3 * j * (j + 1), 2));
  } else {
    const long long j = k - (2 * d + d1 - 3) / 2;
    if (j >= 0 && j <= (d1 - 1) / 2)
      return val(Rat::frac(3 * d1 * d1 + 4 * d * d - 4 * d * d1 - 3, 2) +
                 Rat::frac(j * (2 * d + d1), 2) + Rat::frac(3 * j * j, 2));
  }
  {
    const long long j = k - (d1 + d - 2);
    if (j >= 0 && j <= d - d1)
      return val(d * (d - 1) / 2 + d1 * (d1 - 1) + j * (2 * d1 + d) + j * (j - 1) / 2);
  }
  {
    const long long j = k - (2 * d - 2);
    if (j >= 0 && j <= d1 - 1)
      return val((2 * d * (2 * d - 1) - d1 * (d1 - 1)) / 2 + j * (2 * d + d1));
  }
  return uncovered();
}

// Several pieces below are anchored to |J_{k0}| values at earlier degrees;
// those bases are resolved through the earlier pieces only (item_limit),
// which keeps the evaluation well-founded.
Eval count_II_lt_lt(const DegreeTriple& t, int k, int item_limit = 9) {
  const long long d1 = t.d1(), d2 = t.d2(), d3 = t.d3();
  const long long alpha = t.alpha();
  const long long s = d1 + d2 + d3;
  const auto base = [&](long long k0, int limit) {
    return count_II_lt_lt(t, static_cast<int>(k0), limit);
  };
  if (item_limit > 8 && k >= t.terminal_degree()) return val(slice_size(k));
  if (item_limit > 0 && k <= d1 - 1) return val(0);
  if (item_limit > 1) {
    const long long j = k - (d1 - 1);
    if (j >= 0 && j <= d2 - d1) return val(Rat::frac(j * (j + 1), 2));
  }
  if (item_limit > 2) {
    const long long j = k - (d2 - 1);
    if (j >= 0 && j <= d3 - d2) return val(d2 * (d2 - 1) + j * (d2 - d1) + j * (j + 1));
  }
  if (item_limit > 3) {
    const long long j = k - (d3 - 1);
    if (j >= 0 && j <= (alpha - 1) / 2) {
      const Eval b = base(d3 - 1, 3);
      if (!b.covered) return uncovered();
      return val(b.value + Rat::of(j * (2 * d3 - d1 - d2)) + Rat::frac(3 * j * (j + 1), 2));
    }
  }
  if (item_limit > 4) {
    if (s % 2 == 0) {
      const long long j = k - (s - 2) / 2;
      if (j >= 0 && j <= (alpha - 2) / 2) {
        const Eval b = base((s - 4) / 2, 4);
        if (!b.covered) return uncovered();
        return val(b.value + Rat::frac((j + 1) * s, 2) + Rat::frac(3 * j * (j + 1), 2));
      }
    } else {
      const long long j = k - (s - 3) / 2;
      if (j >= 0 && j <= (alpha - 1) / 2) {
        const Eval b = base((s - 3) / 2, 4);
        if (!b.covered) return uncovered();
        return val(b.value + Rat::frac(j * s, 2) + Rat::frac(3 * j * j, 2));
      }
    }
  }
  if (item_limit > 5) {
    const long long j = k - (d1 + d2 - 2);
    if (j >= 0 && j <= d3 - d2) {
      const Eval b = base(d1 + d2 - 2, 5);
      if (!b.covered) return uncovered();
      return val(b.value + Rat::of(j * (2 * d1 + 2 * d2 - d3 - 1) + j * j));
    }
  }
  if (item_limit > 6) {
    const long long j = k - (d1 + d3 - 2);
    if (j >= 0 && j <= d2 - d1) {
      const Eval b = base(d1 + d3 - 2, 6);
      if (!b.covered) return uncovered();
      return val(b.value + Rat::of(j * (2 * d1 + d3 - 1)) + Rat::frac(j * (j + 1), 2));
    }
  }
  if (item_limit > 7) {
    const long long j = k - (d1 + d3 - 2);
    if (j >= 0 && j <= d1 - 1) {
      const Eval b = base(d2 + d3 - 1, 7);
      if (!b.covered) return uncovered();
      return val(b.value + Rat::of(j * s));
    }
  }
  return uncovered();
}

PiecewiseValue finish(const Eval& e, long long truth) {
  PiecewiseValue out;
  out.covered = e.covered;
  if (!e.covered) return out;
  out.integral = e.value.integral();
  out.value = e.value.n / e.value.d;
  out.agrees = out.integral && out.value == truth;
  return out;
}

}  // namespace

PiecewiseValue piecewise_hilbert(const DegreeTriple& degrees, int k) {
  if (k < 0) throw std::invalid_argument("piecewise_hilbert: negative degree");
  Eval e;
  switch (classify_case(degrees)) {
    case CaseTag::I_eq_lt: e = hilbert_I_eq_lt(degrees, k); break;
    case CaseTag::I_lt_lt: e = hilbert_I_lt_lt(degrees, k); break;
    case CaseTag::II_eq_eq: e = hilbert_II_eq_eq(degrees, k); break;
    case CaseTag::II_eq_lt: e = hilbert_II_eq_lt(degrees, k); break;
    case CaseTag::II_lt_eq: e = hilbert_II_lt_eq(degrees, k); break;
    case CaseTag::II_lt_lt: e = hilbert_II_lt_lt(degrees, k); break;
  }
  return finish(e, ci_hilbert_series(degrees).at(k));
}

PiecewiseValue piecewise_count(const DegreeTriple& degrees, int k) {
  if (k < 0) throw std::invalid_argument("piecewise_count: negative degree");
  Eval e;
  switch (classify_case(degrees)) {
    case CaseTag::I_eq_lt: e = count_I_eq_lt(degrees, k); break;
    case CaseTag::I_lt_lt: e = count_I_lt_lt(degrees, k); break;
    case CaseTag::II_eq_eq: e = count_II_eq_eq(degrees, k); break;
    case CaseTag::II_eq_lt: e = count_II_eq_lt(degrees, k); break;
    case CaseTag::II_lt_eq: e = count_II_lt_eq(degrees, k); break;
    case CaseTag::II_lt_lt: e = count_II_lt_lt(degrees, k); break;
  }
  const long long truth =
      k <= degrees.terminal_degree() ? target_counts(degrees)[static_cast<std::size_t>(k)]
                                     : slice_size(k);
  return finish(e, truth);
}

}  // namespace gin3
