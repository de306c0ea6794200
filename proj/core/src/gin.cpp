#include "gin3/gin.hpp"

#include <cassert>
#include <stdexcept>

namespace gin3 {

MonomialIdeal almost_revlex_from_counts(const std::vector<long long>& counts) {
  std::vector<Monomial> gens;
  std::vector<char> slice;  // current degree-k slice, indexed by revlex rank
  for (int k = 0; k < static_cast<int>(counts.size()); ++k) {
    const long long size = slice_size(k);
    std::vector<char> next(static_cast<std::size_t>(size), 0);
    long long present = 0;
    if (k > 0) {
      for (int r = 0; r < static_cast<int>(slice.size()); ++r) {
        if (!slice[static_cast<std::size_t>(r)]) continue;
        const Monomial m = monomial_at_rank(k - 1, r);
        for (int i = 0; i < 3; ++i) {
          auto& cell = next[static_cast<std::size_t>(revlex_rank(m.times_var(i)))];
          if (!cell) {
            cell = 1;
            ++present;
          }
        }
      }
    }
    long long needed = counts[static_cast<std::size_t>(k)] - present;
    if (needed < 0)
      throw std::logic_error("almost_revlex_from_counts: shadow exceeds the degree-" +
                             std::to_string(k) + " target (" + std::to_string(present) + " > " +
                             std::to_string(counts[static_cast<std::size_t>(k)]) + ")");
    for (int r = 0; needed > 0 && r < static_cast<int>(size); ++r) {
      auto& cell = next[static_cast<std::size_t>(r)];
      if (cell) continue;
      cell = 1;
      gens.push_back(monomial_at_rank(k, r));
      --needed;
    }
    if (needed > 0) throw std::logic_error("almost_revlex_from_counts: target exceeds slice size");
    slice = std::move(next);
  }
  MonomialIdeal J = MonomialIdeal::minimalize(gens);
  // New monomials are never divisible by earlier slices, so nothing was dropped.
  assert(J.generator_count() == gens.size());
  if (!counts.empty()) J.set_max_relevant_degree(static_cast<int>(counts.size()) - 1);
  return J;
}

namespace {

std::map<int, std::vector<Monomial>> group_by_degree(const std::vector<Monomial>& gens) {
  std::map<int, std::vector<Monomial>> by_degree;
  for (const Monomial& g : gens) by_degree[g.degree()].push_back(g);
  return by_degree;
}

void emit(std::vector<Monomial>& v, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return;  // raw transcriptions may leave the valid range
  v.push_back(Monomial{{a, b, c}});
}

// base x2^b x3^c times {x1,x2}^m, expanded x1-first: (a+i, b+m-i, c), i=m..0.
void emit_bracket(std::vector<Monomial>& v, int b, int c, int m) {
  for (int i = m; i >= 0; --i) emit(v, i, b + m - i, c);
}

void expand_I_eq_lt(std::vector<Monomial>& v, int d, int d3, TemplateForm) {
  emit(v, d, 0, 0);
  for (int j = 0; j <= d - 1; ++j) emit(v, d - j - 1, 2 * j + 1, 0);
  for (int j = 0; j <= d - 2; ++j) emit_bracket(v, 2 * d - 2 * j - 2, d3 - 2 * d + 2 * j + 2, j);
  for (int j = 1; j <= d; ++j) emit_bracket(v, 0, d3 + 2 * j - 2, d - j);
}

void expand_I_lt_lt(std::vector<Monomial>& v, int d1, int d2, int d3, TemplateForm) {
  emit(v, d1, 0, 0);
  for (int j = 1; j <= d1 - 1; ++j) emit(v, d1 - j, d2 - d1 + 2 * j - 1, 0);
  emit(v, 0, d1 + d2 - 1, 0);
  emit(v, 0, d1 + d2 - 2, d3 - d1 - d2 + 2);
  for (int j = 1; j <= d1 - 2; ++j)
    emit_bracket(v, d1 + d2 - 2 * j - 2, d3 - d1 - d2 + 2 * j + 2, j);
  for (int j = 1; j <= d2 - d1; ++j)
    emit_bracket(v, d2 - d1 + 1 - j, d3 + d1 - d2 - 2 + 2 * j, d1 - 1);
  for (int j = 1; j <= d1; ++j) emit_bracket(v, 0, d3 + d2 - d1 + 2 * j - 2, d1 - j);
}

void expand_II_eq_eq(std::vector<Monomial>& v, int d, TemplateForm form) {
  for (int i = 2; i >= 0; --i) emit(v, d - 2 + i, 2 - i, 0);  // x1^{d-2}{x1,x2}^2
  if (d % 2 == 1) {
    for (int j = 1; j <= (d - 3) / 2; ++j) {
      emit(v, d - 2 * j - 1, 3 * j + 1, 0);
      emit(v, d - 2 * j - 2, 3 * j + 2, 0);
    }
    emit(v, 0, (3 * d - 1) / 2, 0);
    // Raw exponent (3d-3)/3 breaks strong stability; the Hilbert counts
    // force (3d-3)/2.
    emit(v, 0, form == TemplateForm::raw ? (3 * d - 3) / 3 : (3 * d - 3) / 2, 1);
    for (int j = 1; j <= (d - 3) / 2; ++j)
      emit_bracket(v, (3 * d - 3) / 2 - 3 * j, 2 * j + 1, 2 * j);
  } else {
    for (int j = 1; j <= (d - 4) / 2; ++j) {
      emit(v, d - 2 * j - 1, 3 * j + 1, 0);
      emit(v, d - 2 * j - 2, 3 * j + 2, 0);
    }
    emit(v, 1, (3 * d - 4) / 2, 0);
    emit(v, 0, (3 * d - 2) / 2, 0);
    for (int j = 1; j <= (d - 2) / 2; ++j)
      emit_bracket(v, 3 * d / 2 - 3 * j, 2 * j, 2 * j - 1);
  }
  for (int j = 1; j <= d; ++j) emit_bracket(v, 0, d - 2 + 2 * j, d - j);
}

void expand_II_eq_lt(std::vector<Monomial>& v, int d, int d3, TemplateForm form) {
  emit(v, d, 0, 0);
  emit(v, d - 1, 1, 0);
  for (int j = 1; j <= d3 - d - 1; ++j) emit(v, d - j - 1, 2 * j + 1, 0);
  if (d3 % 2 == 0) {
    for (int j = 1; j <= (2 * d - d3) / 2; ++j) {
      emit(v, 2 * d - d3 - 2 * j + 1, 2 * d3 - 2 * d + 3 * j - 2, 0);
      emit(v, 2 * d - d3 - 2 * j, 2 * d3 - 2 * d + 3 * j - 1, 0);
    }
    // Raw leads with x2^((2d+d3-2)/2 - 3j), one below the degree the counts
    // demand for this run; the whole family sits one degree too low.
    const int lead = form == TemplateForm::raw ? (2 * d + d3 - 2) / 2 : (2 * d + d3) / 2;
    for (int j = 1; j <= (2 * d - d3 - 2) / 2; ++j)
      emit_bracket(v, lead - 3 * j, 2 * j, 2 * j - 1);
  } else {
    for (int j = 1; j <= (2 * d - d3 - 1) / 2; ++j) {
      emit(v, 2 * d - d3 - 2 * j + 1, 2 * d3 - 2 * d + 3 * j - 2, 0);
      emit(v, 2 * d - d3 - 2 * j, 2 * d3 - 2 * d + 3 * j - 1, 0);
    }
    emit(v, 0, (2 * d + d3 - 1) / 2, 0);
    emit(v, 0, (2 * d + d3 - 3) / 2, 1);
    for (int j = 1; j <= (2 * d - d3 - 3) / 2; ++j)
      emit_bracket(v, (2 * d + d3 - 3) / 2 - 3 * j, 2 * j + 1, 2 * j);
  }
  for (int j = 1; j <= d3 - d; ++j)
    emit_bracket(v, 2 * d3 - 2 * d + 2 - 2 * j, 2 * d - d3 - 2 + 2 * j, 2 * d - d3 + j - 2);
  for (int j = 1; j <= d; ++j) emit_bracket(v, 0, d3 - 2 + 2 * j, d - j);
}

void expand_II_lt_eq(std::vector<Monomial>& v, int d1, int d, TemplateForm form) {
  emit(v, d1, 0, 0);
  if (d1 % 2 == 0) {
    for (int j = 1; j <= (d1 - 2) / 2; ++j) {
      emit(v, d1 - 2 * j + 1, d - d1 - 2 + 3 * j, 0);
      emit(v, d1 - 2 * j, d - d1 - 1 + 3 * j, 0);
    }
    emit(v, 1, (d1 + 2 * d - 4) / 2, 0);
    // Raw repeats the exponent (d1+2d-4)/2 for the pure x2 power; the two
    // center generators sit one degree apart, which the counts rule out.
    emit(v, 0, form == TemplateForm::raw ? (d1 + 2 * d - 4) / 2 : (d1 + 2 * d - 2) / 2, 0);
    // Raw stops this run at (d1-4)/2, one family short of the counts.
    const int run_top = form == TemplateForm::raw ? (d1 - 4) / 2 : (d1 - 2) / 2;
    for (int j = 1; j <= run_top; ++j)
      emit_bracket(v, (d1 + 2 * d) / 2 - 3 * j, 2 * j, 2 * j - 1);
  } else {
    for (int j = 1; j <= (d1 - 1) / 2; ++j) {
      emit(v, d1 - 2 * j + 1, d - d1 - 2 + 3 * j, 0);
      emit(v, d1 - 2 * j, d - d1 - 1 + 3 * j, 0);
    }
    emit(v, 0, (d1 + 2 * d - 1) / 2, 0);
    emit(v, 0, (d1 + 2 * d - 3) / 2, 1);
    for (int j = 1; j <= (d1 - 3) / 2; ++j)
      emit_bracket(v, (d1 + 2 * d - 3) / 2 - 3 * j, 2 * j + 1, 2 * j);
  }
  for (int j = 1; j <= d - d1; ++j) emit_bracket(v, d - d1 - j + 1, d1 - 2 + 2 * j, d1 - 1);
  for (int j = 1; j <= d1; ++j) emit_bracket(v, 0, 2 * d - d1 - 2 + 2 * j, d1 - j);
}

void expand_II_lt_lt(std::vector<Monomial>& v, int d1, int d2, int d3, TemplateForm) {
  const int alpha = d1 + d2 - d3;
  const int s = d1 + d2 + d3;
  emit(v, d1, 0, 0);
  for (int i = 1; i <= d3 - d2; ++i) emit(v, d1 - i, d2 - d1 + 2 * i - 1, 0);
  if (alpha % 2 == 0) {
    for (int j = 1; j <= (alpha - 2) / 2; ++j) {
      emit(v, alpha - 2 * j, 2 * d3 - d1 - d2 + 3 * j - 1, 0);
      emit(v, alpha - 2 * j + 1, 2 * d3 - d1 - d2 + 3 * j - 2, 0);
    }
    emit(v, 0, (s - 2) / 2, 0);
    emit(v, 1, (s - 4) / 2, 0);
    for (int j = 1; j <= (alpha - 2) / 2; ++j)
      emit_bracket(v, s / 2 - 3 * j, 2 * j, 2 * j - 1);
  } else {
    for (int j = 1; j <= (alpha - 1) / 2; ++j) {
      emit(v, alpha - 2 * j, 2 * d3 - d1 - d2 + 3 * j - 1, 0);
      emit(v, alpha - 2 * j + 1, 2 * d3 - d1 - d2 + 3 * j - 2, 0);
    }
    emit(v, 0, (s - 1) / 2, 0);
    emit(v, 0, (s - 3) / 2, 1);
    for (int j = 1; j <= (alpha - 3) / 2; ++j)
      emit_bracket(v, (s - 3) / 2 - 3 * j, 2 * j + 1, 2 * j);
  }
  for (int j = 1; j <= d3 - d2; ++j)
    emit_bracket(v, 2 * d3 - d1 - d2 - 2 * j + 2, alpha + 2 * j - 2, alpha + j - 2);
  for (int j = 1; j <= d2 - d1; ++j)
    emit_bracket(v, d2 - d1 - j + 1, d1 + d3 - d2 + 2 * j - 2, d1 - 1);
  for (int j = 1; j <= d1; ++j) emit_bracket(v, 0, d2 + d3 - d1 - 2 + 2 * j, d1 - j);
}

}  // namespace

GinResult construct_gin_greedy(const DegreeTriple& degrees) {
  MonomialIdeal J = almost_revlex_from_counts(target_counts(degrees));
  GinResult result{degrees, classify_case(degrees), GinMethod::greedy, std::move(J), {}};
  result.new_by_degree = group_by_degree(result.ideal.generators());
  return result;
}

GinResult construct_gin_closed_form(const DegreeTriple& degrees, TemplateForm form) {
  std::vector<Monomial> raw;
  const CaseTag tag = classify_case(degrees);
  switch (tag) {
    case CaseTag::I_eq_lt: expand_I_eq_lt(raw, degrees.d1(), degrees.d3(), form); break;
    case CaseTag::I_lt_lt:
      expand_I_lt_lt(raw, degrees.d1(), degrees.d2(), degrees.d3(), form);
      break;
    case CaseTag::II_eq_eq: expand_II_eq_eq(raw, degrees.d1(), form); break;
    case CaseTag::II_eq_lt: expand_II_eq_lt(raw, degrees.d1(), degrees.d3(), form); break;
    case CaseTag::II_lt_eq: expand_II_lt_eq(raw, degrees.d1(), degrees.d3(), form); break;
    case CaseTag::II_lt_lt:
      expand_II_lt_lt(raw, degrees.d1(), degrees.d2(), degrees.d3(), form);
      break;
  }
  MonomialIdeal J = MonomialIdeal::minimalize(std::move(raw));
  J.set_max_relevant_degree(degrees.terminal_degree());
  GinResult result{degrees, tag, GinMethod::closed_form, std::move(J), {}};
  result.new_by_degree = group_by_degree(result.ideal.generators());
  return result;
}

long long generator_count(const DegreeTriple& t) {
  const long long d1 = t.d1(), d2 = t.d2(), d3 = t.d3();
  switch (classify_case(t)) {
    case CaseTag::I_eq_lt: return d1 * d1 + d1 + 1;
    case CaseTag::I_lt_lt: return 1 + d1 + d1 * d2;
    case CaseTag::II_eq_eq:
      return d1 % 2 ? 1 + d1 * (d1 + 1) / 2 + (d1 + 1) * (d1 + 1) / 4
                    : 1 + d1 * (d1 + 1) / 2 + d1 * (d1 + 2) / 4;
    case CaseTag::II_eq_lt: {
      const long long r = 2 * d1 - d3;
      return d3 % 2 == 0 ? d1 * (d1 + 1) - (r / 2) * (r / 2) + 1
                         : d1 * (d1 + 1) - (r * r - 1) / 4 + 1;
    }
    case CaseTag::II_lt_eq:
      // Parity branch taken on d1 (on d2=d3 the even branch is not even
      // integral for odd d1).
      return d1 % 2 == 0 ? d1 * (d3 + 1) - (d1 / 2) * (d1 / 2) + 1
                         : d1 * (d3 + 1) - (d1 * d1 - 1) / 4 + 1;
    case CaseTag::II_lt_lt: {
      const long long a = t.alpha();
      return a % 2 == 0 ? d1 * (d2 + 1) - (a / 2) * (a / 2) + 1
                        : d1 * (d2 + 1) - (a * a - 1) / 4 + 1;
    }
  }
  return -1;  // unreachable
}

bool mu_bound_check(const DegreeTriple& degrees, const MonomialIdeal& J) {
  return static_cast<long long>(J.generator_count()) <=
         static_cast<long long>(degrees.d1()) * (degrees.d2() + 1) + 1;
}

}  // namespace gin3
