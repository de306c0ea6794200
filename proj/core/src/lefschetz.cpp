#include "gin3/lefschetz.hpp"

#include <stdexcept>

namespace gin3 {

namespace {

MapVerdict classify(long long rank, long long source, long long target) {
  const bool inj = rank == source;
  const bool surj = rank == target;
  if (inj && surj) return MapVerdict::both;
  if (inj) return MapVerdict::injective;
  if (surj) return MapVerdict::surjective;
  return MapVerdict::neither;
}

// Quotient-basis membership bitmaps per degree, indexed by revlex rank.
struct QuotientBasis {
  std::vector<std::vector<char>> in_ideal;  // [k][rank]

  QuotientBasis(const MonomialIdeal& J, int k_max) {
    in_ideal.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
      std::vector<char> row(static_cast<std::size_t>(slice_size(k)), 0);
      for (int r = 0; r < static_cast<int>(row.size()); ++r)
        row[static_cast<std::size_t>(r)] = J.contains(monomial_at_rank(k, r)) ? 1 : 0;
      in_ideal.push_back(std::move(row));
    }
  }

  bool member(const Monomial& m) const {
    return in_ideal[static_cast<std::size_t>(m.degree())]
                   [static_cast<std::size_t>(revlex_rank(m))] != 0;
  }

  long long dim(int k) const {
    if (k < 0 || k >= static_cast<int>(in_ideal.size())) return 0;
    long long n = 0;
    for (char c : in_ideal[static_cast<std::size_t>(k)])
      if (!c) ++n;
    return n;
  }

  MapRankReport map_rank(int t, int b) const {
    MapRankReport rep;
    rep.t = t;
    rep.b = b;
    rep.source_dim = dim(t);
    rep.target_dim = dim(t + b);
    const auto& src = in_ideal[static_cast<std::size_t>(t)];
    for (int r = 0; r < static_cast<int>(src.size()); ++r) {
      if (src[static_cast<std::size_t>(r)]) continue;
      Monomial m = monomial_at_rank(t, r);
      m.e[2] += b;
      if (!member(m)) ++rep.rank;
    }
    rep.verdict = classify(rep.rank, rep.source_dim, rep.target_dim);
    return rep;
  }
};

int socle_degree_of(const MonomialIdeal& J) {
  const auto cap = J.artinian_cap();
  if (!cap)
    throw std::invalid_argument(
        "Lefschetz check requires an artinian quotient (a pure power of every variable)");
  int socle = -1;
  for (int k = 0; k <= *cap; ++k) {
    long long outside = 0;
    for (const Monomial& m : monomials_of_degree(k).members)
      if (!J.contains(m)) ++outside;
    if (outside > 0) socle = k;
  }
  return socle;  // -1 means J = (1)
}

LefschetzResult scan(const MonomialIdeal& J, int b_max) {
  const int socle = socle_degree_of(J);
  QuotientBasis basis(J, socle + 1);
  for (int b = 1; b <= (b_max > 0 ? b_max : socle + 1); ++b) {
    for (int t = 0; t + b <= socle + 1; ++t) {
      const MapRankReport rep = basis.map_rank(t, b);
      if (!rep.semiregular()) return LefschetzResult{false, std::make_pair(t, b)};
    }
  }
  return LefschetzResult{true, std::nullopt};
}

}  // namespace

MapRankReport x3_power_map_rank(const MonomialIdeal& J, int t, int b) {
  if (t < 0 || b < 1) throw std::invalid_argument("x3_power_map_rank: need t >= 0, b >= 1");
  QuotientBasis basis(J, t + b);
  return basis.map_rank(t, b);
}

LefschetzResult is_strong_lefschetz_x3(const MonomialIdeal& J) { return scan(J, 0); }

LefschetzResult is_weak_lefschetz_x3(const MonomialIdeal& J) { return scan(J, 1); }

std::vector<MapRankReport> lefschetz_report(const MonomialIdeal& J) {
  const int socle = socle_degree_of(J);
  QuotientBasis basis(J, socle + 1);
  std::vector<MapRankReport> reports;
  for (int b = 1; b <= socle + 1; ++b)
    for (int t = 0; t + b <= socle + 1; ++t) reports.push_back(basis.map_rank(t, b));
  return reports;
}

}  // namespace gin3
