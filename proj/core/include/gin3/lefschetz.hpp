#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gin3/ideal.hpp"

namespace gin3 {

enum class MapVerdict { injective, surjective, both, neither };

/// Rank data of the multiplication map (S/J)_t --x3^b--> (S/J)_{t+b}.
struct MapRankReport {
  int t = 0;
  int b = 1;
  long long source_dim = 0;
  long long target_dim = 0;
  long long rank = 0;
  MapVerdict verdict = MapVerdict::both;

  bool semiregular() const { return verdict != MapVerdict::neither; }
};

/// For a monomial ideal the map sends each basis monomial m of degree t to
/// m*x3^b, which is either a basis monomial of degree t+b or zero in the
/// quotient; distinct nonzero images stay distinct, so the rank is the
/// number of basis monomials whose image survives.
MapRankReport x3_power_map_rank(const MonomialIdeal& J, int t, int b);

struct LefschetzResult {
  bool holds = false;
  /// First (t,b) with a neither-injective-nor-surjective map, when !holds.
  std::optional<std::pair<int, int>> first_failure;

  explicit operator bool() const { return holds; }
};

/// x3 is a strong Lefschetz element: every power map within the socle
/// window is injective or surjective. Beyond the window targets vanish and
/// every map is trivially surjective. Requires an artinian quotient
/// (throws std::invalid_argument otherwise).
LefschetzResult is_strong_lefschetz_x3(const MonomialIdeal& J);

/// The b=1 restriction (weak Lefschetz).
LefschetzResult is_weak_lefschetz_x3(const MonomialIdeal& J);

/// All power-map reports with t+b <= socle degree + 1.
std::vector<MapRankReport> lefschetz_report(const MonomialIdeal& J);

}  // namespace gin3
