#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cantor/bitword.hpp"
#include "cantor/fat_point.hpp"
#include "cantor/point.hpp"
#include "cantor/prefix_map.hpp"

namespace cantor {

using Rng = std::mt19937_64;

/// Deterministic seeded generators for property suites.
namespace sampling {

BitWord random_word(Rng& rng, std::size_t max_level);
BitWord random_word_exact(Rng& rng, std::size_t level);

/// Eventually periodic point with bounded preperiod/period lengths.
Point random_point(Rng& rng, std::size_t max_pre = 6, std::size_t max_per = 4);

Point random_dyadic(Rng& rng, std::size_t max_pre = 6);

/// A point inside C(w).
Point random_point_in(Rng& rng, const BitWord& w, std::size_t max_pre = 4,
                      std::size_t max_per = 3);

/// Complete prefix code grown by random leaf splits.
std::vector<BitWord> random_code(Rng& rng, std::size_t splits);

/// Random element of V with about `splits` pieces.
PrefixMap random_prefix_map(Rng& rng, std::size_t splits);

/// Random element fixing (0): the all-zeros leaf maps to the all-zeros leaf.
PrefixMap random_stabilizer_map(Rng& rng, std::size_t splits);

/// Random element fixing C(u) pointwise, built from localized random
/// elements on the complement cylinders.
PrefixMap random_map_fixing_cylinder(Rng& rng, const BitWord& u, std::size_t splits);

/// Random fat point: a prepend tissue pushed through a random element.
FatPoint random_fat_point(Rng& rng);

/// Pairwise distinct dyadic points.
std::vector<Point> random_distinct_dyadic(Rng& rng, std::size_t count,
                                          std::size_t max_pre = 6);

/// Fat tuple with pairwise distinct cores.
std::vector<FatPoint> random_fat_tuple(Rng& rng, std::size_t count);

/// All canonical points with preperiod+period lengths up to the bound.
std::vector<Point> enumerate_points(std::size_t max_bits);

}  // namespace sampling
}  // namespace cantor
