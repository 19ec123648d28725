#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kakeya/geometry.hpp"
#include "kakeya/maximal.hpp"
#include "kakeya/percolation.hpp"

namespace kakeya::experiments {

/// Pruned target for scaling studies: "full" gives split N at depth N,
/// "cantor" the branch/keep-left pattern with split N at depth 2N.
std::shared_ptr<const PrunedTree> make_target(const std::string& kind, int n);

struct ScalingConfig {
  std::vector<int> split_values{4, 5, 6, 7, 8, 9, 10};
  int seeds_per_n = 64;
  std::uint64_t master_seed = 1;
  std::string target_kind = "full";
  int exact_depth_limit = 6;  // exact sweep when the family depth is <= this
  SweepOptions sweep;
  int probe_points = 0;  // exact cover probabilities recorded per N
};

struct ScalingRow {
  int n = 0;
  std::uint64_t seed = 0;
  std::uint32_t depth = 0;
  AreaMethod method = AreaMethod::exact_sweep;
  double area_base = 0;  // strip j = 0
  double area_ext = 0;   // strips j = 1..floor(log2 N)
  std::vector<StripMeasure> strips;
  std::vector<StripMeasure> overlaps;
  std::vector<double> probe_pr;
  std::string status = "ok";
};

struct ScalingResult {
  std::vector<ScalingRow> rows;
  std::string areas_csv;
  std::string scaling_csv;
};

ScalingResult run_kakeya_scaling(const ScalingConfig& config);

struct PercolationConfig {
  std::vector<int> bstar_heights{1, 2, 3, 4};
  std::vector<int> ray_heights{4};
  int random_trees = 0;
  int random_height = 8;
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
};

std::string run_percolation(const PercolationConfig& config);

struct CoverConfig {
  GeneratorSpec target = GeneratorSpec::full(3);
  std::vector<std::pair<Rational, Rational>> points;
  int random_points = 0;
  std::int64_t trials = 100000;
  std::uint64_t seed = 1;
};

std::string run_coverprob(const CoverConfig& config);

/// Deterministic rational probe point with x in (1,2], y in [0,3).
std::pair<Rational, Rational> probe_point(std::uint64_t seed, std::uint64_t index);

struct KakeyaBoundRow {
  int n = 0;
  std::uint64_t best_seed = 0;
  double base_area = 0;
  NormBound bound;
};

struct MaxopConfig {
  std::string mode = "kakeya-bound";  // or "lacunary-empirical"
  std::vector<int> split_values{4, 6, 8};
  int m = 9;
  double p = 2;
  int seed_sweep = 16;
  std::uint64_t master_seed = 1;
  // lacunary-empirical:
  std::vector<int> chain_orders{1, 2, 3};
  std::uint32_t chain_depth = 6;
  int trial_images = 20;
};

struct MaxopResult {
  std::vector<KakeyaBoundRow> bounds;      // kakeya-bound mode
  std::vector<std::pair<int, double>> stats;  // lacunary mode: (N, max ratio)
  std::string csv;
};

MaxopResult run_maxop(const MaxopConfig& config);

/// Kakeya pair at resolution m for one sampled family: E = K ∩ [1,2]xR,
/// E* = K ∩ [0,1]xR, with the per-pixel direction candidates used to
/// certify E* pixels.
struct KakeyaPair {
  ParallelogramFamily family;
  RasterImage e;
  RasterImage estar;
  DirectionSet dirs;
  DirectionHint hint;
};
KakeyaPair make_kakeya_pair(const StickyMap& sigma, int m);

/// Deterministic 20-image style trial suite for norm studies.
std::vector<RasterImage> trial_images(int m, int count, std::uint64_t seed,
                                      const DirectionSet& dirs);

std::vector<Rational> dyadic_length_menu(int finest);           // {2^0, ..., 2^-finest}
std::vector<Rational> eighth_length_menu();                     // {1/8, ..., 2}

}  // namespace kakeya::experiments
