#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kakeya/sticky.hpp"

namespace kakeya {

/// Sheared parallelogram with corners (0,t), (0,t+w), (2,t+2s), (2,t+w+2s).
/// Cross-section at abscissa x in [0,2] is the half-open [t + x s, t + x s + w).
struct Parallelogram {
  Rational t;
  Rational width;
  Rational slope;
};

/// K_sigma: one member per base cell t = k/2^h, width 2^-h, slope the leaf
/// slope of sigma(t).
struct ParallelogramFamily {
  std::uint32_t depth = 0;
  std::vector<Parallelogram> members;  // indexed by base cell k
};

ParallelogramFamily build_family(const StickyMap& sigma);

/// Lebesgue measure of the union of cross-sections at x.
Rational cross_section(const ParallelogramFamily& family, const Rational& x);

enum class AreaMethod { exact_sweep, sampled };

struct SweepOptions {
  std::int64_t max_events = 4'000'000;  // exact sweep budget
  int sampled_points = 4096;            // abscissas per strip for quadrature
};

struct StripMeasure {
  int strip = 0;  // j, for X_j = [2^-j, 2^-j+1] x R
  AreaMethod method = AreaMethod::exact_sweep;
  Rational exact;          // valid when method == exact_sweep
  double value = 0;        // always set
  std::int64_t events = 0; // exact: sweep events; sampled: abscissas
};

/// |K_sigma ∩ X_j|. The exact sweep integrates the piecewise-linear
/// cross-section measure between endpoint-crossing events; the sampled
/// method is midpoint quadrature on a uniform grid.
StripMeasure strip_area(const ParallelogramFamily& family, int j, AreaMethod method,
                        const SweepOptions& opt = {});

/// Sum over ordered pairs (t1,t2), diagonal included, of
/// |P_{t1,j} ∩ P_{t2,j}|; the diagonal contributes exactly 2^-j.
StripMeasure overlap_sum(const ParallelogramFamily& family, int j,
                         AreaMethod method = AreaMethod::exact_sweep,
                         const SweepOptions& opt = {});

/// #Gamma^j(w): ordered pairs of depth-h vertices with common ancestor
/// exactly w and 2^j |t1 - t2| <= |I_w|.
std::int64_t gamma_count(const DyadicVertex& w, int j, std::uint32_t h);

/// #Gamma^j_l(w): the dyadic band |I_w|/2 < 2^{j+l} |t1 - t2| <= |I_w|,
/// so that the bands over l >= 0 partition Gamma^j(w) off the diagonal.
std::int64_t gamma_band_count(const DyadicVertex& w, int j, int l, std::uint32_t h);

/// alpha^2 K^2 / (16 M): the union lower bound for K sets of equal measure
/// alpha with pairwise intersection sum at most M.
Rational union_lower_bound(const Rational& alpha, std::int64_t k, const Rational& m);

/// Deterministic SVG of the family with strip guides X_0..X_{strips-1}.
/// Slopes are embedded as data comments, one per member.
std::string render_family_svg(const ParallelogramFamily& family, int strips = 4);
std::string render_tree_svg(const DirTree& tree);

}  // namespace kakeya
