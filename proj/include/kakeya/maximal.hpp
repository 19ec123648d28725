#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kakeya/geometry.hpp"

namespace kakeya {

/// Nonnegative samples on the 2^m x 3*2^m grid covering [0,2] x [0,3):
/// columns split [0,2] (width 2^{1-m}), rows split [0,3) (height 2^-m).
class RasterImage {
 public:
  explicit RasterImage(int m);

  int m() const { return m_; }
  int cols() const { return cols_; }
  int rows() const { return rows_; }

  double at(int row, int col) const { return data_[static_cast<std::size_t>(row) * cols_ + col]; }
  double& at(int row, int col) { return data_[static_cast<std::size_t>(row) * cols_ + col]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double col_center_x(int c) const { return (c + 0.5) * px_; }
  double row_center_y(int r) const { return (r + 0.5) * py_; }
  double pixel_width() const { return px_; }
  double pixel_height() const { return py_; }
  double pixel_area() const { return px_ * py_; }

  /// Nearest pixel value, coordinates clamped into the domain.
  double sample(double x, double y) const;

 private:
  int m_ = 0, cols_ = 0, rows_ = 0;
  double px_ = 0, py_ = 0;
  std::vector<double> data_;
};

struct DirectionSet {
  std::vector<Rational> slopes;  // sorted, deduplicated, in [0,1]

  static DirectionSet from_tree(const DirTree& tree);
  static DirectionSet from_slopes(std::vector<Rational> slopes);
};

struct TransformOptions {
  /// Position of the pixel along the segment, in units of the half-length:
  /// -1 = back end (segment extends forward), 0 = centered, 1 = front end.
  std::vector<Rational> anchors{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                                Rational(1)};
};

/// Directional maximal transform: per pixel, the max over directions,
/// half-lengths and anchors of the sampled segment average. Sample spacing
/// is half the pixel height.
RasterImage maximal_transform(const RasterImage& f, const DirectionSet& dirs,
                              const std::vector<Rational>& half_lengths,
                              const TransformOptions& opt = {});

struct NormBound {
  double bound = 0;  // (|E*_kept| / |E|)^(1/p) / 2
  std::int64_t e_pixels = 0;
  std::int64_t estar_pixels = 0;
  std::int64_t estar_kept = 0;
};

/// Candidate direction indices to try first for a pixel; when set, pixels
/// with no certified witness among the candidates are trimmed (conservative).
using DirectionHint = std::function<std::vector<int>(int row, int col)>;

/// Keeps the E* pixels whose maximal average of the E indicator exceeds 1/2
/// and returns (|kept| / |E|)^(1/p) / 2, a certified operator-norm lower
/// bound on L^p.
NormBound norm_lower_bound(const RasterImage& e, const RasterImage& estar,
                           const DirectionSet& dirs, double p,
                           const std::vector<Rational>& half_lengths,
                           const TransformOptions& opt = {}, const DirectionHint& hint = nullptr);

struct NormStatistic {
  double max_ratio = 0;
  std::vector<double> ratios;  // per trial
};

/// Max over trial images of ||Mf||_p / ||f||_p (a lower estimate of the
/// discrete operator norm).
NormStatistic empirical_norm(const DirectionSet& dirs, double p,
                             const std::vector<RasterImage>& trials,
                             const std::vector<Rational>& half_lengths,
                             const TransformOptions& opt = {});

double lp_norm(const RasterImage& f, double p);

/// Indicator of K_sigma ∩ [x_lo, x_hi] x R at pixel centers.
RasterImage rasterize_family(const ParallelogramFamily& family, int m, const Rational& x_lo,
                             const Rational& x_hi);

/// Flat binary image file: "KIMG" magic, int32 m/rows/cols, float64 samples.
void write_image(const RasterImage& img, const std::string& path);
RasterImage read_image(const std::string& path);
std::string image_csv(const RasterImage& img);

}  // namespace kakeya
