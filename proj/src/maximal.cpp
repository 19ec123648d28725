#include "kakeya/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kakeya {

RasterImage::RasterImage(int m) : m_(m) {
  if (m < 1 || m > 14) throw std::invalid_argument("raster resolution out of range");
  cols_ = 1 << m;
  rows_ = 3 << m;
  px_ = 2.0 / cols_;
  py_ = 3.0 / rows_;
  data_.assign(static_cast<std::size_t>(cols_) * rows_, 0.0);
}

double RasterImage::sample(double x, double y) const {
  int c = static_cast<int>(std::floor(x / px_));
  int r = static_cast<int>(std::floor(y / py_));
  c = std::clamp(c, 0, cols_ - 1);
  r = std::clamp(r, 0, rows_ - 1);
  return at(r, c);
}

DirectionSet DirectionSet::from_tree(const DirTree& tree) {
  std::vector<Rational> slopes;
  slopes.reserve(tree.leaf_count());
  for (std::uint64_t p : tree.leaves()) slopes.push_back(leaf_slope({tree.depth(), p}));
  return from_slopes(std::move(slopes));
}

DirectionSet DirectionSet::from_slopes(std::vector<Rational> slopes) {
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
  for (const auto& s : slopes)
    if (s < 0 || s > 1) throw std::invalid_argument("slopes must lie in [0,1]");
  return {std::move(slopes)};
}

namespace {

struct Window {
  int n1, n2;  // inclusive sample index range
};

struct DirTemplate {
  double ux, uy;               // unit direction
  std::vector<Window> windows;
  int nmin = 0, nmax = 0;
};

std::vector<DirTemplate> build_templates(const RasterImage& f, const DirectionSet& dirs,
                                         const std::vector<Rational>& half_lengths,
                                         const TransformOptions& opt) {
  if (dirs.slopes.empty()) throw std::invalid_argument("direction set must be nonempty");
  if (half_lengths.empty()) throw std::invalid_argument("length menu must be nonempty");
  for (const auto& l : half_lengths)
    if (l <= 0 || l > 2) throw std::invalid_argument("half-lengths must lie in (0, 2]");
  if (opt.anchors.empty()) throw std::invalid_argument("anchor menu must be nonempty");

  double step = f.pixel_height() / 2;
  std::vector<DirTemplate> out;
  out.reserve(dirs.slopes.size());
  for (const auto& slope : dirs.slopes) {
    DirTemplate dt;
    double th = to_double(slope);
    double norm = std::sqrt(1 + th * th);
    dt.ux = 1 / norm;
    dt.uy = th / norm;
    for (const auto& lr : half_lengths) {
      double l = to_double(lr);
      for (const auto& ar : opt.anchors) {
        double a = to_double(ar);
        if (a < -1 || a > 1) throw std::invalid_argument("anchors must lie in [-1, 1]");
        // pixel sits at offset a*l along the segment [(-1-a)l, (1-a)l]
        int n1 = static_cast<int>(std::ceil((-1 - a) * l / step - 1e-12));
        int n2 = static_cast<int>(std::floor((1 - a) * l / step + 1e-12));
        if (n2 < n1) continue;
        dt.windows.push_back({n1, n2});
      }
    }
    std::sort(dt.windows.begin(), dt.windows.end(),
              [](const Window& a, const Window& b) { return std::tie(a.n1, a.n2) < std::tie(b.n1, b.n2); });
    dt.windows.erase(std::unique(dt.windows.begin(), dt.windows.end(),
                                 [](const Window& a, const Window& b) {
                                   return a.n1 == b.n1 && a.n2 == b.n2;
                                 }),
                     dt.windows.end());
    if (dt.windows.empty()) throw std::invalid_argument("no valid sample window");
    dt.nmin = dt.windows[0].n1;
    dt.nmax = 0;
    for (const auto& w : dt.windows) {
      dt.nmin = std::min(dt.nmin, w.n1);
      dt.nmax = std::max(dt.nmax, w.n2);
    }
    out.push_back(std::move(dt));
  }
  return out;
}

/// Max over this direction's windows of the sampled segment average at one
/// pixel; cum is scratch of size nmax-nmin+2.
double best_average(const RasterImage& f, const DirTemplate& dt, double x0, double y0, double step,
                    std::vector<double>& cum) {
  int span = dt.nmax - dt.nmin + 1;
  cum[0] = 0;
  for (int i = 0; i < span; ++i) {
    int n = dt.nmin + i;
    cum[static_cast<std::size_t>(i) + 1] =
        cum[static_cast<std::size_t>(i)] + f.sample(x0 + n * step * dt.ux, y0 + n * step * dt.uy);
  }
  double best = 0;
  for (const auto& w : dt.windows) {
    double sum = cum[static_cast<std::size_t>(w.n2 - dt.nmin) + 1] -
                 cum[static_cast<std::size_t>(w.n1 - dt.nmin)];
    best = std::max(best, sum / (w.n2 - w.n1 + 1));
  }
  return best;
}

}  // namespace

RasterImage maximal_transform(const RasterImage& f, const DirectionSet& dirs,
                              const std::vector<Rational>& half_lengths,
                              const TransformOptions& opt) {
  auto templates = build_templates(f, dirs, half_lengths, opt);
  double step = f.pixel_height() / 2;
  RasterImage out(f.m());
  std::vector<double> cum;
  for (const auto& dt : templates) {
    cum.assign(static_cast<std::size_t>(dt.nmax - dt.nmin) + 2, 0.0);
    for (int r = 0; r < f.rows(); ++r) {
      double y0 = f.row_center_y(r);
      for (int c = 0; c < f.cols(); ++c) {
        double v = best_average(f, dt, f.col_center_x(c), y0, step, cum);
        if (v > out.at(r, c)) out.at(r, c) = v;
      }
    }
  }
  return out;
}

NormBound norm_lower_bound(const RasterImage& e, const RasterImage& estar, const DirectionSet& dirs,
                           double p, const std::vector<Rational>& half_lengths,
                           const TransformOptions& opt, const DirectionHint& hint) {
  if (e.m() != estar.m()) throw std::invalid_argument("images must share a resolution");
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  auto templates = build_templates(e, dirs, half_lengths, opt);
  double step = e.pixel_height() / 2;

  NormBound out;
  for (double v : e.data())
    if (v > 0.5) ++out.e_pixels;
  if (out.e_pixels == 0) throw std::invalid_argument("E must be nonempty");

  std::vector<double> cum;
  std::vector<int> all(templates.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

  for (int r = 0; r < estar.rows(); ++r) {
    double y0 = estar.row_center_y(r);
    for (int c = 0; c < estar.cols(); ++c) {
      if (estar.at(r, c) <= 0.5) continue;
      ++out.estar_pixels;
      double x0 = estar.col_center_x(c);
      const std::vector<int>& candidates = hint ? hint(r, c) : all;
      std::vector<int> local;
      const std::vector<int>* cand = &candidates;
      if (hint && candidates.empty()) continue;  // nothing to certify with
      for (int di : *cand) {
        const auto& dt = templates[static_cast<std::size_t>(di)];
        cum.assign(static_cast<std::size_t>(dt.nmax - dt.nmin) + 2, 0.0);
        if (best_average(e, dt, x0, y0, step, cum) > 0.5) {
          ++out.estar_kept;
          break;
        }
      }
      (void)local;
    }
  }
  double ratio = static_cast<double>(out.estar_kept) / static_cast<double>(out.e_pixels);
  out.bound = 0.5 * std::pow(ratio, 1.0 / p);
  return out;
}

NormStatistic empirical_norm(const DirectionSet& dirs, double p,
                             const std::vector<RasterImage>& trials,
                             const std::vector<Rational>& half_lengths,
                             const TransformOptions& opt) {
  if (trials.empty()) throw std::invalid_argument("trial set must be nonempty");
  NormStatistic out;
  for (const auto& f : trials) {
    double nf = lp_norm(f, p);
    if (nf == 0) throw std::invalid_argument("trial image must be nonzero");
    RasterImage mf = maximal_transform(f, dirs, half_lengths, opt);
    double ratio = lp_norm(mf, p) / nf;
    out.ratios.push_back(ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

double lp_norm(const RasterImage& f, double p) {
  double acc = 0;
  for (double v : f.data()) acc += std::pow(std::fabs(v), p);
  return std::pow(acc * f.pixel_area(), 1.0 / p);
}

RasterImage rasterize_family(const ParallelogramFamily& family, int m, const Rational& x_lo,
                             const Rational& x_hi) {
  RasterImage img(m);
  double lo = to_double(x_lo), hi = to_double(x_hi);
  for (int c = 0; c < img.cols(); ++c) {
    double x = img.col_center_x(c);
    if (x < lo || x > hi) continue;
    for (const auto& member : family.members) {
      // dyadic data keeps these exact in double at moderate depths
      double start = to_double(member.t) + x * to_double(member.slope);
      double end = start + to_double(member.width);
      int r0 = static_cast<int>(std::ceil(start / img.pixel_height() - 0.5));
      int r1 = static_cast<int>(std::floor(end / img.pixel_height() - 0.5));
      if ((r1 + 0.5) * img.pixel_height() >= end) --r1;  // half-open on the right
      r0 = std::max(r0, 0);
      r1 = std::min(r1, img.rows() - 1);
      for (int r = r0; r <= r1; ++r) img.at(r, c) = 1.0;
    }
  }
  return img;
}

void write_image(const RasterImage& img, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open image file for writing: " + path);
  os.write("KIMG", 4);
  std::int32_t hdr[3] = {img.m(), img.rows(), img.cols()};
  os.write(reinterpret_cast<const char*>(hdr), sizeof hdr);
  os.write(reinterpret_cast<const char*>(img.data().data()),
           static_cast<std::streamsize>(img.data().size() * sizeof(double)));
}

RasterImage read_image(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open image file: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "KIMG", 4) != 0) throw std::runtime_error("bad image magic");
  std::int32_t hdr[3];
  is.read(reinterpret_cast<char*>(hdr), sizeof hdr);
  RasterImage img(hdr[0]);
  if (hdr[1] != img.rows() || hdr[2] != img.cols()) throw std::runtime_error("bad image header");
  is.read(reinterpret_cast<char*>(img.data().data()),
          static_cast<std::streamsize>(img.data().size() * sizeof(double)));
  if (!is) throw std::runtime_error("truncated image file");
  return img;
}

std::string image_csv(const RasterImage& img) {
  std::ostringstream os;
  os << "row,col,value\n";
  char buf[64];
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", r, c, img.at(r, c));
      os << buf;
    }
  return os.str();
}

}  // namespace kakeya
