#include "kakeya/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kakeya {

ParallelogramFamily build_family(const StickyMap& sigma) {
  std::uint32_t h = sigma.depth();
  ParallelogramFamily fam;
  fam.depth = h;
  fam.members.reserve(std::size_t{1} << h);
  Rational w = pow2(-static_cast<int>(h));
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << h); ++k) {
    DyadicVertex leaf{h, sigma.leaf_images()[k]};
    fam.members.push_back({dyadic(static_cast<std::int64_t>(k), h), w, leaf_slope(leaf)});
  }
  return fam;
}

Rational cross_section(const ParallelogramFamily& family, const Rational& x) {
  if (x < 0 || x > 2) throw std::invalid_argument("abscissa outside [0,2]");
  if (family.members.empty()) return 0;
  std::vector<Rational> starts;
  starts.reserve(family.members.size());
  for (const auto& p : family.members) starts.push_back(p.t + x * p.slope);
  std::sort(starts.begin(), starts.end());
  Rational w = family.members[0].width;
  Rational measure = w;
  Rational cover_end = starts[0] + w;
  for (std::size_t i = 1; i < starts.size(); ++i) {
    measure += starts[i] > cover_end ? w : starts[i] + w - cover_end;
    cover_end = starts[i] + w;
  }
  return measure;
}

namespace {

void check_strip(int j) {
  if (j < 0) throw std::invalid_argument("strip index must be >= 0");
  if (j > 60) throw std::invalid_argument("strip index too large");
}

double cross_section_sorted(std::vector<double>& starts, double w) {
  // near-sorted input: insertion sort then merge
  for (std::size_t i = 1; i < starts.size(); ++i) {
    double v = starts[i];
    std::size_t k = i;
    while (k > 0 && starts[k - 1] > v) {
      starts[k] = starts[k - 1];
      --k;
    }
    starts[k] = v;
  }
  double measure = w;
  double cover_end = starts[0] + w;
  for (std::size_t i = 1; i < starts.size(); ++i) {
    measure += starts[i] > cover_end ? w : starts[i] + w - cover_end;
    cover_end = starts[i] + w;
  }
  return measure;
}

}  // namespace

StripMeasure strip_area(const ParallelogramFamily& family, int j, AreaMethod method,
                        const SweepOptions& opt) {
  check_strip(j);
  StripMeasure out;
  out.strip = j;
  out.method = method;
  if (family.members.empty()) return out;
  const Rational a = pow2(-j), b = pow2(-j + 1);
  const std::size_t n = family.members.size();

  if (method == AreaMethod::exact_sweep) {
    std::int64_t budget = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2 * 3;
    if (budget > opt.max_events)
      throw std::invalid_argument("exact sweep event count exceeds the configured budget");
    std::vector<Rational> xs{a, b};
    const Rational w = family.members[0].width;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) {
        const auto &p = family.members[i], &q = family.members[k];
        Rational ds = p.slope - q.slope;
        if (ds == 0) continue;
        for (int d = -1; d <= 1; ++d) {
          Rational x = (q.t - p.t + d * w) / ds;
          if (x > a && x < b) xs.push_back(x);
        }
      }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Rational total = 0;
    Rational prev_m = cross_section(family, xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      Rational m = cross_section(family, xs[i]);
      total += (prev_m + m) / 2 * (xs[i] - xs[i - 1]);
      prev_m = m;
    }
    out.exact = total;
    out.value = to_double(total);
    out.events = static_cast<std::int64_t>(xs.size());
    return out;
  }

  const int pts = opt.sampled_points;
  const double ad = to_double(a), bd = to_double(b);
  const double dx = (bd - ad) / pts;
  const double w = to_double(family.members[0].width);
  std::vector<double> t(n), s(n), starts(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = to_double(family.members[i].t);
    s[i] = to_double(family.members[i].slope);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  double total = 0;
  for (int p = 0; p < pts; ++p) {
    double x = ad + (p + 0.5) * dx;
    for (std::size_t i = 0; i < n; ++i) starts[i] = t[order[i]] + x * s[order[i]];
    // keep the permutation near-sorted across steps
    for (std::size_t i = 1; i < n; ++i) {
      double v = starts[i];
      std::size_t oi = order[i];
      std::size_t k = i;
      while (k > 0 && starts[k - 1] > v) {
        starts[k] = starts[k - 1];
        order[k] = order[k - 1];
        --k;
      }
      starts[k] = v;
      order[k] = oi;
    }
    double measure = w;
    double cover_end = starts[0] + w;
    for (std::size_t i = 1; i < n; ++i) {
      measure += starts[i] > cover_end ? w : starts[i] + w - cover_end;
      cover_end = starts[i] + w;
    }
    total += measure * dx;
  }
  out.value = total;
  out.events = pts;
  return out;
}

namespace {

/// Integral over [a,b] of max(0, w - |dt + x ds|).
Rational pair_overlap_exact(const Rational& dt, const Rational& ds, const Rational& w,
                            const Rational& a, const Rational& b) {
  auto lambda = [&](const Rational& x) {
    Rational d = dt + x * ds;
    Rational v = w - abs(d);
    return v > 0 ? v : Rational(0);
  };
  if (ds == 0) return lambda(a) * (b - a);
  std::vector<Rational> xs{a, b};
  for (int k = -1; k <= 1; ++k) {
    Rational x = (k * w - dt) / ds;
    if (x > a && x < b) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  Rational total = 0;
  for (std::size_t i = 1; i < xs.size(); ++i)
    total += (lambda(xs[i - 1]) + lambda(xs[i])) / 2 * (xs[i] - xs[i - 1]);
  return total;
}

double pair_overlap_double(double dt, double ds, double w, double a, double b) {
  auto lambda = [&](double x) { return std::max(0.0, w - std::fabs(dt + x * ds)); };
  if (ds == 0) return lambda(a) * (b - a);
  double xs[5] = {a, b, 0, 0, 0};
  int cnt = 2;
  for (int k = -1; k <= 1; ++k) {
    double x = (k * w - dt) / ds;
    if (x > a && x < b) xs[cnt++] = x;
  }
  std::sort(xs, xs + cnt);
  double total = 0;
  for (int i = 1; i < cnt; ++i) total += (lambda(xs[i - 1]) + lambda(xs[i])) * 0.5 * (xs[i] - xs[i - 1]);
  return total;
}

}  // namespace

StripMeasure overlap_sum(const ParallelogramFamily& family, int j, AreaMethod method,
                         const SweepOptions& opt) {
  check_strip(j);
  StripMeasure out;
  out.strip = j;
  out.method = method;
  if (family.members.empty()) return out;
  const std::size_t n = family.members.size();
  out.events = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;

  if (method == AreaMethod::exact_sweep) {
    if (out.events * 3 > opt.max_events)
      throw std::invalid_argument("exact overlap event count exceeds the configured budget");
    const Rational a = pow2(-j), b = pow2(-j + 1);
    const Rational w = family.members[0].width;
    Rational total = pow2(-j);  // diagonal: 2^h terms of w * strip width
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k) {
        Rational dt = family.members[i].t - family.members[k].t;
        Rational ds = family.members[i].slope - family.members[k].slope;
        total += 2 * pair_overlap_exact(dt, ds, w, a, b);
      }
    out.exact = total;
    out.value = to_double(total);
    return out;
  }

  const double a = to_double(pow2(-j)), b = to_double(pow2(-j + 1));
  const double w = to_double(family.members[0].width);
  std::vector<double> t(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = to_double(family.members[i].t);
    s[i] = to_double(family.members[i].slope);
  }
  double total = std::ldexp(1.0, -j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      total += 2 * pair_overlap_double(t[i] - t[k], s[i] - s[k], w, a, b);
  out.value = total;
  return out;
}

namespace {

/// Sum over d = 1..min(dmax, m-1) of min(d, m - d); m a power of two.
std::int64_t sum_min_band(std::int64_t dmax, std::int64_t m) {
  auto tri = [](std::int64_t k) { return k * (k + 1) / 2; };
  std::int64_t d = std::min(dmax, m - 1);
  if (d <= 0) return 0;
  std::int64_t half = m / 2;
  if (d <= half) return tri(d);
  // full rising part up to half, then falling values m-d for d in (half, d]
  return tri(half) + (tri(half - 1) - tri(m - d - 1));
}

}  // namespace

std::int64_t gamma_count(const DyadicVertex& w, int j, std::uint32_t h) {
  if (w.height > h) throw std::invalid_argument("vertex below depth h");
  if (j < 0) throw std::invalid_argument("strip index must be >= 0");
  std::uint32_t q = h - w.height;
  if (q == 0) return 1;  // the diagonal pair (w, w)
  if (q > 31) throw std::invalid_argument("depth gap too large for pair counting");
  std::int64_t m = std::int64_t{1} << q;  // grid points inside I_w
  int e = static_cast<int>(h) - static_cast<int>(w.height) - j;
  std::int64_t dmax = e < 0 ? 0 : std::int64_t{1} << std::min(e, 62);
  return 2 * sum_min_band(dmax, m);
}

std::int64_t gamma_band_count(const DyadicVertex& w, int j, int l, std::uint32_t h) {
  if (w.height > h) throw std::invalid_argument("vertex below depth h");
  if (j < 0 || l < 0) throw std::invalid_argument("indices must be >= 0");
  std::uint32_t q = h - w.height;
  if (q == 0) return 0;  // bands exclude zero distance
  if (q > 31) throw std::invalid_argument("depth gap too large for pair counting");
  std::int64_t m = std::int64_t{1} << q;
  int e = static_cast<int>(h) - static_cast<int>(w.height) - j - l;
  std::int64_t upper = e < 0 ? 0 : std::int64_t{1} << std::min(e, 62);
  std::int64_t lower = e - 1 < 0 ? 0 : std::int64_t{1} << std::min(e - 1, 62);
  return 2 * (sum_min_band(upper, m) - sum_min_band(lower, m));
}

Rational union_lower_bound(const Rational& alpha, std::int64_t k, const Rational& m) {
  if (alpha <= 0) throw std::invalid_argument("set measure must be positive");
  if (k < 1) throw std::invalid_argument("need at least one set");
  if (m <= 0) throw std::invalid_argument("pairwise sum must be positive");
  return alpha * alpha * k * k / (16 * m);
}

std::string render_family_svg(const ParallelogramFamily& family, int strips) {
  const double sx = 400, sy = 200;  // px per unit
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * sx << "\" height=\"" << 3 * sy
     << "\" viewBox=\"0 0 " << 2 * sx << " " << 3 * sy << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto px = [&](const Rational& x) { return to_double(x) * sx; };
  auto py = [&](const Rational& y) { return (3 - to_double(y)) * sy; };
  for (std::size_t k = 0; k < family.members.size(); ++k) {
    const auto& p = family.members[k];
    os << "<!-- member " << k << " t=" << to_string(p.t) << " slope=" << to_string(p.slope)
       << " -->\n";
    os << "<path d=\"M " << px(Rational(0)) << ' ' << py(p.t) << " L " << px(Rational(0)) << ' '
       << py(p.t + p.width) << " L " << px(Rational(2)) << ' ' << py(p.t + p.width + 2 * p.slope)
       << " L " << px(Rational(2)) << ' ' << py(p.t + 2 * p.slope)
       << " Z\" fill=\"steelblue\" fill-opacity=\"0.25\" stroke=\"navy\" stroke-width=\"0.4\"/>\n";
  }
  for (int j = 0; j <= strips; ++j) {
    double x = px(pow2(-j));
    os << "<line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"" << 3 * sy
       << "\" stroke=\"crimson\" stroke-dasharray=\"4 3\" stroke-width=\"0.8\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_tree_svg(const DirTree& tree) {
  const double width = 640, rowh = 60, r = 3;
  std::uint32_t h = tree.depth();
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << rowh * (h + 1) << "\" viewBox=\"0 0 " << width << ' ' << rowh * (h + 1) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto xof = [&](const DyadicVertex& v) {
    return (static_cast<double>(v.path) + 0.5) / std::ldexp(1.0, static_cast<int>(v.height)) * width;
  };
  auto yof = [&](std::uint32_t k) { return rowh * k + rowh / 2; };
  for (std::uint32_t k = 1; k <= h; ++k)
    for (std::uint64_t p : tree.level(k)) {
      DyadicVertex v{k, p};
      os << "<line x1=\"" << xof(v.parent()) << "\" y1=\"" << yof(k - 1) << "\" x2=\"" << xof(v)
         << "\" y2=\"" << yof(k) << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    }
  for (std::uint32_t k = 0; k <= h; ++k)
    for (std::uint64_t p : tree.level(k)) {
      DyadicVertex v{k, p};
      os << "<circle cx=\"" << xof(v) << "\" cy=\"" << yof(k) << "\" r=\"" << r
         << "\" fill=\"navy\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kakeya
