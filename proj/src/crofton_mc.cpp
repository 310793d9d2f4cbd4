#include "crofton/crofton_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace crofton {

namespace {

constexpr std::int64_t kChunkSize = 1 << 16;

// Finalizer of splitmix64; decorrelates per-chunk substreams.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Signed distances of the vertices to the line; the intersection count is
// the number of strict sign changes plus one per maximal run of on-line
// vertices (a run is a shared vertex or a sub-chain lying in the line).
int count_hits(const std::vector<double>& d) {
  int hits = 0;
  double last_nonzero = 0.0;
  bool in_zero_run = false;
  for (const double v : d) {
    if (v == 0.0) {
      if (!in_zero_run) ++hits;
      in_zero_run = true;
      continue;
    }
    if (last_nonzero != 0.0 && !in_zero_run &&
        ((last_nonzero > 0.0) != (v > 0.0)))
      ++hits;
    last_nonzero = v;
    in_zero_run = false;
  }
  return hits;
}

struct ChunkStats {
  std::int64_t hitting = 0;
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  std::map<int, std::int64_t> histogram;
};

struct SamplingDisc {
  double cx, cy;  // bounding-box midpoint of the vertices
  double radius;  // max vertex distance from the center, plus padding
};

SamplingDisc bounding_disc(const Polyline& curve) {
  const auto& v = curve.vertices();
  double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const Point2& p : v) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double cx = (xmin + xmax) / 2.0, cy = (ymin + ymax) / 2.0;
  double r = 0.0;
  for (const Point2& p : v) r = std::max(r, std::hypot(p.x - cx, p.y - cy));
  return {cx, cy, r + 1e-9 * (2.0 * r)};
}

ChunkStats run_chunk(const Polyline& curve, const SamplingDisc& disc,
                     std::int64_t n, std::uint64_t seed,
                     std::int64_t chunk_index) {
  std::mt19937_64 rng(mix64(seed ^ mix64(static_cast<std::uint64_t>(chunk_index))));
  const auto& verts = curve.vertices();
  std::vector<double> d(verts.size());
  ChunkStats stats;
  for (std::int64_t i = 0; i < n; ++i) {
    const double theta = std::numbers::pi * uniform01(rng);
    const double offset = (2.0 * uniform01(rng) - 1.0) * disc.radius;
    const double ct = std::cos(theta), st = std::sin(theta);
    for (std::size_t k = 0; k < verts.size(); ++k)
      d[k] = (verts[k].x - disc.cx) * ct + (verts[k].y - disc.cy) * st - offset;
    const int hits = count_hits(d);
    if (hits == 0) continue;  // line meets the disc but misses the curve
    ++stats.hitting;
    stats.sum += hits;
    stats.sum_sq += static_cast<std::int64_t>(hits) * hits;
    ++stats.histogram[hits];
  }
  return stats;
}

}  // namespace

int intersect_count(const LineParam& line, const Polyline& curve) {
  const double ct = std::cos(line.theta), st = std::sin(line.theta);
  const auto& verts = curve.vertices();
  std::vector<double> d(verts.size());
  for (std::size_t k = 0; k < verts.size(); ++k)
    d[k] = verts[k].x * ct + verts[k].y * st - line.rho;
  return count_hits(d);
}

McEstimate estimate_crofton(const Polyline& curve, std::int64_t n_samples,
                            std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("estimate_crofton: need n_samples >= 1");
  const SamplingDisc disc = bounding_disc(curve);

  const std::int64_t n_chunks = (n_samples + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkStats> partials(static_cast<std::size_t>(n_chunks));
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(n_chunks));
  std::vector<std::future<void>> futures;
  std::atomic<std::int64_t> next_chunk{0};
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&] {
      for (std::int64_t c; (c = next_chunk.fetch_add(1)) < n_chunks;) {
        const std::int64_t lo = c * kChunkSize;
        const std::int64_t n = std::min(kChunkSize, n_samples - lo);
        partials[static_cast<std::size_t>(c)] =
            run_chunk(curve, disc, n, seed, c);
      }
    }));
  }
  for (auto& f : futures) f.get();

  // Merge in chunk order; all accumulators are integers, so the result is
  // bit-identical for any execution schedule.
  McEstimate est;
  std::int64_t sum = 0, sum_sq = 0;
  for (const ChunkStats& c : partials) {
    est.n_lines_hitting += c.hitting;
    sum += c.sum;
    sum_sq += c.sum_sq;
    for (const auto& [hits, count] : c.histogram)
      est.hit_histogram[hits] += count;
  }
  est.n_lines_sampled = n_samples;
  est.domain_measure = std::numbers::pi * 2.0 * disc.radius;
  if (est.n_lines_hitting > 0) {
    const double n = static_cast<double>(est.n_lines_hitting);
    est.mean_hits = static_cast<double>(sum) / n;
    if (est.n_lines_hitting > 1) {
      const double var =
          (static_cast<double>(sum_sq) - static_cast<double>(sum) * sum / n) /
          (n - 1.0);
      est.std_error = std::sqrt(std::max(0.0, var) / n);
    }
  }
  return est;
}

std::map<int, double> empirical_pn(const McEstimate& estimate) {
  if (estimate.n_lines_hitting <= 0)
    throw std::invalid_argument("empirical_pn: estimate has no hitting lines");
  std::map<int, double> pn;
  for (const auto& [hits, count] : estimate.hit_histogram)
    pn[hits] = static_cast<double>(count) /
               static_cast<double>(estimate.n_lines_hitting);
  return pn;
}

}  // namespace crofton
