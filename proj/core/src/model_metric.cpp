#include "orbihyp/model_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbihyp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_in_disk(std::complex<double> z, const char* what) {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error(std::string(what) + ": point must lie in the open unit disk");
}

// Length weight ds/|dz| = sqrt(density).
double length_weight(const Multiplicity& order, std::complex<double> z) {
  const double r = std::max(std::abs(z), 1e-300);
  if (order.is_infinite()) return -1.0 / (r * std::log(r));
  const double n = static_cast<double>(order.value());
  const double root = std::pow(r, 1.0 / n);  // |z|^(1/n)
  return 2.0 * root / (n * r * (1.0 - root * root));
}

std::complex<double> principal_root(std::complex<double> z, std::int64_t n) {
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  const double arg = std::arg(z) / static_cast<double>(n);
  return std::polar(std::pow(r, 1.0 / static_cast<double>(n)), arg);
}

// Moebius transport of the right half plane model onto the disk.
std::complex<double> half_plane_to_disk(std::complex<double> zeta) {
  return (zeta - 1.0) / (zeta + 1.0);
}

// Open composite midpoint rule for the metric length of the straight
// segment [a, b]; never evaluates the density at the endpoints.
double segment_length(const Multiplicity& order, std::complex<double> a,
                      std::complex<double> b, int samples) {
  const std::complex<double> step = b - a;
  const double euclid = std::abs(step);
  if (euclid == 0.0) return 0.0;
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = (k + 0.5) / samples;
    sum += length_weight(order, a + t * step);
  }
  return sum * euclid / samples;
}

// Radial spoke from the origin; the substitution t = s^n flattens the
// cone-point singularity of the integrand.
double spoke_length(const Multiplicity& order, std::complex<double> tip, int samples) {
  const double n = static_cast<double>(order.value());
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double s = (k + 0.5) / samples;
    const double t = std::pow(s, n);
    const double jacobian = n * std::pow(s, n - 1.0);
    sum += length_weight(order, tip * t) * jacobian;
  }
  return sum * std::abs(tip) / samples;
}

struct PolarGrid {
  std::vector<double> ring_radius;  // ascending
  int sectors = 0;
  bool has_origin = false;

  int rings() const { return static_cast<int>(ring_radius.size()); }
  std::complex<double> point(int ring, int sector) const {
    return std::polar(ring_radius[ring], kTwoPi * sector / sectors);
  }
  int nearest_ring(double r) const {
    auto it = std::lower_bound(ring_radius.begin(), ring_radius.end(), r);
    if (it == ring_radius.end()) return rings() - 1;
    int idx = static_cast<int>(it - ring_radius.begin());
    if (idx > 0 && r - ring_radius[idx - 1] < ring_radius[idx] - r) --idx;
    return idx;
  }
  int nearest_sector(std::complex<double> z) const {
    double a = std::arg(z);
    if (a < 0) a += kTwoPi;
    int j = static_cast<int>(std::lround(a / kTwoPi * sectors)) % sectors;
    return j;
  }
};

// Primitive step directions within a 2-cell window.
constexpr int kOffsets[][2] = {
    {0, 1},  {0, -1}, {1, 0},  {-1, 0},  {1, 1},   {1, -1},  {-1, 1},  {-1, -1},
    {1, 2},  {1, -2}, {-1, 2}, {-1, -2}, {2, 1},   {2, -1},  {-2, 1},  {-2, -1},
};

struct DijkstraResult {
  std::vector<std::complex<double>> path;  // from source to target
};

DijkstraResult grid_shortest_path(const Multiplicity& order, const PolarGrid& grid,
                                  std::complex<double> p, std::complex<double> q) {
  const int rings = grid.rings();
  const int sectors = grid.sectors;
  const int grid_nodes = rings * sectors;
  const int origin_node = grid_nodes;
  const int p_node = grid_nodes + 1;
  const int q_node = grid_nodes + 2;
  const int total = grid_nodes + 3;

  auto node_point = [&](int id) -> std::complex<double> {
    if (id == p_node) return p;
    if (id == q_node) return q;
    if (id == origin_node) return {0.0, 0.0};
    return grid.point(id / sectors, id % sectors);
  };

  std::vector<float> dist(total, std::numeric_limits<float>::infinity());
  std::vector<int> prev(total, -1);
  using Entry = std::pair<float, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  auto relax = [&](int from, int to, double w) {
    const float cand = dist[from] + static_cast<float>(w);
    if (cand < dist[to]) {
      dist[to] = cand;
      prev[to] = from;
      heap.emplace(cand, to);
    }
  };

  auto connector_nodes = [&](std::complex<double> z) {
    std::vector<std::pair<int, double>> links;
    const int ring = grid.nearest_ring(std::abs(z));
    const int sector = grid.nearest_sector(z);
    for (int di = -3; di <= 3; ++di) {
      const int i = ring + di;
      if (i < 0 || i >= rings) continue;
      for (int dj = -3; dj <= 3; ++dj) {
        const int j = ((sector + dj) % sectors + sectors) % sectors;
        links.emplace_back(i * sectors + j,
                           segment_length(order, z, grid.point(i, j), 4));
      }
    }
    if (grid.has_origin) links.emplace_back(origin_node, spoke_length(order, z, 32));
    return links;
  };

  dist[p_node] = 0.0f;
  heap.emplace(0.0f, p_node);
  // Direct chord as a fallback upper bound.
  relax(p_node, q_node, segment_length(order, p, q, 64));
  for (const auto& [node, w] : connector_nodes(p)) relax(p_node, node, w);

  // Target connectors fire when their grid endpoint settles.
  std::vector<float> to_target(total, std::numeric_limits<float>::infinity());
  for (const auto& [node, w] : connector_nodes(q))
    to_target[node] = std::min(to_target[node], static_cast<float>(w));

  std::vector<char> done(total, 0);
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    if (u == q_node) break;
    if (u == p_node) continue;  // edges already seeded
    if (to_target[u] < std::numeric_limits<float>::infinity())
      relax(u, q_node, to_target[u]);
    if (u == origin_node) {
      for (int j = 0; j < sectors; ++j)
        for (int i = 0; i < std::min(2, rings); ++i)
          relax(origin_node, i * sectors + j,
                spoke_length(order, grid.point(i, j), 32));
      continue;
    }
    const int ri = u / sectors;
    const int sj = u % sectors;
    const std::complex<double> zu = grid.point(ri, sj);
    for (const auto& off : kOffsets) {
      const int i = ri + off[0];
      if (i < 0 || i >= rings) continue;
      const int j = ((sj + off[1]) % sectors + sectors) % sectors;
      relax(u, i * sectors + j, segment_length(order, zu, grid.point(i, j), 1));
    }
    if (grid.has_origin && ri < 2)
      relax(u, origin_node, spoke_length(order, zu, 32));
  }

  if (prev[q_node] < 0 && dist[q_node] == std::numeric_limits<float>::infinity())
    throw std::runtime_error("geodesic oracle: target unreachable on grid");

  DijkstraResult result;
  for (int at = q_node; at != -1; at = prev[at]) result.path.push_back(node_point(at));
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

// Resample a polyline to a fixed number of vertices, uniformly in
// (approximate) metric arc length.
std::vector<std::complex<double>> resample(const Multiplicity& order,
                                           const std::vector<std::complex<double>>& path,
                                           int vertices) {
  std::vector<double> cumulative(path.size(), 0.0);
  for (std::size_t i = 1; i < path.size(); ++i)
    cumulative[i] = cumulative[i - 1] + segment_length(order, path[i - 1], path[i], 2);
  const double total = cumulative.back();
  std::vector<std::complex<double>> out;
  out.reserve(vertices + 1);
  out.push_back(path.front());
  if (total <= 0.0) {
    out.push_back(path.back());
    return out;
  }
  std::size_t seg = 1;
  for (int k = 1; k < vertices; ++k) {
    const double target = total * k / vertices;
    while (seg + 1 < path.size() && cumulative[seg] < target) ++seg;
    const double lo = cumulative[seg - 1];
    const double hi = cumulative[seg];
    const double t = hi > lo ? (target - lo) / (hi - lo) : 0.0;
    out.push_back(path[seg - 1] + t * (path[seg] - path[seg - 1]));
  }
  out.push_back(path.back());
  return out;
}

// Coordinate-descent shortening of the polyline; each interior vertex is
// nudged along the axes with a shrinking step. The model is uniquely
// geodesic, so the local minimum is the geodesic itself.
double refine_polyline(const Multiplicity& order, std::vector<std::complex<double>>& pts,
                       double initial_step, bool allow_origin) {
  const int quad = 4;
  const std::size_t n = pts.size();
  std::vector<double> seg(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    seg[i] = segment_length(order, pts[i], pts[i + 1], quad);

  double h = initial_step;
  const double min_step = 1e-8;
  for (int sweep = 0; sweep < 2000 && h > min_step; ++sweep) {
    bool improved = false;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double base = seg[i - 1] + seg[i];
      double best = base;
      std::complex<double> best_z = pts[i];
      double best_a = seg[i - 1], best_b = seg[i];
      const std::complex<double> moves[4] = {{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}};
      for (const auto& mv : moves) {
        const std::complex<double> z = pts[i] + mv;
        if (std::abs(z) >= 0.9995) continue;
        if (!allow_origin && std::abs(z) < 1e-9) continue;
        const double a = segment_length(order, pts[i - 1], z, quad);
        const double b = segment_length(order, z, pts[i + 1], quad);
        if (a + b < best - 1e-15) {
          best = a + b;
          best_z = z;
          best_a = a;
          best_b = b;
        }
      }
      if (best < base) {
        pts[i] = best_z;
        seg[i - 1] = best_a;
        seg[i] = best_b;
        improved = true;
      }
    }
    if (!improved) h *= 0.5;
  }

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    total += segment_length(order, pts[i], pts[i + 1], 32);
  return total;
}

}  // namespace

double poincare_distance(std::complex<double> a, std::complex<double> b) {
  check_in_disk(a, "poincare_distance");
  check_in_disk(b, "poincare_distance");
  const double r = std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
  return std::log1p(r) - std::log1p(-r);
}

DensityValue density(const ModelOrbifoldDisk& d, std::complex<double> z) {
  check_in_disk(z, "density");
  const Multiplicity& n = d.order();
  if (std::abs(z) == 0.0) {
    if (n.is_infinite())
      throw std::domain_error("density: origin is deleted in the punctured model");
    if (n.value() == 1) return {4.0, false};
    return {std::numeric_limits<double>::infinity(), true};  // cone point
  }
  const double w = length_weight(n, z);
  return {w * w, false};
}

double distance(const ModelOrbifoldDisk& d, std::complex<double> p,
                std::complex<double> q, int lift_window) {
  check_in_disk(p, "distance");
  check_in_disk(q, "distance");
  const Multiplicity& n = d.order();
  if (n.is_finite()) {
    const std::int64_t k = n.value();
    if (k == 1) return poincare_distance(p, q);
    const std::complex<double> wp = principal_root(p, k);
    const std::complex<double> wq = principal_root(q, k);
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t j = 0; j < k; ++j) {
      const std::complex<double> rotated =
          wq * std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(k));
      best = std::min(best, poincare_distance(wp, rotated));
    }
    return best;
  }
  if (std::abs(p) == 0.0 || std::abs(q) == 0.0)
    throw std::domain_error("distance: origin is deleted in the punctured model");
  if (lift_window < 1) throw std::invalid_argument("lift window must be >= 1");
  // z = exp(-zeta) maps the right half plane onto the punctured disk;
  // deck transformations shift zeta by 2*pi*i.
  const std::complex<double> zeta_p = -std::log(p);
  const std::complex<double> zeta_q = -std::log(q);
  const std::complex<double> wp = half_plane_to_disk(zeta_p);
  double best = std::numeric_limits<double>::infinity();
  for (int k = -lift_window; k <= lift_window; ++k) {
    const std::complex<double> lift = zeta_q + std::complex<double>(0.0, kTwoPi * k);
    best = std::min(best, poincare_distance(wp, half_plane_to_disk(lift)));
  }
  return best;
}

double ahlfors_schwarz_ratio(const ModelOrbifoldDisk& d, std::int64_t m,
                             std::complex<double> t) {
  const Multiplicity& order = d.order();
  if (Multiplicity(m) < order)
    throw std::domain_error("ahlfors_schwarz_ratio: t -> t^m is an orbifold morphism "
                            "only for m >= n");
  const double s = std::abs(t);
  if (s <= 0.0 || s >= 1.0)
    throw std::domain_error("ahlfors_schwarz_ratio: need 0 < |t| < 1");
  const double u = static_cast<double>(m) / static_cast<double>(order.value());
  const double num = 1.0 - std::pow(s, 2.0);
  const double den = 1.0 - std::pow(s, 2.0 * u);
  const double radial = std::pow(s, 2.0 * u - 2.0);
  return u * u * radial * (num * num) / (den * den);
}

double geodesic_oracle_distance(const ModelOrbifoldDisk& d, std::complex<double> p,
                                std::complex<double> q, int resolution) {
  check_in_disk(p, "geodesic_oracle_distance");
  check_in_disk(q, "geodesic_oracle_distance");
  if (resolution < 64) throw std::invalid_argument("oracle resolution must be >= 64");
  const Multiplicity& n = d.order();
  if (n.is_infinite() && (std::abs(p) == 0.0 || std::abs(q) == 0.0))
    throw std::domain_error("geodesic oracle: origin is deleted in the punctured model");
  if (p == q) return 0.0;

  const double r_max_pts = std::max(std::abs(p), std::abs(q));
  PolarGrid grid;
  grid.sectors = 2 * resolution;
  if (n.is_finite()) {
    const double r_hi = std::min(0.998, r_max_pts + std::max(0.02, 4.0 * r_max_pts / resolution));
    grid.ring_radius.resize(resolution);
    for (int i = 0; i < resolution; ++i)
      grid.ring_radius[i] = r_hi * (i + 1) / resolution;
    grid.has_origin = true;
  } else {
    const double r_min_pts = std::min(std::abs(p), std::abs(q));
    const double r_hi = std::min(0.998, r_max_pts + std::max(0.02, 4.0 * r_max_pts / resolution));
    const double r_lo = std::exp(-(std::numbers::pi + 3.0 * std::max(1.0, -std::log(r_min_pts))));
    // Uniform in log(-log r): equal hyperbolic spacing toward the cusp.
    const double v_lo = std::log(-std::log(r_hi));
    const double v_hi = std::log(-std::log(r_lo));
    grid.ring_radius.resize(resolution);
    for (int i = 0; i < resolution; ++i) {
      const double v = v_hi + (v_lo - v_hi) * (i + 0.5) / resolution;
      grid.ring_radius[i] = std::exp(-std::exp(v));
    }
    grid.has_origin = false;
  }

  DijkstraResult coarse = grid_shortest_path(n, grid, p, q);
  const int vertices = std::clamp(resolution / 2, 32, 512);
  std::vector<std::complex<double>> pts = resample(n, coarse.path, vertices);
  const double step =
      n.is_finite() ? 2.0 * grid.ring_radius.back() / resolution
                    : 0.5 * (grid.ring_radius.back() - grid.ring_radius.front()) / resolution;
  return refine_polyline(n, pts, step, n.is_finite());
}

}  // namespace orbihyp
