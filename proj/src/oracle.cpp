#include "trivol/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <thread>
#include <utility>

namespace trivol {

namespace {

// ---------------------------------------------------------------------------
// Incremental 3D convex hull, generic over the coordinate type. The exact
// path runs on integers (denominators cleared by the caller); the floating
// path supplies a tolerance-based visibility predicate.

template <class T>
struct HullFace {
  int a, b, c;
  bool alive = true;
};

template <class T>
T det3(const T& a0, const T& a1, const T& a2,  //
       const T& b0, const T& b1, const T& b2,  //
       const T& c0, const T& c1, const T& c2) {
  return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

// Returns |sum of det(a-o, b-o, c-o)| over the outward facet triangulation,
// i.e. six times the hull volume. `visible` must be a strict positivity test.
template <class T, class Vis>
T hull_six_volume(const std::vector<std::array<T, 3>>& p, Vis visible) {
  const int n = static_cast<int>(p.size());
  if (n < 4) return T(0);

  auto orient = [&](int a, int b, int c, int d) -> T {
    return det3<T>(p[b][0] - p[a][0], p[b][1] - p[a][1], p[b][2] - p[a][2],
                   p[c][0] - p[a][0], p[c][1] - p[a][1], p[c][2] - p[a][2],
                   p[d][0] - p[a][0], p[d][1] - p[a][1], p[d][2] - p[a][2]);
  };
  auto nonzero = [&](const T& t) { return visible(t) || visible(T(-t)); };

  // Four affinely independent seed points; bail out to 0 if there are none.
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n && i1 < 0; ++i) {
    if (p[i] != p[i0]) i1 = i;
  }
  if (i1 < 0) return T(0);
  for (int i = i1 + 1; i < n && i2 < 0; ++i) {
    std::array<T, 3> u{p[i1][0] - p[i0][0], p[i1][1] - p[i0][1], p[i1][2] - p[i0][2]};
    std::array<T, 3> v{p[i][0] - p[i0][0], p[i][1] - p[i0][1], p[i][2] - p[i0][2]};
    T cx = u[1] * v[2] - u[2] * v[1];
    T cy = u[2] * v[0] - u[0] * v[2];
    T cz = u[0] * v[1] - u[1] * v[0];
    if (nonzero(cx) || nonzero(cy) || nonzero(cz)) i2 = i;
  }
  if (i2 < 0) return T(0);
  for (int i = 1; i < n && i3 < 0; ++i) {
    if (i == i1 || i == i2) continue;
    if (nonzero(orient(i0, i1, i2, i))) i3 = i;
  }
  if (i3 < 0) return T(0);

  std::vector<HullFace<T>> faces;
  auto add_seed_face = [&](int a, int b, int c, int opposite) {
    if (visible(orient(a, b, c, opposite))) std::swap(b, c);
    faces.push_back({a, b, c});
  };
  add_seed_face(i0, i1, i2, i3);
  add_seed_face(i0, i1, i3, i2);
  add_seed_face(i0, i2, i3, i1);
  add_seed_face(i1, i2, i3, i0);

  for (int m = 0; m < n; ++m) {
    if (m == i0 || m == i1 || m == i2 || m == i3) continue;
    std::set<std::pair<int, int>> edges;
    std::vector<int> visible_idx;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      auto& f = faces[fi];
      if (!f.alive) continue;
      if (visible(orient(f.a, f.b, f.c, m))) {
        visible_idx.push_back(fi);
        edges.insert({f.a, f.b});
        edges.insert({f.b, f.c});
        edges.insert({f.c, f.a});
      }
    }
    if (visible_idx.empty()) continue;  // inside or on the boundary
    for (int fi : visible_idx) faces[fi].alive = false;
    std::vector<HullFace<T>> cone;
    for (const auto& [u, v] : edges) {
      if (!edges.count({v, u})) cone.push_back({u, v, m});
    }
    faces.insert(faces.end(), cone.begin(), cone.end());
  }

  T sum(0);
  for (const auto& f : faces) {
    if (!f.alive) continue;
    sum += det3<T>(p[f.a][0] - p[i0][0], p[f.a][1] - p[i0][1], p[f.a][2] - p[i0][2],
                   p[f.b][0] - p[i0][0], p[f.b][1] - p[i0][1], p[f.b][2] - p[i0][2],
                   p[f.c][0] - p[i0][0], p[f.c][1] - p[i0][1], p[f.c][2] - p[i0][2]);
  }
  return sum < T(0) ? T(-sum) : sum;
}

// ---------------------------------------------------------------------------
// Phase-1 simplex for the convex-combination feasibility system
//   sum_j w_j * col_j = b,  sum_j w_j = 1,  w >= 0   (5 rows, 8 columns).
// Bland's rule; tol = 0 gives exact pivoting over rationals.

template <class T>
bool conv_feasible(const T A[5][8], const T b_in[5], const T& tol, const T& feas_tol) {
  constexpr int M = 5, N = 8;
  T tab[M][N + M + 1];
  int basis[M];

  for (int r = 0; r < M; ++r) {
    bool neg = b_in[r] < 0;
    for (int j = 0; j < N; ++j) tab[r][j] = neg ? T(-A[r][j]) : A[r][j];
    for (int k = 0; k < M; ++k) tab[r][N + k] = T(k == r ? 1 : 0);
    tab[r][N + M] = neg ? T(-b_in[r]) : b_in[r];
    basis[r] = N + r;
  }

  // Reduced costs for minimizing the artificial sum: d_j = -sum_r tab[r][j]
  // for the real columns, 0 for the (basic) artificials.
  T cost[N + M];
  for (int j = 0; j < N + M; ++j) {
    cost[j] = T(0);
    if (j < N) {
      for (int r = 0; r < M; ++r) cost[j] -= tab[r][j];
    }
  }

  for (int iter = 0; iter < 256; ++iter) {
    int enter = -1;
    for (int j = 0; j < N + M; ++j) {
      if (cost[j] < -tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    T best_ratio(0);
    for (int r = 0; r < M; ++r) {
      if (tab[r][enter] > tol) {
        T ratio = tab[r][N + M] / tab[r][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) break;  // unbounded; cannot happen for this system

    T piv = tab[leave][enter];
    for (int j = 0; j <= N + M; ++j) tab[leave][j] /= piv;
    for (int r = 0; r < M; ++r) {
      if (r == leave) continue;
      T factor = tab[r][enter];
      if (factor == 0) continue;
      for (int j = 0; j <= N + M; ++j) tab[r][j] -= factor * tab[leave][j];
    }
    T cfactor = cost[enter];
    if (cfactor != 0) {
      for (int j = 0; j < N + M; ++j) cost[j] -= cfactor * tab[leave][j];
    }
    basis[leave] = enter;
  }

  T artificial_total(0);
  for (int r = 0; r < M; ++r) {
    if (basis[r] >= N) artificial_total += tab[r][N + M];
  }
  return artificial_total <= feas_tol;
}

// ---------------------------------------------------------------------------
// SplitMix64 (Steele, Lea, Flood 2014); streams keyed by (seed, batch index).

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

SplitMix64 stream_for(std::uint64_t seed, std::uint64_t batch) {
  SplitMix64 g{seed ^ (0xD1B54A32D192ED03ULL * (batch + 1))};
  g.next();
  return g;
}

}  // namespace

Scalar hull3d_volume(const std::vector<Point3>& points) {
  mpz_class denom_lcm(1);
  for (const auto& pt : points) {
    for (const Scalar* s : {&pt.a, &pt.b, &pt.c}) {
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), s->get_den().get_mpz_t());
    }
  }
  std::vector<std::array<mpz_class, 3>> ip;
  ip.reserve(points.size());
  for (const auto& pt : points) {
    std::array<mpz_class, 3> q;
    const Scalar* coords[3] = {&pt.a, &pt.b, &pt.c};
    for (int k = 0; k < 3; ++k) {
      q[k] = coords[k]->get_num() * (denom_lcm / coords[k]->get_den());
    }
    ip.push_back(std::move(q));
  }
  mpz_class six_vol = hull_six_volume<mpz_class>(ip, [](const mpz_class& t) { return t > 0; });
  Scalar out(six_vol, 6 * denom_lcm * denom_lcm * denom_lcm);
  out.canonicalize();
  return out;
}

double hull3d_volume_f(const std::vector<std::array<double, 3>>& points, double eps) {
  double scale = 1.0;
  for (const auto& pt : points) {
    for (double c : pt) scale = std::max(scale, std::abs(c));
  }
  double eps_abs = eps * scale * scale * scale;
  double six_vol =
      hull_six_volume<double>(points, [eps_abs](double t) { return t > eps_abs; });
  return six_vol / 6.0;
}

std::vector<Point3> slice_points(const BoxDomain3& canonical, const Scalar& t) {
  HullVertices verts = extreme_points(canonical);
  Scalar s = 1 - t;
  std::vector<Point3> out;
  out.reserve(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 4; j < 8; ++j) {
      Point4 p = verts.v[i].scaled(s) + verts.v[j].scaled(t);
      out.push_back(Point3{p.f, p.x1, p.x2});
    }
  }
  return out;
}

Scalar oracle_volume_quadrature(const BoxDomain3& canonical) {
  Scalar g0 = hull3d_volume(slice_points(canonical, Scalar(0)));
  Scalar g1 = hull3d_volume(slice_points(canonical, Scalar(1, 3)));
  Scalar g2 = hull3d_volume(slice_points(canonical, Scalar(2, 3)));
  Scalar g3 = hull3d_volume(slice_points(canonical, Scalar(1)));
  return 2 * canonical.iv[2].half_length * (g0 + 3 * g1 + 3 * g2 + g3) / 8;
}

double oracle_volume_quadrature_f(const BoxDomain3& canonical) {
  HullVertices verts = extreme_points(canonical);
  auto slice_f = [&](double t) {
    std::vector<std::array<double, 3>> pts;
    pts.reserve(16);
    for (int i = 0; i < 4; ++i) {
      for (int j = 4; j < 8; ++j) {
        pts.push_back({(1 - t) * to_double(verts.v[i].f) + t * to_double(verts.v[j].f),
                       (1 - t) * to_double(verts.v[i].x1) + t * to_double(verts.v[j].x1),
                       (1 - t) * to_double(verts.v[i].x2) + t * to_double(verts.v[j].x2)});
      }
    }
    return hull3d_volume_f(pts);
  };
  double g0 = slice_f(0.0), g1 = slice_f(1.0 / 3.0), g2 = slice_f(2.0 / 3.0), g3 = slice_f(1.0);
  return 2 * to_double(canonical.iv[2].half_length) * (g0 + 3 * g1 + 3 * g2 + g3) / 8;
}

bool lp_membership(const Point4& p, const std::array<Point4, 8>& vertices) {
  Scalar A[5][8], b[5];
  for (int j = 0; j < 8; ++j) {
    A[0][j] = vertices[j].f;
    A[1][j] = vertices[j].x1;
    A[2][j] = vertices[j].x2;
    A[3][j] = vertices[j].x3;
    A[4][j] = 1;
  }
  b[0] = p.f;
  b[1] = p.x1;
  b[2] = p.x2;
  b[3] = p.x3;
  b[4] = 1;
  return conv_feasible<Scalar>(A, b, Scalar(0), Scalar(0));
}

McEstimate oracle_volume_montecarlo(const BoxDomain3& canonical, std::uint64_t samples,
                                    std::uint64_t seed, unsigned threads) {
  HullVertices verts = extreme_points(canonical);

  double A[5][8];
  for (int j = 0; j < 8; ++j) {
    A[0][j] = to_double(verts.v[j].f);
    A[1][j] = to_double(verts.v[j].x1);
    A[2][j] = to_double(verts.v[j].x2);
    A[3][j] = to_double(verts.v[j].x3);
    A[4][j] = 1.0;
  }
  double scale = 1.0;
  for (int r = 0; r < 4; ++r) {
    for (int j = 0; j < 8; ++j) scale = std::max(scale, std::abs(A[r][j]));
  }
  const double tol = 1e-9 * scale;
  const double feas_tol = 1e-7 * scale;

  // The hull's f-range is attained at vertices, so the vertex min/max bound it.
  double fmin = A[0][0], fmax = A[0][0];
  for (int j = 1; j < 8; ++j) {
    fmin = std::min(fmin, A[0][j]);
    fmax = std::max(fmax, A[0][j]);
  }
  double lo[4] = {fmin, to_double(canonical.iv[0].lo()), to_double(canonical.iv[1].lo()),
                  to_double(canonical.iv[2].lo())};
  double wid[4] = {fmax - fmin, 2 * to_double(canonical.iv[0].half_length),
                   2 * to_double(canonical.iv[1].half_length),
                   2 * to_double(canonical.iv[2].half_length)};
  double bounding_volume = wid[0] * wid[1] * wid[2] * wid[3];

  constexpr std::uint64_t kBatch = 1 << 14;
  const std::uint64_t nbatches = (samples + kBatch - 1) / kBatch;

  auto run_batch = [&](std::uint64_t batch) -> std::uint64_t {
    SplitMix64 rng = stream_for(seed, batch);
    std::uint64_t begin = batch * kBatch;
    std::uint64_t count = std::min(kBatch, samples - begin);
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
      double b[5];
      for (int r = 0; r < 4; ++r) b[r] = lo[r] + wid[r] * rng.unit();
      b[4] = 1.0;
      if (conv_feasible<double>(A, b, tol, feas_tol)) ++hits;
    }
    return hits;
  };

  unsigned nthreads = threads == 0 ? std::thread::hardware_concurrency() : threads;
  nthreads = std::clamp(nthreads, 1u, 8u);
  std::vector<std::uint64_t> per_thread(nthreads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      std::uint64_t acc = 0;
      for (std::uint64_t batch = t; batch < nbatches; batch += nthreads) {
        acc += run_batch(batch);
      }
      per_thread[t] = acc;
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t hits = 0;
  for (auto h : per_thread) hits += h;

  double n = static_cast<double>(samples);
  double phat = n > 0 ? static_cast<double>(hits) / n : 0.0;
  double sd = std::sqrt(phat * (1.0 - phat));
  return McEstimate{bounding_volume * phat, bounding_volume * sd / std::sqrt(n), samples, seed};
}

}  // namespace trivol
