#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ec/linalg.hpp"

namespace ec {

namespace detail {

/// Scale a ray so its first non-zero coordinate has absolute value one.
/// The scaling factor is positive, so the ray itself is preserved; the
/// result is a canonical representative usable for exact deduplication.
inline Vec canonical_ray(Vec r) {
  for (const Scalar& c : r) {
    int s = c.sign();
    if (s != 0) {
      Scalar inv = Scalar(1) / abs(c);
      return vec_scale(inv, r);
    }
  }
  return r;  // zero vector; callers never keep it
}

}  // namespace detail

/// Exact vertex enumeration of the polytope { x in R^dim : h . x <= 1 } by
/// the incremental double description method on the homogenization cone
/// { (t, x) : t >= 0, h . x <= t }.
///
/// The initial cone is the simplicial cone cut out by t >= 0 together with
/// dim constraints whose normals are linearly independent; the remaining
/// constraints are inserted one at a time in the given order. Adjacency of
/// rays is decided by the exact rank test on their common tight set.
///
/// Throws UnboundedRegion when the halfspaces fail to bound the polytope.
inline std::vector<Vec> dd_polytope_vertices(std::size_t dim,
                                             const std::vector<Vec>& halfspaces) {
  if (dim == 0) fail(errc::dimension_mismatch, "vertex enumeration needs dim >= 1");
  const std::size_t lifted = dim + 1;

  // Lifted constraint rows c . y >= 0 with y = (t, x).
  std::vector<Vec> rows;
  rows.reserve(halfspaces.size() + 1);
  {
    Vec t_row(lifted);
    t_row[0] = Scalar(1);
    rows.push_back(std::move(t_row));
  }
  for (const Vec& h : halfspaces) {
    if (h.size() != dim) fail(errc::dimension_mismatch, "halfspace dimension");
    Vec c(lifted);
    c[0] = Scalar(1);
    for (std::size_t k = 0; k < dim; ++k) c[k + 1] = -h[k];
    rows.push_back(std::move(c));
  }

  // Pick dim halfspaces with linearly independent normals for the seed cone.
  std::vector<std::size_t> seed = independent_rows(halfspaces);
  if (seed.size() < dim)
    fail(errc::unbounded_region, "halfspace normals do not span the space");
  seed.resize(dim);

  std::vector<bool> inserted(rows.size(), false);
  inserted[0] = true;
  std::vector<Vec> basis_rows{rows[0]};
  for (std::size_t k : seed) {
    inserted[k + 1] = true;
    basis_rows.push_back(rows[k + 1]);
  }
  auto seed_inv = inverse(Mat::from_rows(basis_rows));
  if (!seed_inv) fail(errc::internal_geometry, "singular seed cone basis");

  // Each ray carries the sorted index set of inserted rows tight at it, so
  // the adjacency rank test only touches the common tight rows.
  struct Ray {
    Vec v;
    std::vector<std::uint32_t> tight;
  };

  auto tight_rows = [&](const Vec& v) {
    std::vector<std::uint32_t> z;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (inserted[r] && dot(rows[r], v).is_zero())
        z.push_back(static_cast<std::uint32_t>(r));
    return z;
  };

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < lifted; ++j) {
    Ray r{detail::canonical_ray(seed_inv->col(j)), {}};
    r.tight = tight_rows(r.v);
    rays.push_back(std::move(r));
  }

  std::vector<std::uint32_t> common;
  auto adjacent = [&](const Ray& r1, const Ray& r2) {
    common.clear();
    std::set_intersection(r1.tight.begin(), r1.tight.end(), r2.tight.begin(),
                          r2.tight.end(), std::back_inserter(common));
    if (common.size() < lifted - 2) return false;
    std::vector<Vec> sub;
    sub.reserve(common.size());
    for (std::uint32_t r : common) sub.push_back(rows[r]);
    return rank(Mat::from_rows(sub)) == lifted - 2;
  };

  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (inserted[k]) continue;
    const Vec& c = rows[k];
    inserted[k] = true;

    std::vector<Scalar> val(rays.size());
    std::vector<int> side(rays.size());
    bool any_neg = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(c, rays[r].v);
      side[r] = val[r].sign();
      if (side[r] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (side[r] == 0)
          rays[r].tight.insert(std::lower_bound(rays[r].tight.begin(),
                                                rays[r].tight.end(),
                                                static_cast<std::uint32_t>(k)),
                               static_cast<std::uint32_t>(k));
      continue;
    }

    std::vector<Ray> next;
    std::set<Vec, VecLess> seen;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (side[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (side[q] >= 0) continue;
        if (!adjacent(rays[p], rays[q])) continue;
        Vec w = vec_sub(vec_scale(val[p], rays[q].v), vec_scale(val[q], rays[p].v));
        w = detail::canonical_ray(std::move(w));
        if (seen.insert(w).second) {
          Ray nr{std::move(w), {}};
          nr.tight = tight_rows(nr.v);
          next.push_back(std::move(nr));
        }
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (side[r] < 0 || !seen.insert(rays[r].v).second) continue;
      if (side[r] == 0)
        rays[r].tight.insert(std::lower_bound(rays[r].tight.begin(),
                                              rays[r].tight.end(),
                                              static_cast<std::uint32_t>(k)),
                             static_cast<std::uint32_t>(k));
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  std::vector<Vec> vertices;
  for (const Ray& ray : rays) {
    if (ray.v[0].is_zero())
      fail(errc::unbounded_region, "polytope has a recession direction");
    // Canonical rays with positive lift coordinate have t normalized to 1.
    vertices.emplace_back(ray.v.begin() + 1, ray.v.end());
  }
  std::sort(vertices.begin(), vertices.end(), VecLess{});
  return vertices;
}

/// Independent brute-force oracle for the same polytope: solve every
/// dim-subset of tight constraints exactly and keep the full-rank solutions
/// that satisfy all halfspaces. Quadratic in the output but entirely
/// separate from the double description path.
inline std::vector<Vec> bf_polytope_vertices(std::size_t dim,
                                             const std::vector<Vec>& halfspaces) {
  const std::size_t K = halfspaces.size();
  std::set<Vec, VecLess> found;
  if (dim == 0 || K < dim) return {};

  std::vector<std::size_t> idx(dim);
  for (std::size_t k = 0; k < dim; ++k) idx[k] = k;

  auto advance = [&]() {
    std::size_t pos = dim;
    while (pos > 0) {
      --pos;
      if (idx[pos] != K - dim + pos) {
        ++idx[pos];
        for (std::size_t j = pos + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  Vec ones(dim, Scalar(1));
  do {
    std::vector<Vec> sub;
    sub.reserve(dim);
    for (std::size_t k : idx) sub.push_back(halfspaces[k]);
    auto x = solve(Mat::from_rows(sub), ones);
    if (!x) continue;
    bool feasible = true;
    for (const Vec& h : halfspaces) {
      if (Scalar::compare(dot(h, *x), Scalar(1)) > 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) found.insert(*x);
  } while (advance());

  return {found.begin(), found.end()};
}

}  // namespace ec
