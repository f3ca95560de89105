#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ec/dd.hpp"
#include "ec/linalg.hpp"

namespace ec {

/// Coefficients expressing one generator as an exact linear combination of
/// the others: generators[dependent] = sum alphas[i] * (other generators in
/// stored order).
struct Dependency {
  std::size_t dependent = 0;
  std::vector<Scalar> alphas;
};

namespace detail {

inline std::string vec_str(const Vec& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].str();
  }
  return out + ")";
}

// Facets of conv(+/- generators) in the plane: sort the signed vertex set by
// angle with the exact cross-product predicate, peel off non-extreme points,
// and solve f(u) = f(w) = 1 for each consecutive hull pair.
inline std::vector<Vec> polar_dual_2d(const std::vector<Vec>& generators) {
  std::vector<Vec> pts;
  for (const Vec& g : generators) {
    pts.push_back(g);
    pts.push_back(vec_neg(g));
  }
  std::sort(pts.begin(), pts.end(), VecLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto cross = [](const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; };
  auto upper = [](const Vec& v) {
    int sy = v[1].sign();
    return sy > 0 || (sy == 0 && v[0].sign() > 0);
  };

  // Keep one representative per direction: the longest point on each ray
  // (shorter collinear points are interior and get reported by the caller's
  // vertex test).
  std::sort(pts.begin(), pts.end(), [&](const Vec& u, const Vec& v) {
    bool hu = upper(u), hv = upper(v);
    if (hu != hv) return hu;
    int c = cross(u, v).sign();
    if (c != 0) return c > 0;
    // same direction: larger point first
    return Scalar::compare(abs(u[0]) + abs(u[1]), abs(v[0]) + abs(v[1])) > 0;
  });
  std::vector<Vec> ring;
  for (const Vec& p : pts) {
    if (!ring.empty() && cross(ring.back(), p).is_zero() &&
        dot(ring.back(), p).sign() > 0)
      continue;
    ring.push_back(p);
  }

  // Peel non-extreme points: remove any point making a non-left turn with
  // its cyclic neighbours.
  bool changed = true;
  while (changed && ring.size() > 2) {
    changed = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Vec& a = ring[(i + ring.size() - 1) % ring.size()];
      const Vec& b = ring[i];
      const Vec& c = ring[(i + 1) % ring.size()];
      if (cross(vec_sub(b, a), vec_sub(c, b)).sign() <= 0) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  std::vector<Vec> facets;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Vec& u = ring[i];
    const Vec& w = ring[(i + 1) % ring.size()];
    auto f = solve(Mat::from_rows({u, w}), Vec{Scalar(1), Scalar(1)});
    if (!f) fail(errc::internal_geometry, "collinear hull edge");
    facets.push_back(*f);
  }
  return facets;
}

}  // namespace detail

/// Complete, irredundant facet list of the symmetric polytope
/// conv(+/- generators), as functionals f with f(x) <= 1 on the polytope.
/// Both signs of every facet are returned, in canonical (lexicographic)
/// order. Redundant input points are harmless here; they are detected by
/// space validation afterwards.
inline std::vector<Vec> polar_dual(std::size_t dim, const std::vector<Vec>& generators) {
  for (const Vec& g : generators)
    if (g.size() != dim) fail(errc::dimension_mismatch, "generator dimension");
  if (rank(Mat::from_rows(generators)) < dim)
    fail(errc::degenerate_space, "generators do not span the space");

  std::vector<Vec> facets;
  if (dim == 1) {
    Scalar m;
    for (const Vec& g : generators) m = std::max(m, abs(g[0]), [](const Scalar& x, const Scalar& y) {
      return Scalar::compare(x, y) < 0;
    });
    facets.push_back(Vec{Scalar(1) / m});
    facets.push_back(Vec{Scalar(-1) / m});
  } else if (dim == 2) {
    facets = detail::polar_dual_2d(generators);
  } else {
    // Vertices of the polar body { f : +/-g . f <= 1 } are the facets.
    std::vector<Vec> halfspaces;
    for (const Vec& g : generators) {
      halfspaces.push_back(g);
      halfspaces.push_back(vec_neg(g));
    }
    facets = dd_polytope_vertices(dim, halfspaces);
  }
  std::sort(facets.begin(), facets.end(), VecLess{});
  return facets;
}

/// A polygonal Banach space given by the extreme points of its unit ball.
/// Stored generators keep the caller's order (one representative per +/-
/// pair); facet functionals are derived once at construction. Instances are
/// immutable after make() and safe to share across threads.
class Space {
 public:
  /// Validates the generator list and derives the facet description.
  /// Throws DegenerateSpace, DuplicateGenerator or RedundantGenerator on
  /// invalid input.
  static std::shared_ptr<const Space> make(std::string name, std::size_t dim,
                                           Field field, std::vector<Vec> generators) {
    auto sp = std::shared_ptr<Space>(new Space());
    sp->name_ = std::move(name);
    sp->dim_ = dim;
    sp->field_ = field;
    sp->generators_ = std::move(generators);
    sp->validate();
    return sp;
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }

  /// One generator per +/- pair, in the order supplied to make().
  const std::vector<Vec>& generators() const { return generators_; }

  /// All signed facet functionals, canonically ordered.
  const std::vector<Vec>& facets() const { return facets_; }

  /// One lexicographically positive representative per facet pair.
  const std::vector<Vec>& facet_reps() const { return facet_reps_; }

  /// All 2 * |generators| signed extreme points, canonically ordered.
  const std::vector<Vec>& extreme_points() const { return extreme_points_; }

  /// Minkowski gauge of the unit ball: max over facets f of f(x).
  Scalar gauge(const Vec& x) const {
    if (x.size() != dim_) fail(errc::dimension_mismatch, "gauge argument dimension");
    Scalar best;
    for (const Vec& f : facets_) {
      Scalar v = dot(f, x);
      if (Scalar::compare(v, best) > 0) best = v;
    }
    return best;
  }

  /// Exact membership of y in the extreme point set of the unit ball.
  bool is_extreme_point(const Vec& y) const {
    if (y.size() != dim_) fail(errc::dimension_mismatch, "point dimension");
    for (const Vec& g : generators_)
      if (y == g || y == vec_neg(g)) return true;
    return false;
  }

  /// For a space with exactly dim+1 generator pairs, the exact linear
  /// dependence among the generators.
  Dependency affine_dependence() const {
    if (generators_.size() != dim_ + 1)
      fail(errc::wrong_extreme_count,
           "expected " + std::to_string(2 * (dim_ + 1)) + " extreme points, space has " +
               std::to_string(2 * generators_.size()));
    auto ker = kernel_basis(Mat::from_cols(generators_));
    if (ker.size() != 1) fail(errc::internal_geometry, "dependence space not a line");
    const Vec& c = ker[0];
    std::size_t dep = c.size();
    for (std::size_t k = c.size(); k-- > 0;) {
      if (!c[k].is_zero()) {
        dep = k;
        break;
      }
    }
    Dependency result;
    result.dependent = dep;
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k == dep) continue;
      Scalar alpha = -c[k] / c[dep];
      if (!alpha.is_zero()) ++nonzero;
      result.alphas.push_back(std::move(alpha));
    }
    if (nonzero < 2)
      fail(errc::degenerate_dependence,
           "dependent generator is a multiple of a single generator");
    return result;
  }

 private:
  Space() = default;

  void validate() {
    if (dim_ == 0) fail(errc::degenerate_space, "dimension must be positive");
    for (const Vec& g : generators_) {
      if (g.size() != dim_)
        fail(errc::dimension_mismatch, "generator " + detail::vec_str(g) +
                                           " does not have dimension " +
                                           std::to_string(dim_));
      for (const Scalar& c : g) unify_radicand(c.radicand(), field_.d);
      if (vec_is_zero(g))
        fail(errc::redundant_generator, "zero vector cannot be an extreme point");
    }

    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (canonical_rep(generators_[i]) == canonical_rep(generators_[j]))
          fail(errc::duplicate_generator,
               "generators " + std::to_string(i) + " and " + std::to_string(j) +
                   " coincide up to sign");

    if (rank(Mat::from_rows(generators_)) < dim_)
      fail(errc::degenerate_space, "generators do not span the space");

    facets_ = polar_dual(dim_, generators_);
    for (const Vec& f : facets_)
      if (lex_positive(f)) facet_reps_.push_back(f);

    for (std::size_t i = 0; i < generators_.size(); ++i) check_vertex(i);

    for (const Vec& g : generators_) {
      extreme_points_.push_back(g);
      extreme_points_.push_back(vec_neg(g));
    }
    std::sort(extreme_points_.begin(), extreme_points_.end(), VecLess{});
  }

  // A listed generator is a vertex of the hull iff its tight facets have
  // full rank. Otherwise produce a convex combination witness.
  void check_vertex(std::size_t index) {
    const Vec& g = generators_[index];
    std::vector<Vec> tight;
    for (const Vec& f : facets_) {
      int c = Scalar::compare(dot(f, g), Scalar(1));
      if (c > 0)
        fail(errc::internal_geometry,
             "generator " + detail::vec_str(g) + " outside its own unit ball");
      if (c == 0) tight.push_back(f);
    }
    if (!tight.empty() && rank(Mat::from_rows(tight)) == dim_) return;
    fail(errc::redundant_generator,
         "generator " + std::to_string(index) + " = " + detail::vec_str(g) +
             " is not an extreme point; witness: " + witness_combination(index));
  }

  std::string witness_combination(std::size_t index) const {
    const Vec& g = generators_[index];
    std::vector<Vec> candidates;
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      if (k != index) {
        candidates.push_back(generators_[k]);
        candidates.push_back(vec_neg(generators_[k]));
      }
    }
    candidates.push_back(vec_neg(g));

    // Caratheodory: some subset of at most dim+1 points combines to g.
    std::size_t want = std::min(candidates.size(), dim_ + 1);
    std::vector<std::size_t> idx(want);
    for (std::size_t k = 0; k < want; ++k) idx[k] = k;
    auto advance = [&]() {
      std::size_t pos = want;
      while (pos > 0) {
        --pos;
        if (idx[pos] != candidates.size() - want + pos) {
          ++idx[pos];
          for (std::size_t j = pos + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    do {
      Mat sys(dim_ + 1, want);
      for (std::size_t c = 0; c < want; ++c) {
        for (std::size_t r = 0; r < dim_; ++r) sys(r, c) = candidates[idx[c]][r];
        sys(dim_, c) = Scalar(1);
      }
      Vec rhs(dim_ + 1);
      for (std::size_t r = 0; r < dim_; ++r) rhs[r] = g[r];
      rhs[dim_] = Scalar(1);
      auto lambda = solve_any(sys, rhs);
      if (!lambda) continue;
      bool nonneg = true;
      for (const Scalar& l : *lambda)
        if (l.sign() < 0) {
          nonneg = false;
          break;
        }
      if (!nonneg) continue;
      std::string out;
      for (std::size_t c = 0; c < want; ++c) {
        if ((*lambda)[c].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += (*lambda)[c].str() + "*" + detail::vec_str(candidates[idx[c]]);
      }
      return out;
    } while (advance());
    return "(no combination found)";
  }

  std::string name_;
  std::size_t dim_ = 0;
  Field field_;
  std::vector<Vec> generators_;
  std::vector<Vec> facets_;
  std::vector<Vec> facet_reps_;
  std::vector<Vec> extreme_points_;
};

using SpacePtr = std::shared_ptr<const Space>;

}  // namespace ec
