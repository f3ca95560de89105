#pragma once

#include <algorithm>
#include <vector>

#include "ec/dd.hpp"
#include "ec/operator.hpp"

namespace ec {

/// The unit ball of L(X, Y) realized as the halfspace intersection
/// { T : sign * f_j(T x_i) <= 1 } in (dim Y) x (dim X) matrix space, with
/// one constraint per generator pair x facet pair x sign, in canonical
/// generator-major, facet-minor order.
struct ContractionBall {
  SpacePtr domain, codomain;
  std::vector<ActivePair> index;   // constraint k <-> index[k]
  std::vector<Mat> functionals;    // constraint k as a rank-one matrix

  std::size_t matrix_dim() const { return domain->dim() * codomain->dim(); }
};

inline ContractionBall build_ball(SpacePtr domain, SpacePtr codomain) {
  unify_radicand(domain->field().d, codomain->field().d);
  ContractionBall ball;
  ball.domain = domain;
  ball.codomain = codomain;
  for (std::size_t i = 0; i < domain->generators().size(); ++i)
    for (std::size_t j = 0; j < codomain->facet_reps().size(); ++j)
      for (int s : {+1, -1}) {
        ActivePair p{i, j, s};
        ball.functionals.push_back(pair_functional(*domain, *codomain, p));
        ball.index.push_back(p);
      }
  return ball;
}

/// The complete extreme contraction set: all vertices of the ball, as
/// operators, canonically ordered and closed under negation.
struct VertexSet {
  std::vector<Operator> vertices;

  std::size_t count() const { return vertices.size(); }

  bool contains(const Operator& t) const {
    for (const Operator& v : vertices)
      if (v == t) return true;
    return false;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    if (a.vertices.size() != b.vertices.size()) return false;
    for (std::size_t k = 0; k < a.vertices.size(); ++k)
      if (!(a.vertices[k] == b.vertices[k])) return false;
    return true;
  }
};

namespace detail {

inline VertexSet to_vertex_set(const ContractionBall& ball, std::vector<Vec> points) {
  VertexSet out;
  for (Vec& p : points)
    out.vertices.emplace_back(ball.domain, ball.codomain,
                              mat_reshape(p, ball.codomain->dim(), ball.domain->dim()));
  std::sort(out.vertices.begin(), out.vertices.end(), OperatorLess{});
  return out;
}

}  // namespace detail

/// Exact vertex enumeration via the double description method.
inline VertexSet enumerate_vertices(const ContractionBall& ball) {
  std::vector<Vec> halfspaces;
  halfspaces.reserve(ball.functionals.size());
  for (const Mat& f : ball.functionals) halfspaces.push_back(mat_flatten(f));
  return detail::to_vertex_set(ball, dd_polytope_vertices(ball.matrix_dim(), halfspaces));
}

/// Independent oracle: enumerate all matrix_dim-subsets of constraint
/// boundaries and keep exact full-rank solutions inside the ball. Guarded to
/// small matrix spaces.
inline VertexSet brute_force_vertices(const ContractionBall& ball) {
  if (ball.matrix_dim() > 9)
    fail(errc::too_large, "brute force vertex oracle is limited to dim(X)*dim(Y) <= 9");
  std::vector<Vec> halfspaces;
  halfspaces.reserve(ball.functionals.size());
  for (const Mat& f : ball.functionals) halfspaces.push_back(mat_flatten(f));
  return detail::to_vertex_set(ball, bf_polytope_vertices(ball.matrix_dim(), halfspaces));
}

}  // namespace ec
