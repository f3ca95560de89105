#pragma once

#include <optional>
#include <vector>

#include "ec/enumerate.hpp"

namespace ec {

/// Machine-checkable answer to "is T a vertex of the contraction ball?".
///
/// Extreme: the active constraints listed under `spanning` (indices into
/// `active`) form a basis of matrix space, so no perturbation direction
/// preserves all of them.
///
/// NotExtreme: T = (t1 + t2) / 2 with t1 = T + epsilon * direction and
/// t2 = T - epsilon * direction, both contractions and both different
/// from T.
struct Certificate {
  enum class Verdict { extreme, not_extreme };

  Verdict verdict = Verdict::not_extreme;
  Scalar norm;
  std::vector<ActivePair> active;

  // Extreme case
  std::vector<std::size_t> spanning;

  // NotExtreme case
  Mat direction;
  Scalar epsilon;
  Mat t1, t2;

  bool is_extreme() const { return verdict == Verdict::extreme; }
};

/// Vertex test for a contraction: T is extreme iff the functionals of its
/// active constraints span the full matrix space. Otherwise a direction in
/// their common kernel, pushed to the largest exact step by the ratio test
/// over the remaining constraints, yields the midpoint witness.
inline Certificate is_extreme(const Operator& T) {
  Certificate cert;
  cert.norm = T.op_norm();
  if (Scalar::compare(cert.norm, Scalar(1)) > 0)
    fail(errc::norm_exceeds_one, "extremality is defined on the unit ball");

  const Space& X = *T.domain();
  const Space& Y = *T.codomain();
  const std::size_t D = X.dim() * Y.dim();
  cert.active = T.active_set();

  std::vector<Vec> rows;
  rows.reserve(cert.active.size());
  for (const ActivePair& p : cert.active)
    rows.push_back(mat_flatten(pair_functional(X, Y, p)));

  if (!rows.empty()) {
    auto basis = independent_rows(rows);
    if (basis.size() == D) {
      cert.verdict = Certificate::Verdict::extreme;
      cert.spanning = std::move(basis);
      return cert;
    }
  }

  cert.verdict = Certificate::Verdict::not_extreme;
  if (rows.empty()) {
    // Interior point: any direction works; use the first matrix unit.
    cert.direction = Mat(Y.dim(), X.dim());
    cert.direction(0, 0) = Scalar(1);
  } else {
    auto kernel = kernel_basis(Mat::from_rows(rows));
    if (kernel.empty()) fail(errc::internal_geometry, "rank-deficient set with empty kernel");
    cert.direction = mat_reshape(kernel.front(), Y.dim(), X.dim());
  }

  // Ratio test: epsilon = min (1 - L(T)) / |L(direction)| over constraints
  // with L(direction) != 0. Active constraints have L(direction) = 0.
  ContractionBall ball = build_ball(T.domain(), T.codomain());
  std::optional<Scalar> eps;
  for (const Mat& L : ball.functionals) {
    Scalar ld = mat_inner(L, cert.direction);
    if (ld.is_zero()) continue;
    Scalar cand = (Scalar(1) - mat_inner(L, T.matrix())) / abs(ld);
    if (!eps || Scalar::compare(cand, *eps) < 0) eps = cand;
  }
  if (!eps) fail(errc::internal_geometry, "no constraint bounds the kernel direction");
  cert.epsilon = *eps;
  cert.t1 = T.matrix() + cert.epsilon * cert.direction;
  cert.t2 = T.matrix() - cert.epsilon * cert.direction;
  return cert;
}

/// Re-checks a certificate from first principles, independently of the
/// decision procedure: activity plus non-zero determinant for Extreme,
/// the midpoint identity plus two ball memberships for NotExtreme.
inline bool check_certificate(const Operator& T, const Certificate& cert) {
  const Space& X = *T.domain();
  const Space& Y = *T.codomain();
  const std::size_t D = X.dim() * Y.dim();
  if (Scalar::compare(T.op_norm(), Scalar(1)) > 0) return false;

  if (cert.is_extreme()) {
    if (cert.spanning.size() != D) return false;
    Mat square(D, D);
    for (std::size_t r = 0; r < D; ++r) {
      if (cert.spanning[r] >= cert.active.size()) return false;
      const ActivePair& p = cert.active[cert.spanning[r]];
      Mat F = pair_functional(X, Y, p);
      if (mat_inner(F, T.matrix()) != Scalar(1)) return false;  // not active
      Vec flat = mat_flatten(F);
      for (std::size_t c = 0; c < D; ++c) square(r, c) = flat[c];
    }
    return !det(square).is_zero();
  }

  if (cert.direction.is_zero()) return false;
  if (cert.epsilon.sign() <= 0) return false;
  Mat mid = Scalar(Rat(1, 2)) * (cert.t1 + cert.t2);
  if (!(mid == T.matrix())) return false;
  if (cert.t1 == T.matrix() || cert.t2 == T.matrix()) return false;
  Operator o1(T.domain(), T.codomain(), cert.t1);
  Operator o2(T.domain(), T.codomain(), cert.t2);
  return Scalar::compare(o1.op_norm(), Scalar(1)) <= 0 &&
         Scalar::compare(o2.op_norm(), Scalar(1)) <= 0;
}

/// Witness for T(E_X) intersecting E_Y, or the full image list when the
/// intersection is empty.
struct WeakLpResult {
  bool holds = false;
  std::optional<Vec> witness;        // an extreme x with Tx extreme
  std::vector<Vec> images;           // images of all signed extreme points
};

inline WeakLpResult weak_lp_holds(const Operator& T) {
  WeakLpResult out;
  for (const Vec& x : T.domain()->extreme_points()) {
    Vec image = T.apply(x);
    out.images.push_back(image);
    if (!out.holds && T.codomain()->is_extreme_point(image)) {
      out.holds = true;
      out.witness = x;
    }
  }
  return out;
}

/// True iff every signed extreme point of X maps exactly onto an extreme
/// point of Y.
inline bool lp_image_check(const Operator& T) {
  for (const Vec& x : T.domain()->extreme_points())
    if (!T.codomain()->is_extreme_point(T.apply(x))) return false;
  return true;
}

/// True iff the norm attainment set spans the domain (exact rank test).
/// Requires op_norm(T) = 1.
inline bool span_check(const Operator& T) {
  if (T.op_norm() != Scalar(1))
    fail(errc::norm_not_one, "span check requires a norm-one operator");
  return rank(Mat::from_rows(T.attainment_set())) == T.domain()->dim();
}

}  // namespace ec
