#pragma once

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "ec/space.hpp"

namespace ec {

/// One tight inequality of the contraction ball: sign * f_facet(T x_gen) = 1,
/// indexing one representative per +/- pair of generators and facets.
struct ActivePair {
  std::size_t gen = 0;    // index into domain generators (stored order)
  std::size_t facet = 0;  // index into codomain facet_reps (canonical order)
  int sign = 1;

  friend bool operator==(const ActivePair&, const ActivePair&) = default;
};

/// The linear functional T -> sign * f(T x) on matrix space, materialized as
/// the rank-one matrix sign * f x^T so that the value is mat_inner(F, T).
inline Mat pair_functional(const Space& domain, const Space& codomain,
                           const ActivePair& p) {
  const Vec& x = domain.generators().at(p.gen);
  const Vec& f = codomain.facet_reps().at(p.facet);
  Mat F(codomain.dim(), domain.dim());
  for (std::size_t r = 0; r < F.rows; ++r)
    for (std::size_t c = 0; c < F.cols; ++c)
      F(r, c) = Scalar(p.sign) * f[r] * x[c];
  return F;
}

/// A linear operator between polygonal spaces, stored against standard
/// coordinates (column k is the image of the k-th coordinate vector).
class Operator {
 public:
  Operator(SpacePtr domain, SpacePtr codomain, Mat matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows != codomain_->dim() || matrix_.cols != domain_->dim())
      fail(errc::dimension_mismatch,
           "operator matrix must be " + std::to_string(codomain_->dim()) + "x" +
               std::to_string(domain_->dim()));
    std::int64_t d = unify_radicand(domain_->field().d, codomain_->field().d);
    for (const Scalar& c : matrix_.data) d = unify_radicand(d, c.radicand());
  }

  /// Builds the operator sending the first dim(domain) linearly independent
  /// generators (in stored order) to the given image vectors.
  static Operator from_images(SpacePtr domain, SpacePtr codomain,
                              const std::vector<Vec>& images) {
    std::size_t n = domain->dim();
    auto idx = independent_rows(domain->generators());
    if (idx.size() != n)
      fail(errc::internal_geometry, "validated space lost full rank");
    if (images.size() != n)
      fail(errc::dimension_mismatch,
           "expected " + std::to_string(n) + " generator images, got " +
               std::to_string(images.size()));
    for (const Vec& v : images)
      if (v.size() != codomain->dim())
        fail(errc::dimension_mismatch, "image dimension");
    std::vector<Vec> chosen;
    for (std::size_t k : idx) chosen.push_back(domain->generators()[k]);
    auto ginv = inverse(Mat::from_cols(chosen));
    if (!ginv) fail(errc::internal_geometry, "independent generators not invertible");
    return Operator(std::move(domain), std::move(codomain),
                    mat_mul(Mat::from_cols(images), *ginv));
  }

  const Mat& matrix() const { return matrix_; }
  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }

  bool is_zero() const { return matrix_.is_zero(); }

  Vec apply(const Vec& x) const { return mat_vec(matrix_, x); }

  /// Exact operator norm: the maximum of the codomain gauge over the extreme
  /// points of the domain ball (the maximum of a convex function over the
  /// ball is attained there).
  Scalar op_norm() const {
    Scalar best;
    for (const Vec& g : domain_->generators()) {
      Scalar v = codomain_->gauge(apply(g));
      if (Scalar::compare(v, best) > 0) best = v;
    }
    return best;
  }

  /// All signed extreme points x with gauge(Tx) = ||T||, canonically ordered;
  /// closed under sign flip by construction.
  std::vector<Vec> attainment_set() const {
    if (is_zero()) fail(errc::zero_operator, "attainment set of the zero operator");
    Scalar norm = op_norm();
    std::vector<Vec> out;
    for (const Vec& g : domain_->generators()) {
      if (codomain_->gauge(apply(g)) == norm) {
        out.push_back(g);
        out.push_back(vec_neg(g));
      }
    }
    std::sort(out.begin(), out.end(), VecLess{});
    return out;
  }

  /// Every (generator, facet, sign) triple satisfied with equality.
  /// Requires op_norm <= 1; empty exactly when op_norm < 1.
  std::vector<ActivePair> active_set() const {
    if (Scalar::compare(op_norm(), Scalar(1)) > 0)
      fail(errc::norm_exceeds_one, "active set requires a contraction");
    std::vector<ActivePair> out;
    const auto& reps = codomain_->facet_reps();
    for (std::size_t i = 0; i < domain_->generators().size(); ++i) {
      Vec image = apply(domain_->generators()[i]);
      for (std::size_t j = 0; j < reps.size(); ++j) {
        Scalar v = dot(reps[j], image);
        if (v == Scalar(1))
          out.push_back({i, j, +1});
        else if (v == Scalar(-1))
          out.push_back({i, j, -1});
      }
    }
    return out;
  }

  Operator negated() const { return Operator(domain_, codomain_, -matrix_); }
  Operator scaled(const Scalar& c) const { return Operator(domain_, codomain_, c * matrix_); }
  Operator plus(const Operator& other) const {
    return Operator(domain_, codomain_, matrix_ + other.matrix_);
  }

  friend bool operator==(const Operator& a, const Operator& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  SpacePtr domain_, codomain_;
  Mat matrix_;
};

struct OperatorLess {
  bool operator()(const Operator& a, const Operator& b) const {
    return mat_compare(a.matrix(), b.matrix()) < 0;
  }
};

}  // namespace ec
