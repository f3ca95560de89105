#pragma once

#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ec/extremal.hpp"

namespace ec {

enum class Property { weak_lp, lp };
enum class Theorem { th1, th2 };

inline const char* property_name(Property p) {
  return p == Property::weak_lp ? "weak-lp" : "lp";
}

/// One failed vertex (or, for the lp converse direction, a failed
/// extreme-image candidate) with its certificate and image list.
struct Violation {
  Operator vertex;
  Certificate certificate;
  std::vector<Vec> images;
  std::string reason;
};

struct AuditReport {
  std::string domain, codomain;
  Property property = Property::weak_lp;
  std::size_t vertex_count = 0;
  bool holds = false;
  std::vector<Violation> violations;
};

/// True iff Y's extreme points are exactly the sign vectors {-1,+1}^m.
inline bool is_sup_cube(const Space& y) {
  std::size_t m = y.dim();
  if (m >= 8 * sizeof(std::size_t) - 1) return false;
  if (y.generators().size() != (std::size_t{1} << (m - 1))) return false;
  for (const Vec& g : y.generators())
    for (const Scalar& c : g)
      if (c != Scalar(1) && c != Scalar(-1)) return false;
  return true;
}

/// True iff Y's extreme points are exactly the signed coordinate vectors.
inline bool is_cross_polytope(const Space& y) {
  if (y.generators().size() != y.dim()) return false;
  for (const Vec& g : y.generators()) {
    std::size_t nonzero = 0;
    for (const Scalar& c : g) {
      if (c.is_zero()) continue;
      ++nonzero;
      if (c != Scalar(1) && c != Scalar(-1)) return false;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

/// Checks the hypothesis of the weak L-P theorems on a concrete pair:
/// |E_X| = 2n+2 together with the codomain being the sup-norm cube with
/// m <= n (th1), or the cross polytope with m(m-1) <= n (th2).
inline bool verify_theorem_precondition(const Space& x, const Space& y, Theorem t) {
  if (x.generators().size() != x.dim() + 1) return false;
  std::size_t n = x.dim(), m = y.dim();
  if (t == Theorem::th1) return is_sup_cube(y) && m <= n;
  return is_cross_polytope(y) && m * (m - 1) <= n;
}

namespace detail {

inline unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = worker_count(threads);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, w, &fn, &errors] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// Enumerates every extreme contraction of L(X, Y) and evaluates the chosen
/// property on each. For lp the converse direction is also checked over the
/// finite family of operators assigning extreme points of Y to the
/// independent generators of X. Per-vertex work fans out over `threads`
/// workers (0 = hardware default); the report is assembled in canonical
/// order, so output is identical for every thread count.
///
/// A weak-lp failure on a pair that satisfies a verified theorem
/// precondition is a falsification event and aborts with errc::falsification.
inline AuditReport audit_pair(SpacePtr x, SpacePtr y, Property property,
                              unsigned threads = 0) {
  AuditReport report;
  report.domain = x->name();
  report.codomain = y->name();
  report.property = property;

  VertexSet vs = enumerate_vertices(build_ball(x, y));
  report.vertex_count = vs.count();

  struct PerVertex {
    bool span_ok = true;
    std::optional<Violation> v;
  };
  std::vector<PerVertex> results(vs.count());

  detail::parallel_for(vs.count(), threads, [&](std::size_t i) {
    const Operator& t = vs.vertices[i];
    PerVertex& r = results[i];
    r.span_ok = span_check(t);
    if (property == Property::weak_lp) {
      WeakLpResult w = weak_lp_holds(t);
      if (!w.holds)
        r.v = Violation{t, is_extreme(t), w.images,
                        "image of every extreme point misses the codomain extreme points"};
    } else {
      if (!lp_image_check(t)) {
        WeakLpResult w = weak_lp_holds(t);
        r.v = Violation{t, is_extreme(t), w.images,
                        "extreme contraction with an image outside the codomain extreme points"};
      }
    }
  });

  for (auto& r : results) {
    if (!r.span_ok)
      fail(errc::falsification,
           "enumerated extreme contraction whose attainment set does not span the domain in (" +
               report.domain + ", " + report.codomain + ")");
    if (r.v) report.violations.push_back(std::move(*r.v));
  }

  if (property == Property::lp) {
    // Converse: every norm-one operator with all extreme images must be a
    // vertex. Operators with image inside E_Y are exactly the assignments of
    // extreme points of Y to the independent generators of X that stay
    // consistent on the dependent ones.
    const auto& ey = y->extreme_points();
    std::size_t n = x->dim();
    std::vector<std::size_t> pick(n, 0);
    bool done = false;
    while (!done) {
      std::vector<Vec> images;
      images.reserve(n);
      for (std::size_t k = 0; k < n; ++k) images.push_back(ey[pick[k]]);
      Operator cand = Operator::from_images(x, y, images);
      if (cand.op_norm() == Scalar(1) && lp_image_check(cand) && !vs.contains(cand)) {
        Certificate c = is_extreme(cand);
        report.violations.push_back(
            Violation{cand, std::move(c), weak_lp_holds(cand).images,
                      "norm-one operator maps extreme points onto extreme points "
                      "but is not an extreme contraction"});
      }
      std::size_t k = 0;
      for (; k < n; ++k) {
        if (++pick[k] < ey.size()) break;
        pick[k] = 0;
      }
      done = (k == n);
    }
  }

  report.holds = report.violations.empty();

  if (property == Property::weak_lp && !report.holds &&
      (verify_theorem_precondition(*x, *y, Theorem::th1) ||
       verify_theorem_precondition(*x, *y, Theorem::th2))) {
    std::string msg = "weak L-P failed on a pair satisfying a verified theorem "
                      "precondition: (" + report.domain + ", " + report.codomain +
                      "); violating vertices:";
    for (const Violation& v : report.violations) {
      msg += " [";
      for (std::size_t r = 0; r < v.vertex.matrix().rows; ++r) {
        if (r) msg += "; ";
        for (std::size_t c = 0; c < v.vertex.matrix().cols; ++c) {
          if (c) msg += ", ";
          msg += v.vertex.matrix()(r, c).str();
        }
      }
      msg += "]";
    }
    fail(errc::falsification, msg);
  }
  return report;
}

enum class Claim { i, ii };

/// Exhaustive check of the support-family combinatorics over multisets of k
/// subsets of {1..m}, each of size >= 2 (supports of non-extreme unit
/// vectors of the cross-polytope norm).
struct LemmaReport {
  int m = 0;
  long long k = 0;
  Claim claim = Claim::i;
  bool holds = false;
  unsigned long long families_checked = 0;
  std::vector<std::vector<int>> counterexample;  // first failing family, if any
};

/// Claim i  (k > m(m-1)): every family contains three members sharing at
///           least two common elements.
/// Claim ii (k = m(m-1)): every family in which no three members share two
///           elements consists solely of 2-sets, with each 2-subset of
///           {1..m} appearing exactly twice.
inline LemmaReport lemma_check(int m, long long k, Claim claim) {
  if (m < 2) fail(errc::precondition_violated, "lemma requires m >= 2");
  if (m > 4) fail(errc::too_large, "exhaustive lemma check is limited to m <= 4");
  long long mm = static_cast<long long>(m) * (m - 1);
  if (claim == Claim::i && k <= mm)
    fail(errc::precondition_violated,
         "claim i requires k > m(m-1) = " + std::to_string(mm));
  if (claim == Claim::ii && k != mm)
    fail(errc::precondition_violated,
         "claim ii requires k = m(m-1) = " + std::to_string(mm));

  // Admissible member sets as bitmasks over m elements, ascending.
  std::vector<unsigned> members;
  for (unsigned mask = 0; mask < (1u << m); ++mask)
    if (__builtin_popcount(mask) >= 2) members.push_back(mask);

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) pairs.emplace_back(a, b);

  LemmaReport report{m, k, claim, true, 0, {}};
  std::vector<int> family;                 // indices into members, non-decreasing
  std::vector<int> pair_count(pairs.size(), 0);

  auto family_sets = [&]() {
    std::vector<std::vector<int>> out;
    for (int idx : family) {
      std::vector<int> s;
      for (int e = 0; e < m; ++e)
        if (members[idx] & (1u << e)) s.push_back(e + 1);
      out.push_back(std::move(s));
    }
    return out;
  };

  // Three members share a pair {a,b} iff that pair lies in >= 3 members.
  auto inspect = [&]() {
    ++report.families_checked;
    bool triple = false;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pair_count[p] >= 3) {
        triple = true;
        break;
      }
    if (claim == Claim::i) {
      if (!triple && report.holds) {
        report.holds = false;
        report.counterexample = family_sets();
      }
      return;
    }
    if (triple) return;  // hypothesis of claim ii not met by this family
    bool ok = true;
    for (int idx : family)
      if (__builtin_popcount(members[idx]) != 2) ok = false;
    for (std::size_t p = 0; ok && p < pairs.size(); ++p)
      if (pair_count[p] != 2) ok = false;
    if (!ok && report.holds) {
      report.holds = false;
      report.counterexample = family_sets();
    }
  };

  auto recurse = [&](auto&& self, int first) -> void {
    if (static_cast<long long>(family.size()) == k) {
      inspect();
      return;
    }
    for (int idx = first; idx < static_cast<int>(members.size()); ++idx) {
      family.push_back(idx);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        unsigned pm = (1u << pairs[p].first) | (1u << pairs[p].second);
        if ((members[idx] & pm) == pm) ++pair_count[p];
      }
      self(self, idx);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        unsigned pm = (1u << pairs[p].first) | (1u << pairs[p].second);
        if ((members[idx] & pm) == pm) --pair_count[p];
      }
      family.pop_back();
    }
  };
  recurse(recurse, 0);
  return report;
}

}  // namespace ec
