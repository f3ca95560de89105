#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ec/operator.hpp"

namespace ec::catalog {

namespace detail {

inline Scalar rat(long long num, long long den = 1) { return Scalar(Rat(num, den)); }

/// b/q * sqrt(d)
inline Scalar radical(long long b, long long q, std::int64_t d) {
  return Scalar(Rat(0), Rat(b, q), d);
}

inline int parse_indexed(std::string_view name, std::string_view prefix) {
  // "<prefix>M" or "<prefix>(M)" for a single digit M; -1 when not matched
  if (name.substr(0, prefix.size()) != prefix) return -1;
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() == 1 && rest[0] >= '1' && rest[0] <= '9') return rest[0] - '0';
  if (rest.size() == 3 && rest[0] == '(' && rest[2] == ')' && rest[1] >= '1' && rest[1] <= '9')
    return rest[1] - '0';
  return -1;
}

}  // namespace detail

/// Canonical space names (sup-norm cubes, cross polytopes, the plane
/// fixtures, and the 3-D eight-vertex fixture).
inline std::vector<std::string> space_names() {
  return {"linf1", "linf2", "linf3", "linf4", "l11", "l12", "l13", "l14",
          "hexagon", "octagon", "affine_hexagon", "xp8"};
}

inline std::vector<std::string> operator_names() { return {"ex1", "ex2", "ex3"}; }

inline SpacePtr get_space(std::string_view name) {
  using detail::radical;
  using detail::rat;

  if (int m = detail::parse_indexed(name, "linf"); m >= 1) {
    if (m > 4) fail(errc::unknown_name, "sup-norm cube fixtures stop at linf4");
    // sign vectors with first coordinate fixed to +1, one per +/- pair
    std::vector<Vec> gens;
    for (std::size_t bits = 0; bits < (std::size_t{1} << (m - 1)); ++bits) {
      Vec g(static_cast<std::size_t>(m), rat(1));
      for (int k = 1; k < m; ++k)
        if (bits & (std::size_t{1} << (k - 1))) g[static_cast<std::size_t>(k)] = rat(-1);
      gens.push_back(std::move(g));
    }
    return Space::make("linf" + std::to_string(m), static_cast<std::size_t>(m),
                       Field(1), std::move(gens));
  }

  if (int m = detail::parse_indexed(name, "l1"); m >= 1) {
    if (m > 4) fail(errc::unknown_name, "cross polytope fixtures stop at l14");
    std::vector<Vec> gens;
    for (int j = 0; j < m; ++j) {
      Vec g(static_cast<std::size_t>(m), rat(0));
      g[static_cast<std::size_t>(j)] = rat(1);
      gens.push_back(std::move(g));
    }
    return Space::make("l1" + std::to_string(m), static_cast<std::size_t>(m),
                       Field(1), std::move(gens));
  }

  if (name == "hexagon") {
    // regular hexagon: (1,0), (1/2, sqrt(3)/2), (-1/2, sqrt(3)/2), and signs
    std::vector<Vec> gens = {
        {rat(1), rat(0)},
        {rat(1, 2), radical(1, 2, 3)},
        {rat(-1, 2), radical(1, 2, 3)},
    };
    return Space::make("hexagon", 2, Field(3), std::move(gens));
  }

  if (name == "octagon") {
    // regular octagon: (1,0), (sqrt(2)/2, sqrt(2)/2), (0,1), (-sqrt(2)/2, sqrt(2)/2)
    std::vector<Vec> gens = {
        {rat(1), rat(0)},
        {radical(1, 2, 2), radical(1, 2, 2)},
        {rat(0), rat(1)},
        {radical(-1, 2, 2), radical(1, 2, 2)},
    };
    return Space::make("octagon", 2, Field(2), std::move(gens));
  }

  if (name == "affine_hexagon") {
    // rational hexagon with the same dependence structure: x3 = x2 - x1
    std::vector<Vec> gens = {
        {rat(1), rat(0)},
        {rat(1), rat(1)},
        {rat(0), rat(1)},
    };
    return Space::make("affine_hexagon", 2, Field(1), std::move(gens));
  }

  if (name == "xp8") {
    // conv(+/-e1, +/-e2, +/-e3, +/-(1,1,1)): eight extreme points in R^3
    std::vector<Vec> gens = {
        {rat(1), rat(0), rat(0)},
        {rat(0), rat(1), rat(0)},
        {rat(0), rat(0), rat(1)},
        {rat(1), rat(1), rat(1)},
    };
    return Space::make("xp8", 3, Field(1), std::move(gens));
  }

  fail(errc::unknown_name, "unknown catalog space: " + std::string(name));
}

inline Operator get_operator(std::string_view name) {
  using detail::radical;
  using detail::rat;

  if (name == "ex1") {
    // hexagon -> linf3, images of x1, x2
    return Operator::from_images(get_space("hexagon"), get_space("linf3"),
                                 {{rat(1), rat(-1), rat(0)},
                                  {rat(1), rat(0), rat(1)}});
  }
  if (name == "ex2") {
    // hexagon -> l13
    return Operator::from_images(get_space("hexagon"), get_space("l13"),
                                 {{rat(1, 2), rat(1, 2), rat(0)},
                                  {rat(0), rat(1, 2), rat(1, 2)}});
  }
  if (name == "ex3") {
    // octagon -> linf2
    return Operator::from_images(
        get_space("octagon"), get_space("linf2"),
        {{rat(1), radical(1, 1, 2) + rat(-1)},
         {radical(1, 1, 2) + rat(-1), rat(1)}});
  }
  fail(errc::unknown_name, "unknown catalog operator: " + std::string(name));
}

inline std::string space_note(std::string_view name) {
  if (detail::parse_indexed(name, "linf") >= 1)
    return "sup-norm cube: extreme points are all sign vectors";
  if (detail::parse_indexed(name, "l1") >= 1)
    return "cross polytope: extreme points are the signed coordinate vectors";
  if (name == "hexagon") return "regular hexagon over Q(sqrt(3)), six extreme points";
  if (name == "octagon") return "regular octagon over Q(sqrt(2)), eight extreme points";
  if (name == "affine_hexagon")
    return "rational six-vertex polygon with x3 = x2 - x1, an invertible image of the hexagon";
  if (name == "xp8")
    return "parallelepiped conv(+/-e1, +/-e2, +/-e3, +/-(1,1,1)), eight extreme points in R^3";
  fail(errc::unknown_name, "unknown catalog space: " + std::string(name));
}

inline std::string operator_note(std::string_view name) {
  if (name == "ex1")
    return "hexagon -> linf3 extreme contraction whose images avoid the codomain extreme points";
  if (name == "ex2")
    return "hexagon -> l13 extreme contraction whose images avoid the codomain extreme points";
  if (name == "ex3")
    return "octagon -> linf2 extreme contraction whose images avoid the codomain extreme points";
  fail(errc::unknown_name, "unknown catalog operator: " + std::string(name));
}

}  // namespace ec::catalog
