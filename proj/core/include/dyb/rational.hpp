#ifndef DYB_RATIONAL_HPP
#define DYB_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "dyb/verdict.hpp"

// Exact-rational samplers for the two closed-form exemplars over the reals:
//
//   example_2_6  the dynamical group  phi(l,a) = l(la+1),
//                a o_l b = a + (la+1)^2 b, unit 0, inverse -a/(la+1)^2
//   example_4_2  the post-group  dot = +, a |>_l b = (la+1)^2 b, same phi
//
// Identities are checked in exact rational arithmetic at sampled points
// satisfying the pole-avoidance predicate la + 1 != 0; a failure is an
// implementation error, never an input failure, and the witness carries the
// exact rational tuple.

namespace dyb {

struct RationalSampler {
  std::string exemplar;  // "example_2_6" | "example_4_2"
  int count = 100;
  std::uint64_t seed = 0;
};

Verdict run_rational_suite(const RationalSampler& s);

/// Spot values as exact decimal/fraction strings, independent of sampling:
/// product(1,1,1) = "5", phi(1,1) = "2", inverse(1,1) = "-1/4".
std::string rational_product(const std::string& lam, const std::string& a,
                             const std::string& b);
std::string rational_phi(const std::string& lam, const std::string& a);
std::string rational_inverse(const std::string& lam, const std::string& a);
std::string rational_tri(const std::string& lam, const std::string& a,
                         const std::string& b);

}  // namespace dyb

#endif
