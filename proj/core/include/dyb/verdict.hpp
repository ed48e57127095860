#ifndef DYB_VERDICT_HPP
#define DYB_VERDICT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dyb {

/// Location and values of the first violated axiom found by a verifier.
/// Index tuples are reported lexicographically smallest under the ordering
/// used by the verifier's scan (lambda first, then elements).
struct Witness {
  std::string axiom;
  std::vector<int> tuple;
  std::vector<int> lhs;
  std::vector<int> rhs;
  std::string detail;  // optional intermediate-state chain
};

struct Verdict {
  bool passed = true;
  std::optional<Witness> witness;

  static Verdict ok() { return Verdict{}; }
  static Verdict fail(Witness w) { return Verdict{false, std::move(w)}; }
  static Verdict fail(std::string axiom, std::vector<int> tuple,
                      std::vector<int> lhs, std::vector<int> rhs,
                      std::string detail = {}) {
    return fail(Witness{std::move(axiom), std::move(tuple), std::move(lhs),
                        std::move(rhs), std::move(detail)});
  }

  explicit operator bool() const { return passed; }
};

/// Single-line JSON rendering, stable across runs for identical inputs.
std::string to_json_line(const Verdict& v);

}  // namespace dyb

#endif
