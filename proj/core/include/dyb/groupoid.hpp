#ifndef DYB_GROUPOID_HPP
#define DYB_GROUPOID_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dyb/core.hpp"
#include "dyb/matched.hpp"
#include "dyb/ybe.hpp"

namespace dyb {

/// A finite groupoid with explicit source/target/unit/inverse tables and a
/// sparse partial composition keyed by composable pairs. Evaluating comp off
/// its domain is an error, never a default value.
///
/// `key` carries a structured identity per morphism so canonical
/// relabelings need no isomorphism search: (lambda, element) for images of
/// the quiver embedding, (h-morphism, g-morphism) for vacant doubles.
struct Groupoid {
  int num_objects = 0;
  std::vector<int> src, tgt;              // per morphism
  std::vector<int> unit_of;               // per object
  std::vector<int> inv;                   // per morphism
  std::map<std::pair<int, int>, int> comp;
  std::vector<std::array<int, 2>> key;

  int num_morphisms() const { return static_cast<int>(src.size()); }
  bool composable(int m1, int m2) const { return tgt[m1] == src[m2]; }
  int compose(int m1, int m2) const;  // DomainError off-domain
};

Verdict verify_groupoid(const Groupoid& c);

struct Quiver {
  int num_objects = 0;
  std::vector<int> src, tgt;  // per arrow
  int num_arrows() const { return static_cast<int>(src.size()); }
};

/// A partial bijection on composable arrow pairs preserving sources and
/// targets of pairs.
struct QuiverBraiding {
  Quiver quiver;
  std::map<std::pair<int, int>, std::pair<int, int>> r;
};

/// The embedding of a dynamical group: objects = parameters, morphisms =
/// (lambda, a) with source lambda, target phi(lambda, a), composition
/// (lambda, a)(mu, b) = (lambda, a o_lambda b) for mu = phi(lambda, a).
/// Morphism index = lambda * N + a.
Groupoid functor_q(const DynGroup& g);

/// Quiver underlying functor_q (same arrows, no composition).
Quiver quiver_of(const DynSet& s);

/// Two groupoids over the same objects with a partial map sigma defined on
/// pairs (gamma in g, delta in h) with tgt(gamma) = src(delta), valued in
/// pairs (delta', gamma') with tgt(delta') = src(gamma').
struct GroupoidMatchedPair {
  Groupoid g, h;
  std::map<std::pair<int, int>, std::pair<int, int>> sigma;
};

/// Quiver-homomorphism condition plus the six matched-pair identities on
/// all composable configurations.
Verdict verify_groupoid_matched_pair(const GroupoidMatchedPair& mp);

/// Image of a matched pair of dynamical groups under the embedding.
GroupoidMatchedPair mp_to_groupoid_mp(const MatchedPair& mp);

/// Groupoid on the composable pairs (delta, gamma) with tgt_h(delta) =
/// src_g(gamma); morphism keys are the (delta, gamma) pairs themselves.
Groupoid vacant_double(const GroupoidMatchedPair& mp);

struct BraidedGroupoid {
  Groupoid g;
  std::map<std::pair<int, int>, std::pair<int, int>> sigma;
};

/// Matched-pair axioms of (g, g, sigma) plus the recomposition identity
/// (gamma rharp delta) * (gamma lharp delta) = gamma * delta.
Verdict verify_braided_groupoid(const BraidedGroupoid& b);

/// sigma-hat on functor_q of a braided dynamical group.
BraidedGroupoid braided_groupoid_from_bdg(const BraidedGroup& b);

/// R12 R23 R12 = R23 R12 R23 on every composable arrow triple.
Verdict quiver_ybe_check(const QuiverBraiding& qb);

/// Conjugates a braiding that passes the dynamical braid relation with the
/// canonical composable-pair identification (lambda, x, mu, y) <-> (lambda,
/// x, y), mu = phi(lambda, x).
QuiverBraiding br_q(const DynSet& base, const Braiding& r);

/// True iff br_q of the induced solution equals the sigma-hat of
/// braided_groupoid_from_bdg as partial maps on composable pairs.
bool diagram_commutes(const BraidedGroup& b);

/// Optional display names for DOT export; empty vectors fall back to
/// generated names.
struct DotNames {
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
};

/// Deterministic DOT digraph: one node per object, one labeled edge per
/// non-unit morphism, unit loops included when unit_loops is set. Nodes and
/// edges are emitted in sorted order so output is byte-identical across
/// runs.
std::string export_dot(const Groupoid& g, const DotNames& names = {},
                       bool unit_loops = false);
std::string export_dot(const Quiver& q, const DotNames& names = {});

}  // namespace dyb

#endif
