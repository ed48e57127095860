#ifndef DYB_MATCHED_HPP
#define DYB_MATCHED_HPP

#include "dyb/core.hpp"
#include "dyb/ybe.hpp"

namespace dyb {

/// A matched pair of dynamical groups (G, H, sigma) with mutual actions
/// sigma(lambda)(a, x) = (rharp(lambda,a,x), lharp(lambda,a,x)).
///
/// lharp is stored at the base parameter lambda: lharp(lambda, a, x) is the
/// left action of x on a whose decorated parameter is phi_G(lambda, a).
/// Every axiom below is expressed in this one convention.
struct MatchedPair {
  DynGroup g;    // (G, o), inverses derived
  DynGroup h;    // (H, .), inverses derived
  Table3 rharp;  // (lambda, a in G, x in H) -> H
  Table3 lharp;  // (lambda, a in G, x in H) -> G

  MatchedPair() = default;
  MatchedPair(DynGroup g_group, DynGroup h_group, Table3 r, Table3 l);
};

/// A matched pair of a group with itself whose actions recompose the
/// product: (a rharp b) o (a lharp b) = a o b.
struct BraidedGroup {
  DynGroup g;
  Table3 rharp, lharp;  // both valued in G

  BraidedGroup() = default;
  BraidedGroup(DynGroup group, Table3 r, Table3 l);
};

bool same_braided_tables(const BraidedGroup& a, const BraidedGroup& b);

/// Checks the sigma-morphism condition (mp-7) followed by mp-1..mp-6 on all
/// index tuples; the witness names the failing equation.
Verdict verify_matched_pair(const MatchedPair& mp);

/// The double group on H x G, element (x, a) encoded as x*|G| + a.
/// Re-verifies its output by default; a failure there raises
/// InconsistencyError (the product formula is the most index-error-prone in
/// the whole construction).
DynGroup double_group(const MatchedPair& mp, bool reverify = true);

/// Matched-pair axioms on (g, g, sigma) plus the recomposition identity.
Verdict verify_braided(const BraidedGroup& b);

/// View of a braided group as the matched pair (g, g, sigma).
MatchedPair braided_as_pair(const BraidedGroup& b);

/// The induced solution varphi = rharp, psi = lharp. Asserts weight zero,
/// the braid relation and non-degeneracy on the result; any failure raises
/// InconsistencyError.
Braiding braided_to_solution(const BraidedGroup& b);

/// Intertwining check (Psi x Psi)_lambda o sigma_lambda =
/// sigma'_lambda o (Psi x Psi)_lambda with the tensor rule
/// (Psi x Psi)_lambda(a,b) = (Psi_lambda(a), Psi_{phi(lambda,a)}(b)).
Verdict verify_braided_hom(const DynSetMorphism& psi, const BraidedGroup& src,
                           const BraidedGroup& dst);

/// Pair-index helpers for groups built on H x G.
inline int pair_index(int x, int a, int n_g) { return x * n_g + a; }
inline std::pair<int, int> pair_decode(int idx, int n_g) {
  return {idx / n_g, idx % n_g};
}

}  // namespace dyb

#endif
