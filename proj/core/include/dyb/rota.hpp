#ifndef DYB_ROTA_HPP
#define DYB_ROTA_HPP

#include <vector>

#include "dyb/core.hpp"
#include "dyb/matched.hpp"
#include "dyb/ybe.hpp"

namespace dyb {

/// An action of a dynamical group g on a constant dynamical group h,
/// stored as forward permutation rows act(lambda, a) : H -> H. The inverse
/// permutations are materialized at construction time so later reads are
/// contention-free; a non-permutation row raises DomainError naming
/// (lambda, a).
struct DynAction {
  DynGroup g;      // actor, inverses derived
  DynGroup h;      // acted-on, constant
  Table3 act;      // (lambda, a, x) -> Phi_lambda(a)(x)
  Table3 act_inv;  // derived inverse rows

  DynAction() = default;
  DynAction(DynGroup actor, DynGroup constant_h, Table3 phi_act);

  int apply(int lam, int a, int x) const { return act.at(lam, a, x); }
  int apply_inv(int lam, int a, int x) const { return act_inv.at(lam, a, x); }
};

/// Multiplicativity in H and compositionality in G.
Verdict verify_action(const DynAction& act);

/// A relative Rota-Baxter operator candidate: a plain parameter-free map
/// b_map : H -> G over an action.
struct RelRBO {
  DynAction action;
  std::vector<int> b_map;

  RelRBO() = default;
  RelRBO(DynAction act, std::vector<int> b);

  int b(int x) const { return b_map[static_cast<size_t>(x)]; }
};

/// B(x) o_lambda B(y) = B(x . Phi_lambda(B(x))(y)) for all (lambda, x, y),
/// plus B(e_H) = e_G reported as the distinct witness kind "rbo-unit".
Verdict verify_rbo(const RelRBO& r);

/// Semi-direct product group on H x G, element (x, a) encoded x*|G| + a.
DynGroup semidirect(const DynAction& act);

/// Graph criterion: Gr(B) = {(x, B(x))} closed under the semi-direct
/// product, containing the unit pair and closed under inversion. Equivalent
/// to verify_rbo; only the action is required to verify beforehand.
Verdict graph_is_subgroup(const RelRBO& r);

/// Descendant group on H: x o^B y = x . Phi_lambda(B(x))(y) with structure
/// map phi_B(lambda, x) = phi_G(lambda, B(x)).
DynGroup descendant(const RelRBO& r);

/// The factorization group on H x G obtained by conjugating the semi-direct
/// product with xi(x, a) = (x, B(x) o a). Asserts that the result verifies,
/// that H x {e} and {e} x G are dynamical subgroups meeting only in the unit
/// pair, and that every (x, a) factors as (x, e) * (e, a).
DynGroup factorization_group(const RelRBO& r);

/// The induced matched pair (g, descendant(r), sigma) with
/// a rharp x = Phi_lambda(a)(x).
MatchedPair rbo_to_matched_pair(const RelRBO& r);

/// The induced solution on the descendant group.
Braiding rbo_solution(const RelRBO& r);

}  // namespace dyb

#endif
