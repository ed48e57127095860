#include "dyb/rota.hpp"

namespace dyb {

namespace {

void require_action(const DynAction& act, const char* who) {
  Verdict v = verify_action(act);
  if (!v.passed)
    throw PreconditionError(std::string(who) + ": unverified action: " +
                            to_json_line(v));
}

void require_rbo(const RelRBO& r, const char* who) {
  Verdict v = verify_rbo(r);
  if (!v.passed)
    throw PreconditionError(std::string(who) + ": unverified operator: " +
                            to_json_line(v));
}

}  // namespace

DynAction::DynAction(DynGroup actor, DynGroup constant_h, Table3 phi_act)
    : g(std::move(actor)), h(std::move(constant_h)), act(std::move(phi_act)) {
  if (g.l() != h.l()) throw ShapeError("DynAction: parameter sets differ");
  const int l = g.l(), ng = g.n(), nh = h.n();
  if (act.dim0() != l || act.dim1() != ng || act.dim2() != nh)
    throw ShapeError("DynAction: phi_act must be L x |G| x |H|");
  if (!act.entries_in_range(nh)) throw ShapeError("DynAction: entry out of range");
  act_inv = Table3(l, ng, nh, -1);
  std::vector<int> row(static_cast<size_t>(nh));
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < ng; ++a) {
      for (int x = 0; x < nh; ++x) row[static_cast<size_t>(x)] = act.at(lam, a, x);
      if (!is_permutation_row(row, nh))
        throw DomainError("DynAction: entry at (lambda=" + std::to_string(lam) +
                          ", a=" + std::to_string(a) + ") is not a permutation");
      for (int x = 0; x < nh; ++x) act_inv.at(lam, a, row[static_cast<size_t>(x)]) = x;
    }
}

Verdict verify_action(const DynAction& act) {
  {
    Verdict v = verify_dyn_group(act.g);
    if (!v.passed)
      throw PreconditionError("verify_action: actor fails verification: " +
                              to_json_line(v));
    v = verify_dyn_group(act.h);
    if (!v.passed)
      throw PreconditionError("verify_action: acted-on group fails verification: " +
                              to_json_line(v));
    if (!is_constant(act.h))
      throw PreconditionError("verify_action: acted-on group is not constant");
  }
  const DynGroup& g = act.g;
  const DynGroup& h = act.h;
  const int l = g.l(), ng = g.n(), nh = h.n();
  // multiplicativity in H
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < ng; ++a)
      for (int x = 0; x < nh; ++x)
        for (int y = 0; y < nh; ++y) {
          int lhs = act.apply(lam, a, h.op(g.phi(lam, a), x, y));
          int rhs = h.op(lam, act.apply(lam, a, x), act.apply(lam, a, y));
          if (lhs != rhs)
            return Verdict::fail("action-1", {lam, a, x, y}, {lhs}, {rhs});
        }
  // compositionality in G
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < ng; ++b)
        for (int x = 0; x < nh; ++x) {
          int lhs = act.apply(lam, g.op(lam, a, b), x);
          int rhs = act.apply(lam, a, act.apply(g.phi(lam, a), b, x));
          if (lhs != rhs)
            return Verdict::fail("action-2", {lam, a, b, x}, {lhs}, {rhs});
        }
  return Verdict::ok();
}

RelRBO::RelRBO(DynAction act, std::vector<int> b) : action(std::move(act)), b_map(std::move(b)) {
  const int ng = action.g.n(), nh = action.h.n();
  if (static_cast<int>(b_map.size()) != nh)
    throw ShapeError("RelRBO: b_map must have |H| entries");
  for (int v : b_map)
    if (v < 0 || v >= ng) throw ShapeError("RelRBO: b_map entry out of range");
}

Verdict verify_rbo(const RelRBO& r) {
  require_action(r.action, "verify_rbo");
  const DynGroup& g = r.action.g;
  const DynGroup& h = r.action.h;
  if (r.b(h.unit) != g.unit)
    return Verdict::fail("rbo-unit", {h.unit}, {r.b(h.unit)}, {g.unit});
  for (int lam = 0; lam < g.l(); ++lam)
    for (int x = 0; x < h.n(); ++x)
      for (int y = 0; y < h.n(); ++y) {
        int lhs = g.op(lam, r.b(x), r.b(y));
        int rhs = r.b(h.op(lam, x, r.action.apply(lam, r.b(x), y)));
        if (lhs != rhs) return Verdict::fail("rbo", {lam, x, y}, {lhs}, {rhs});
      }
  return Verdict::ok();
}

DynGroup semidirect(const DynAction& act) {
  require_action(act, "semidirect");
  const DynGroup& g = act.g;
  const DynGroup& h = act.h;
  const int l = g.l(), ng = g.n(), nh = h.n(), np = nh * ng;
  Table2 phi(l, np);
  Table3 prod(l, np, np);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < nh; ++x)
      for (int a = 0; a < ng; ++a)
        phi.at(lam, pair_index(x, a, ng)) = g.phi(lam, a);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < nh; ++x)
      for (int a = 0; a < ng; ++a)
        for (int y = 0; y < nh; ++y)
          for (int b = 0; b < ng; ++b)
            prod.at(lam, pair_index(x, a, ng), pair_index(y, b, ng)) =
                pair_index(h.op(lam, x, act.apply(lam, a, y)), g.op(lam, a, b), ng);
  DynGroup sd(DynSet(l, np, std::move(phi)), std::move(prod),
              pair_index(h.unit, g.unit, ng));
  Verdict v = verify_dyn_group(sd);
  if (!v.passed)
    throw InconsistencyError("semidirect: result failed verification: " +
                             to_json_line(v));
  sd.inverse = inverse_table(sd);
  return sd;
}

Verdict graph_is_subgroup(const RelRBO& r) {
  DynGroup sd = semidirect(r.action);
  const DynGroup& h = r.action.h;
  const int ng = r.action.g.n();
  if (r.b(h.unit) != r.action.g.unit)
    return Verdict::fail("graph-unit", {h.unit}, {r.b(h.unit)}, {r.action.g.unit});
  for (int lam = 0; lam < sd.l(); ++lam)
    for (int x = 0; x < h.n(); ++x)
      for (int y = 0; y < h.n(); ++y) {
        int p = sd.op(lam, pair_index(x, r.b(x), ng), pair_index(y, r.b(y), ng));
        auto [z, c] = pair_decode(p, ng);
        if (c != r.b(z))
          return Verdict::fail("graph-closure", {lam, x, y}, {z, c}, {z, r.b(z)});
      }
  for (int lam = 0; lam < sd.l(); ++lam)
    for (int x = 0; x < h.n(); ++x) {
      auto [z, c] = pair_decode(sd.inv(lam, pair_index(x, r.b(x), ng)), ng);
      if (c != r.b(z))
        return Verdict::fail("graph-inverse", {lam, x}, {z, c}, {z, r.b(z)});
    }
  return Verdict::ok();
}

DynGroup descendant(const RelRBO& r) {
  require_rbo(r, "descendant");
  const DynGroup& g = r.action.g;
  const DynGroup& h = r.action.h;
  const int l = h.l(), n = h.n();
  Table2 phi(l, n);
  Table3 prod(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x) {
      phi.at(lam, x) = g.phi(lam, r.b(x));
      for (int y = 0; y < n; ++y)
        prod.at(lam, x, y) = h.op(lam, x, r.action.apply(lam, r.b(x), y));
    }
  DynGroup d(DynSet(l, n, std::move(phi)), std::move(prod), h.unit);
  Verdict v = verify_dyn_group(d);
  if (!v.passed)
    throw InconsistencyError("descendant: result failed verification: " +
                             to_json_line(v));
  d.inverse = inverse_table(d);
  // B lifted to a constant family is a homomorphism into the actor
  Table2 bf(l, n);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x) bf.at(lam, x) = r.b(x);
  Verdict hom = verify_dyn_group_hom(DynSetMorphism(d.base, g.base, std::move(bf)), d, g);
  if (!hom.passed)
    throw InconsistencyError("descendant: lifted operator is not a homomorphism: " +
                             to_json_line(hom));
  return d;
}

DynGroup factorization_group(const RelRBO& r) {
  require_rbo(r, "factorization_group");
  DynGroup sd = semidirect(r.action);
  DynGroup g = r.action.g;
  if (!g.has_inverse()) g.inverse = inverse_table(g);
  const DynGroup& h = r.action.h;
  const int l = g.l(), ng = g.n(), nh = h.n(), np = nh * ng;

  // xi(lambda)(x, a) = (x, B(x) o a); its inverse composes at phi_B(lambda, x)
  auto xi = [&](int lam, int x, int a) {
    return pair_index(x, g.op(lam, r.b(x), a), ng);
  };
  auto xi_inv = [&](int lam, int x, int a) {
    int bx = r.b(x);
    return pair_index(x, g.op(g.phi(lam, bx), g.inv(lam, bx), a), ng);
  };

  Table2 phi(l, np);
  Table3 prod(l, np, np);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < nh; ++x)
      for (int a = 0; a < ng; ++a)
        phi.at(lam, pair_index(x, a, ng)) = g.phi(lam, g.op(lam, r.b(x), a));
  // conjugation follows the tensor rule: the second factor is transported
  // at the shifted parameter phi~(lambda, first)
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < nh; ++x)
      for (int a = 0; a < ng; ++a)
        for (int y = 0; y < nh; ++y)
          for (int b = 0; b < ng; ++b) {
            int mu = phi.at(lam, pair_index(x, a, ng));
            int prod_sd = sd.op(lam, xi(lam, x, a), xi(mu, y, b));
            auto [z, c] = pair_decode(prod_sd, ng);
            prod.at(lam, pair_index(x, a, ng), pair_index(y, b, ng)) =
                xi_inv(lam, z, c);
          }
  DynGroup f(DynSet(l, np, std::move(phi)), std::move(prod),
             pair_index(h.unit, g.unit, ng));
  Verdict v = verify_dyn_group(f);
  if (!v.passed)
    throw InconsistencyError("factorization_group: result failed verification: " +
                             to_json_line(v));
  f.inverse = inverse_table(f);

  // H x {e} and {e} x G are dynamical subgroups meeting only in the unit
  for (int lam = 0; lam < l; ++lam) {
    for (int x = 0; x < nh; ++x)
      for (int y = 0; y < nh; ++y)
        if (pair_decode(f.op(lam, pair_index(x, g.unit, ng),
                             pair_index(y, g.unit, ng)), ng).second != g.unit)
          throw InconsistencyError("factorization_group: H x {e} not closed");
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < ng; ++b)
        if (pair_decode(f.op(lam, pair_index(h.unit, a, ng),
                             pair_index(h.unit, b, ng)), ng).first != h.unit)
          throw InconsistencyError("factorization_group: {e} x G not closed");
    for (int x = 0; x < nh; ++x)
      if (pair_decode(f.inv(lam, pair_index(x, g.unit, ng)), ng).second != g.unit)
        throw InconsistencyError("factorization_group: H x {e} not inverse-closed");
    for (int a = 0; a < ng; ++a)
      if (pair_decode(f.inv(lam, pair_index(h.unit, a, ng)), ng).first != h.unit)
        throw InconsistencyError("factorization_group: {e} x G not inverse-closed");
    for (int x = 0; x < nh; ++x)
      for (int a = 0; a < ng; ++a)
        if (f.op(lam, pair_index(x, g.unit, ng), pair_index(h.unit, a, ng)) !=
            pair_index(x, a, ng))
          throw InconsistencyError("factorization_group: (x,e)*(e,a) != (x,a)");
  }
  return f;
}

MatchedPair rbo_to_matched_pair(const RelRBO& r) {
  require_rbo(r, "rbo_to_matched_pair");
  DynGroup g = r.action.g;
  if (!g.has_inverse()) g.inverse = inverse_table(g);
  DynGroup d = descendant(r);
  const int l = g.l(), ng = g.n(), nh = d.n();
  Table3 rharp(l, ng, nh), lharp(l, ng, nh);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < ng; ++a)
      for (int x = 0; x < nh; ++x) {
        int u = r.action.apply(lam, a, x);
        rharp.at(lam, a, x) = u;
        int bu = r.b(u);
        lharp.at(lam, a, x) =
            g.op(g.phi(lam, bu), g.inv(lam, bu), g.op(lam, a, r.b(x)));
      }
  MatchedPair mp(std::move(g), std::move(d), std::move(rharp), std::move(lharp));
  Verdict v = verify_matched_pair(mp);
  if (!v.passed)
    throw InconsistencyError("rbo_to_matched_pair: result failed verification: " +
                             to_json_line(v));
  return mp;
}

Braiding rbo_solution(const RelRBO& r) {
  require_rbo(r, "rbo_solution");
  DynGroup d = descendant(r);
  const int l = d.l(), n = d.n();
  Table3 vphi(l, n, n), psi(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int u = r.action.apply(lam, r.b(x), y);
        vphi.at(lam, x, y) = u;
        psi.at(lam, x, y) = d.op(d.phi(lam, u), d.inv(lam, u), d.op(lam, x, y));
      }
  Braiding sol(d.base, std::move(vphi), std::move(psi));
  Verdict v = check_dybe(sol);
  if (!v.passed)
    throw InconsistencyError("rbo_solution: induced map fails the braid relation: " +
                             to_json_line(v));
  return sol;
}

}  // namespace dyb
