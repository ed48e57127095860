#include "dyb/matched.hpp"

namespace dyb {

namespace {

void require_verified(const DynGroup& g, const char* who) {
  Verdict v = verify_dyn_group(g);
  if (!v.passed)
    throw PreconditionError(std::string(who) + ": unverified group: " +
                            to_json_line(v));
}

}  // namespace

MatchedPair::MatchedPair(DynGroup g_group, DynGroup h_group, Table3 r, Table3 l)
    : g(std::move(g_group)), h(std::move(h_group)), rharp(std::move(r)),
      lharp(std::move(l)) {
  if (g.l() != h.l()) throw ShapeError("MatchedPair: parameter sets differ");
  int L = g.l(), ng = g.n(), nh = h.n();
  if (rharp.dim0() != L || rharp.dim1() != ng || rharp.dim2() != nh)
    throw ShapeError("MatchedPair: rharp must be L x |G| x |H|");
  if (lharp.dim0() != L || lharp.dim1() != ng || lharp.dim2() != nh)
    throw ShapeError("MatchedPair: lharp must be L x |G| x |H|");
  if (!rharp.entries_in_range(nh)) throw ShapeError("MatchedPair: rharp entry out of range");
  if (!lharp.entries_in_range(ng)) throw ShapeError("MatchedPair: lharp entry out of range");
}

BraidedGroup::BraidedGroup(DynGroup group, Table3 r, Table3 l)
    : g(std::move(group)), rharp(std::move(r)), lharp(std::move(l)) {
  int L = g.l(), n = g.n();
  for (const Table3* t : {&rharp, &lharp}) {
    if (t->dim0() != L || t->dim1() != n || t->dim2() != n)
      throw ShapeError("BraidedGroup: action tables must be LxNxN");
    if (!t->entries_in_range(n))
      throw ShapeError("BraidedGroup: action entry out of range");
  }
}

bool same_braided_tables(const BraidedGroup& a, const BraidedGroup& b) {
  return same_group_tables(a.g, b.g) && a.rharp == b.rharp && a.lharp == b.lharp;
}

Verdict verify_matched_pair(const MatchedPair& mp) {
  require_verified(mp.g, "verify_matched_pair");
  require_verified(mp.h, "verify_matched_pair");
  const DynGroup& g = mp.g;
  const DynGroup& h = mp.h;
  const int L = g.l(), ng = g.n(), nh = h.n();
  auto rh = [&](int lam, int a, int x) { return mp.rharp.at(lam, a, x); };
  auto lh = [&](int lam, int a, int x) { return mp.lharp.at(lam, a, x); };

  // mp-7: sigma is a morphism of dynamical sets G (x) H -> H (x) G
  for (int lam = 0; lam < L; ++lam)
    for (int a = 0; a < ng; ++a)
      for (int x = 0; x < nh; ++x) {
        int lhs = g.phi(h.phi(lam, rh(lam, a, x)), lh(lam, a, x));
        int rhs = h.phi(g.phi(lam, a), x);
        if (lhs != rhs) return Verdict::fail("mp-7", {lam, a, x}, {lhs}, {rhs});
      }
  // mp-1: e rharp x = x
  for (int lam = 0; lam < L; ++lam)
    for (int x = 0; x < nh; ++x)
      if (rh(lam, g.unit, x) != x)
        return Verdict::fail("mp-1", {lam, x}, {rh(lam, g.unit, x)}, {x});
  // mp-2
  for (int lam = 0; lam < L; ++lam)
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < ng; ++b)
        for (int x = 0; x < nh; ++x) {
          int lhs = rh(lam, g.op(lam, a, b), x);
          int rhs = rh(lam, a, rh(g.phi(lam, a), b, x));
          if (lhs != rhs)
            return Verdict::fail("mp-2", {lam, a, b, x}, {lhs}, {rhs});
        }
  // mp-3
  for (int lam = 0; lam < L; ++lam)
    for (int a = 0; a < ng; ++a)
      for (int x = 0; x < nh; ++x)
        for (int y = 0; y < nh; ++y) {
          int lhs = rh(lam, a, h.op(g.phi(lam, a), x, y));
          int ax = rh(lam, a, x);
          int rhs = h.op(lam, ax, rh(h.phi(lam, ax), lh(lam, a, x), y));
          if (lhs != rhs)
            return Verdict::fail("mp-3", {lam, a, x, y}, {lhs}, {rhs});
        }
  // mp-4: a lharp e = a
  for (int lam = 0; lam < L; ++lam)
    for (int a = 0; a < ng; ++a)
      if (lh(lam, a, h.unit) != a)
        return Verdict::fail("mp-4", {lam, a}, {lh(lam, a, h.unit)}, {a});
  // mp-5
  for (int lam = 0; lam < L; ++lam)
    for (int a = 0; a < ng; ++a)
      for (int x = 0; x < nh; ++x)
        for (int y = 0; y < nh; ++y) {
          int lhs = lh(lam, a, h.op(g.phi(lam, a), x, y));
          int rhs = lh(h.phi(lam, rh(lam, a, x)), lh(lam, a, x), y);
          if (lhs != rhs)
            return Verdict::fail("mp-5", {lam, a, x, y}, {lhs}, {rhs});
        }
  // mp-6
  for (int lam = 0; lam < L; ++lam)
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < ng; ++b)
        for (int x = 0; x < nh; ++x) {
          int ab = g.op(lam, a, b);
          int lhs = lh(lam, ab, x);
          int first = lh(lam, a, rh(g.phi(lam, a), b, x));
          int second = lh(g.phi(lam, a), b, x);
          int rhs = g.op(h.phi(lam, rh(lam, ab, x)), first, second);
          if (lhs != rhs)
            return Verdict::fail("mp-6", {lam, a, b, x}, {lhs}, {rhs});
        }
  return Verdict::ok();
}

DynGroup double_group(const MatchedPair& mp, bool reverify) {
  {
    Verdict v = verify_matched_pair(mp);
    if (!v.passed)
      throw PreconditionError("double_group: unverified matched pair: " +
                              to_json_line(v));
  }
  const DynGroup& g = mp.g;
  const DynGroup& h = mp.h;
  const int L = g.l(), ng = g.n(), nh = h.n(), np = nh * ng;

  Table2 phi(L, np);
  Table3 prod(L, np, np);
  for (int lam = 0; lam < L; ++lam)
    for (int x = 0; x < nh; ++x)
      for (int a = 0; a < ng; ++a)
        phi.at(lam, pair_index(x, a, ng)) = g.phi(h.phi(lam, x), a);
  for (int lam = 0; lam < L; ++lam)
    for (int x = 0; x < nh; ++x)
      for (int a = 0; a < ng; ++a)
        for (int y = 0; y < nh; ++y)
          for (int b = 0; b < ng; ++b) {
            int mu = h.phi(lam, x);
            int first = h.op(lam, x, mp.rharp.at(mu, a, y));
            int second = g.op(h.phi(lam, first), mp.lharp.at(mu, a, y), b);
            prod.at(lam, pair_index(x, a, ng), pair_index(y, b, ng)) =
                pair_index(first, second, ng);
          }
  DynGroup d(DynSet(L, np, std::move(phi)), std::move(prod),
             pair_index(h.unit, g.unit, ng));
  if (reverify) {
    Verdict v = verify_dyn_group(d);
    if (!v.passed)
      throw InconsistencyError("double_group: result failed verification: " +
                               to_json_line(v));
  }
  d.inverse = inverse_table(d);
  return d;
}

MatchedPair braided_as_pair(const BraidedGroup& b) {
  return MatchedPair(b.g, b.g, b.rharp, b.lharp);
}

Verdict verify_braided(const BraidedGroup& b) {
  Verdict v = verify_matched_pair(braided_as_pair(b));
  if (!v.passed) return v;
  const DynGroup& g = b.g;
  for (int lam = 0; lam < g.l(); ++lam)
    for (int a = 0; a < g.n(); ++a)
      for (int x = 0; x < g.n(); ++x) {
        int lhs = g.op(lam, b.rharp.at(lam, a, x), b.lharp.at(lam, a, x));
        int rhs = g.op(lam, a, x);
        if (lhs != rhs)
          return Verdict::fail("braided-com", {lam, a, x}, {lhs}, {rhs});
      }
  return Verdict::ok();
}

Braiding braided_to_solution(const BraidedGroup& b) {
  {
    Verdict v = verify_braided(b);
    if (!v.passed)
      throw PreconditionError("braided_to_solution: unverified braided group: " +
                              to_json_line(v));
  }
  Braiding r(b.g.base, b.rharp, b.lharp);
  for (auto check : {check_weight_zero, check_dybe, check_nondegenerate}) {
    Verdict v = check(r);
    if (!v.passed)
      throw InconsistencyError("braided_to_solution: induced map fails a check: " +
                               to_json_line(v));
  }
  return r;
}

Verdict verify_braided_hom(const DynSetMorphism& psi, const BraidedGroup& src,
                           const BraidedGroup& dst) {
  Verdict hom = verify_dyn_group_hom(psi, src.g, dst.g);
  if (!hom.passed) return hom;
  const DynGroup& g = src.g;
  for (int lam = 0; lam < g.l(); ++lam)
    for (int a = 0; a < g.n(); ++a)
      for (int b = 0; b < g.n(); ++b) {
        // (Psi x Psi) after sigma
        int u = src.rharp.at(lam, a, b);
        int v = src.lharp.at(lam, a, b);
        int lhs_first = psi.at(lam, u);
        int lhs_second = psi.at(g.phi(lam, u), v);
        // sigma' after (Psi x Psi)
        int p = psi.at(lam, a);
        int q = psi.at(g.phi(lam, a), b);
        int rhs_first = dst.rharp.at(lam, p, q);
        int rhs_second = dst.lharp.at(lam, p, q);
        if (lhs_first != rhs_first || lhs_second != rhs_second)
          return Verdict::fail("braided-hom", {lam, a, b},
                               {lhs_first, lhs_second}, {rhs_first, rhs_second});
      }
  return Verdict::ok();
}

}  // namespace dyb
