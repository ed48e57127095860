#ifndef DYB_TESTS_HELPERS_HPP
#define DYB_TESTS_HELPERS_HPP

#include <set>
#include <vector>

#include "dyb/core.hpp"
#include "dyb/matched.hpp"
#include "dyb/postbrace.hpp"
#include "dyb/rota.hpp"
#include "dyb/search.hpp"
#include "dyb/ybe.hpp"

namespace fx {

using namespace dyb;

// Three-element dynamical group over three parameters (0-based tables).
inline DynSet three_param_set() {
  return DynSet(3, 3, Table2::from_rows({{0, 2, 1}, {1, 2, 0}, {2, 0, 1}}));
}

inline DynGroup three_group() {
  Table3 prod = Table3::from_slices({
      {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}},
      {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}},
      {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}},
  });
  return checked_group(three_param_set(), std::move(prod), 0);
}

// The post-group over Z3 whose sub-adjacent group is three_group().
inline PostGroup three_post() {
  Table3 dot = Table3::from_slices({
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
  });
  Table3 tri = Table3::from_slices({
      {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}},
      {{0, 1, 2}, {0, 1, 2}, {0, 2, 1}},
      {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}},
  });
  return checked_post_group(PostGroup(three_param_set(), std::move(dot),
                                      std::move(tri), 0));
}

// The Z3 skew brace: dot = addition, circ = three_group()'s product.
inline SkewBrace three_brace() {
  Table3 dot = three_post().dot;
  Table3 circ = three_group().product;
  return checked_skew_brace(SkewBrace(three_param_set(), std::move(dot),
                                      std::move(circ), 0));
}

inline Table2 zn_table(int n) {
  Table2 t(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.at(a, b) = (a + b) % n;
  return t;
}

inline Table2 klein_table() {
  Table2 t(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.at(a, b) = a ^ b;
  return t;
}

// S3 as permutations of {0,1,2}; element i is perms[i], composition
// (p * q)(x) = p(q(x)).
inline Table2 s3_table() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                         {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  Table2 t(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> comp(3);
      for (int x = 0; x < 3; ++x) comp[static_cast<size_t>(x)] = perms[static_cast<size_t>(i)][static_cast<size_t>(perms[static_cast<size_t>(j)][static_cast<size_t>(x)])];
      for (int k = 0; k < 6; ++k)
        if (perms[static_cast<size_t>(k)] == comp) t.at(i, j) = k;
    }
  return t;
}

// A genuinely non-constant dynamical group: Z2 product, phi swaps the two
// parameters on the non-unit element.
inline DynGroup swap_group() {
  Table2 phi = Table2::from_rows({{0, 1}, {1, 0}});
  Table3 prod = Table3::from_slices({{{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}});
  return checked_group(DynSet(2, 2, std::move(phi)), std::move(prod), 0);
}

// Constant group over two parameters with a Z4 slice and a Klein slice.
inline DynGroup z4_klein_group() {
  Table3 prod(2, 4, 4);
  Table2 z4 = zn_table(4), kl = klein_table();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      prod.at(0, a, b) = z4.at(a, b);
      prod.at(1, a, b) = kl.at(a, b);
    }
  Table2 phi(2, 4);
  for (int lam = 0; lam < 2; ++lam)
    for (int x = 0; x < 4; ++x) phi.at(lam, x) = lam;
  return checked_group(DynSet(2, 4, std::move(phi)), std::move(prod), 0);
}

// Trivial action of g on h: every permutation is the identity.
inline DynAction trivial_action(DynGroup g, DynGroup h) {
  Table3 act(g.l(), g.n(), h.n());
  for (int lam = 0; lam < g.l(); ++lam)
    for (int a = 0; a < g.n(); ++a)
      for (int x = 0; x < h.n(); ++x) act.at(lam, a, x) = x;
  return DynAction(std::move(g), std::move(h), std::move(act));
}

// Flip structure a rharp b = b, a lharp b = a on a constant group.
inline BraidedGroup literal_flip_braided(const DynGroup& g) {
  Table3 rharp(g.l(), g.n(), g.n()), lharp(g.l(), g.n(), g.n());
  for (int lam = 0; lam < g.l(); ++lam)
    for (int a = 0; a < g.n(); ++a)
      for (int b = 0; b < g.n(); ++b) {
        rharp.at(lam, a, b) = b;
        lharp.at(lam, a, b) = a;
      }
  return BraidedGroup(g, std::move(rharp), std::move(lharp));
}

// ---- independent oracles (naive re-evaluations, never calling the
// ---- library verifiers)

inline std::set<std::string> naive_group_violations(const DynGroup& g) {
  std::set<std::string> bad;
  int l = g.l(), n = g.n(), e = g.unit;
  for (int lam = 0; lam < l; ++lam) {
    if (g.phi(lam, e) != lam) bad.insert("phi-unit");
    for (int a = 0; a < n; ++a) {
      if (g.op(lam, a, e) != a || g.op(lam, e, a) != a) bad.insert("unit");
      bool has = false;
      for (int b = 0; b < n; ++b)
        if (g.op(lam, a, b) == e && g.op(g.phi(lam, a), b, a) == e) has = true;
      if (!has) bad.insert("inverse");
      for (int b = 0; b < n; ++b) {
        if (g.phi(lam, g.op(lam, a, b)) != g.phi(g.phi(lam, a), b))
          bad.insert("phi-asso");
        for (int c = 0; c < n; ++c)
          if (g.op(lam, a, g.op(g.phi(lam, a), b, c)) != g.op(lam, g.op(lam, a, b), c))
            bad.insert("associativity");
      }
    }
  }
  return bad;
}

// Literal two-sided evaluation of the braid relation by composing closures.
inline bool naive_dybe_holds(const Braiding& r) {
  int l = r.l(), n = r.n();
  auto r12 = [&](int lam, std::array<int, 3> t) {
    auto [u, v] = r.r(lam, t[0], t[1]);
    return std::array<int, 3>{u, v, t[2]};
  };
  auto r23 = [&](int lam, std::array<int, 3> t) {
    auto [u, v] = r.r(r.phi(lam, t[0]), t[1], t[2]);
    return std::array<int, 3>{t[0], u, v};
  };
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          std::array<int, 3> t{x, y, z};
          auto lhs = r12(lam, r23(lam, r12(lam, t)));
          auto rhs = r23(lam, r12(lam, r23(lam, t)));
          if (lhs != rhs) return false;
        }
  return true;
}

inline bool naive_weight_zero_holds(const Braiding& r) {
  for (int lam = 0; lam < r.l(); ++lam)
    for (int x = 0; x < r.n(); ++x)
      for (int y = 0; y < r.n(); ++y) {
        auto [u, v] = r.r(lam, x, y);
        if (r.phi(r.phi(lam, u), v) != r.phi(r.phi(lam, x), y)) return false;
      }
  return true;
}

}  // namespace fx

#endif
