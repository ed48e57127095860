#include "dyb/groupoid.hpp"

#include <algorithm>
#include <sstream>

namespace dyb {

int Groupoid::compose(int m1, int m2) const {
  auto it = comp.find({m1, m2});
  if (it == comp.end())
    throw DomainError("Groupoid: composition undefined at (" +
                      std::to_string(m1) + "," + std::to_string(m2) + ")");
  return it->second;
}

namespace {

void check_groupoid_shapes(const Groupoid& c) {
  const int nm = c.num_morphisms(), no = c.num_objects;
  if (static_cast<int>(c.tgt.size()) != nm || static_cast<int>(c.inv.size()) != nm)
    throw ShapeError("Groupoid: src/tgt/inv size mismatch");
  if (static_cast<int>(c.unit_of.size()) != no)
    throw ShapeError("Groupoid: unit_of size mismatch");
  for (int m = 0; m < nm; ++m)
    if (c.src[m] < 0 || c.src[m] >= no || c.tgt[m] < 0 || c.tgt[m] >= no ||
        c.inv[m] < 0 || c.inv[m] >= nm)
      throw ShapeError("Groupoid: entry out of range");
  for (int o = 0; o < no; ++o)
    if (c.unit_of[o] < 0 || c.unit_of[o] >= nm)
      throw ShapeError("Groupoid: unit_of entry out of range");
  for (const auto& [key, val] : c.comp) {
    auto [m1, m2] = key;
    if (m1 < 0 || m1 >= nm || m2 < 0 || m2 >= nm || val < 0 || val >= nm)
      throw ShapeError("Groupoid: comp entry out of range");
    if (c.tgt[m1] != c.src[m2])
      throw DomainError("Groupoid: comp defined on non-composable pair (" +
                        std::to_string(m1) + "," + std::to_string(m2) + ")");
  }
}

}  // namespace

Verdict verify_groupoid(const Groupoid& c) {
  check_groupoid_shapes(c);
  const int nm = c.num_morphisms();
  for (int o = 0; o < c.num_objects; ++o) {
    int u = c.unit_of[o];
    if (c.src[u] != o || c.tgt[u] != o)
      return Verdict::fail("unit-endpoints", {o}, {c.src[u], c.tgt[u]}, {o, o});
  }
  for (int m1 = 0; m1 < nm; ++m1)
    for (int m2 = 0; m2 < nm; ++m2) {
      if (!c.composable(m1, m2)) continue;
      auto it = c.comp.find({m1, m2});
      if (it == c.comp.end())
        return Verdict::fail("comp-defined", {m1, m2}, {}, {});
      int m = it->second;
      if (c.src[m] != c.src[m1] || c.tgt[m] != c.tgt[m2])
        return Verdict::fail("comp-endpoints", {m1, m2}, {c.src[m], c.tgt[m]},
                             {c.src[m1], c.tgt[m2]});
    }
  for (int m1 = 0; m1 < nm; ++m1)
    for (int m2 = 0; m2 < nm; ++m2) {
      if (!c.composable(m1, m2)) continue;
      for (int m3 = 0; m3 < nm; ++m3) {
        if (!c.composable(m2, m3)) continue;
        int lhs = c.compose(c.compose(m1, m2), m3);
        int rhs = c.compose(m1, c.compose(m2, m3));
        if (lhs != rhs)
          return Verdict::fail("assoc", {m1, m2, m3}, {lhs}, {rhs});
      }
    }
  for (int m = 0; m < nm; ++m) {
    int left = c.compose(c.unit_of[c.src[m]], m);
    int right = c.compose(m, c.unit_of[c.tgt[m]]);
    if (left != m || right != m)
      return Verdict::fail("unital", {m}, {left, right}, {m, m});
  }
  for (int m = 0; m < nm; ++m) {
    int i = c.inv[m];
    if (c.src[i] != c.tgt[m] || c.tgt[i] != c.src[m])
      return Verdict::fail("inverse", {m}, {c.src[i], c.tgt[i]},
                           {c.tgt[m], c.src[m]});
    if (c.compose(m, i) != c.unit_of[c.src[m]] ||
        c.compose(i, m) != c.unit_of[c.tgt[m]])
      return Verdict::fail("inverse", {m}, {c.compose(m, i), c.compose(i, m)},
                           {c.unit_of[c.src[m]], c.unit_of[c.tgt[m]]});
  }
  return Verdict::ok();
}

Groupoid functor_q(const DynGroup& g_in) {
  DynGroup g = g_in;
  {
    Verdict v = verify_dyn_group(g);
    if (!v.passed)
      throw PreconditionError("functor_q: unverified group: " + to_json_line(v));
  }
  if (!g.has_inverse()) g.inverse = inverse_table(g);
  const int l = g.l(), n = g.n();
  Groupoid c;
  c.num_objects = l;
  c.src.resize(static_cast<size_t>(l) * n);
  c.tgt.resize(static_cast<size_t>(l) * n);
  c.inv.resize(static_cast<size_t>(l) * n);
  c.key.resize(static_cast<size_t>(l) * n);
  c.unit_of.resize(static_cast<size_t>(l));
  for (int lam = 0; lam < l; ++lam) {
    c.unit_of[static_cast<size_t>(lam)] = lam * n + g.unit;
    for (int a = 0; a < n; ++a) {
      int m = lam * n + a;
      c.src[static_cast<size_t>(m)] = lam;
      c.tgt[static_cast<size_t>(m)] = g.phi(lam, a);
      // the inverse arrow runs from phi(lambda, a) back to lambda and
      // carries the inverse element taken at the original parameter
      c.inv[static_cast<size_t>(m)] = g.phi(lam, a) * n + g.inv(lam, a);
      c.key[static_cast<size_t>(m)] = {lam, a};
    }
  }
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a) {
      int mu = g.phi(lam, a);
      for (int b = 0; b < n; ++b)
        c.comp[{lam * n + a, mu * n + b}] = lam * n + g.op(lam, a, b);
    }
  Verdict v = verify_groupoid(c);
  if (!v.passed)
    throw InconsistencyError("functor_q: result failed verification: " +
                             to_json_line(v));
  return c;
}

Quiver quiver_of(const DynSet& s) {
  Quiver q;
  q.num_objects = s.lambda_size;
  for (int lam = 0; lam < s.lambda_size; ++lam)
    for (int x = 0; x < s.elem_size; ++x) {
      q.src.push_back(lam);
      q.tgt.push_back(s.phi_at(lam, x));
    }
  return q;
}

namespace {

std::pair<int, int> sigma_at(
    const std::map<std::pair<int, int>, std::pair<int, int>>& sigma, int gamma,
    int delta) {
  auto it = sigma.find({gamma, delta});
  if (it == sigma.end())
    throw DomainError("sigma undefined at (" + std::to_string(gamma) + "," +
                      std::to_string(delta) + ")");
  return it->second;
}

}  // namespace

Verdict verify_groupoid_matched_pair(const GroupoidMatchedPair& mp) {
  for (const Groupoid* c : {&mp.g, &mp.h}) {
    Verdict v = verify_groupoid(*c);
    if (!v.passed)
      throw PreconditionError("verify_groupoid_matched_pair: unverified groupoid: " +
                              to_json_line(v));
  }
  if (mp.g.num_objects != mp.h.num_objects)
    throw ShapeError("verify_groupoid_matched_pair: object sets differ");
  const Groupoid& g = mp.g;
  const Groupoid& h = mp.h;
  for (const auto& [key, val] : mp.sigma) {
    if (g.tgt[key.first] != h.src[key.second])
      throw DomainError("sigma defined on non-composable pair (" +
                        std::to_string(key.first) + "," +
                        std::to_string(key.second) + ")");
    (void)val;
  }
  // totality on the fibered product, then the quiver-homomorphism condition
  for (int gamma = 0; gamma < g.num_morphisms(); ++gamma)
    for (int delta = 0; delta < h.num_morphisms(); ++delta) {
      if (g.tgt[gamma] != h.src[delta]) continue;
      auto it = mp.sigma.find({gamma, delta});
      if (it == mp.sigma.end())
        return Verdict::fail("sigma-defined", {gamma, delta}, {}, {});
      auto [dp, gp] = it->second;
      if (h.src[dp] != g.src[gamma] || g.tgt[gp] != h.tgt[delta] ||
          h.tgt[dp] != g.src[gp])
        return Verdict::fail("sigma-quiver", {gamma, delta},
                             {h.src[dp], g.tgt[gp], h.tgt[dp]},
                             {g.src[gamma], h.tgt[delta], g.src[gp]});
    }
  auto rh = [&](int gamma, int delta) { return sigma_at(mp.sigma, gamma, delta).first; };
  auto lh = [&](int gamma, int delta) { return sigma_at(mp.sigma, gamma, delta).second; };
  // MG-1: unit at src(delta) acts trivially
  for (int delta = 0; delta < h.num_morphisms(); ++delta) {
    int u = g.unit_of[h.src[delta]];
    if (rh(u, delta) != delta)
      return Verdict::fail("MG-1", {delta}, {rh(u, delta)}, {delta});
  }
  // MG-4
  for (int gamma = 0; gamma < g.num_morphisms(); ++gamma) {
    int u = h.unit_of[g.tgt[gamma]];
    if (lh(gamma, u) != gamma)
      return Verdict::fail("MG-4", {gamma}, {lh(gamma, u)}, {gamma});
  }
  // MG-2 and MG-3
  for (int g1 = 0; g1 < g.num_morphisms(); ++g1)
    for (int g2 = 0; g2 < g.num_morphisms(); ++g2) {
      if (!g.composable(g1, g2)) continue;
      int g12 = g.compose(g1, g2);
      for (int delta = 0; delta < h.num_morphisms(); ++delta) {
        if (g.tgt[g2] != h.src[delta]) continue;
        int lhs2 = rh(g12, delta);
        int rhs2 = rh(g1, rh(g2, delta));
        if (lhs2 != rhs2)
          return Verdict::fail("MG-2", {g1, g2, delta}, {lhs2}, {rhs2});
        int lhs3 = lh(g12, delta);
        int rhs3 = g.compose(lh(g1, rh(g2, delta)), lh(g2, delta));
        if (lhs3 != rhs3)
          return Verdict::fail("MG-3", {g1, g2, delta}, {lhs3}, {rhs3});
      }
    }
  // MG-5 and MG-6
  for (int gamma = 0; gamma < g.num_morphisms(); ++gamma)
    for (int d1 = 0; d1 < h.num_morphisms(); ++d1) {
      if (g.tgt[gamma] != h.src[d1]) continue;
      for (int d2 = 0; d2 < h.num_morphisms(); ++d2) {
        if (!h.composable(d1, d2)) continue;
        int d12 = h.compose(d1, d2);
        int lhs5 = lh(lh(gamma, d1), d2);
        int rhs5 = lh(gamma, d12);
        if (lhs5 != rhs5)
          return Verdict::fail("MG-5", {gamma, d1, d2}, {lhs5}, {rhs5});
        int lhs6 = rh(gamma, d12);
        int rhs6 = h.compose(rh(gamma, d1), rh(lh(gamma, d1), d2));
        if (lhs6 != rhs6)
          return Verdict::fail("MG-6", {gamma, d1, d2}, {lhs6}, {rhs6});
      }
    }
  return Verdict::ok();
}

GroupoidMatchedPair mp_to_groupoid_mp(const MatchedPair& mp) {
  {
    Verdict v = verify_matched_pair(mp);
    if (!v.passed)
      throw PreconditionError("mp_to_groupoid_mp: unverified matched pair: " +
                              to_json_line(v));
  }
  GroupoidMatchedPair out;
  out.g = functor_q(mp.g);
  out.h = functor_q(mp.h);
  const int ng = mp.g.n(), nh = mp.h.n();
  for (int lam = 0; lam < mp.g.l(); ++lam)
    for (int a = 0; a < ng; ++a) {
      int lp = mp.g.phi(lam, a);
      for (int x = 0; x < nh; ++x) {
        int u = mp.rharp.at(lam, a, x);
        int v = mp.lharp.at(lam, a, x);
        out.sigma[{lam * ng + a, lp * nh + x}] = {lam * nh + u,
                                                  mp.h.phi(lam, u) * ng + v};
      }
    }
  Verdict v = verify_groupoid_matched_pair(out);
  if (!v.passed)
    throw InconsistencyError("mp_to_groupoid_mp: result failed verification: " +
                             to_json_line(v));
  return out;
}

Groupoid vacant_double(const GroupoidMatchedPair& mp) {
  {
    Verdict v = verify_groupoid_matched_pair(mp);
    if (!v.passed)
      throw PreconditionError("vacant_double: unverified matched pair: " +
                              to_json_line(v));
  }
  const Groupoid& g = mp.g;
  const Groupoid& h = mp.h;
  Groupoid d;
  d.num_objects = g.num_objects;
  std::map<std::pair<int, int>, int> index;
  for (int delta = 0; delta < h.num_morphisms(); ++delta)
    for (int gamma = 0; gamma < g.num_morphisms(); ++gamma) {
      if (h.tgt[delta] != g.src[gamma]) continue;
      index[{delta, gamma}] = d.num_morphisms();
      d.src.push_back(h.src[delta]);
      d.tgt.push_back(g.tgt[gamma]);
      d.key.push_back({delta, gamma});
      d.inv.push_back(-1);
    }
  d.unit_of.resize(static_cast<size_t>(d.num_objects));
  for (int o = 0; o < d.num_objects; ++o)
    d.unit_of[static_cast<size_t>(o)] = index.at({h.unit_of[o], g.unit_of[o]});
  for (const auto& [k1, m1] : index) {
    auto [d1, g1] = k1;
    for (const auto& [k2, m2] : index) {
      auto [d2, g2] = k2;
      if (g.tgt[g1] != h.src[d2]) continue;
      auto [dp, gp] = sigma_at(mp.sigma, g1, d2);
      d.comp[{m1, m2}] = index.at({h.compose(d1, dp), g.compose(gp, g2)});
    }
  }
  for (const auto& [k, m] : index) {
    auto [delta, gamma] = k;
    int u = sigma_at(mp.sigma, g.inv[gamma], h.inv[delta]).first;
    int second = g.inv[sigma_at(mp.sigma, gamma, u).second];
    d.inv[static_cast<size_t>(m)] = index.at({u, second});
  }
  Verdict v = verify_groupoid(d);
  if (!v.passed)
    throw InconsistencyError("vacant_double: result failed verification: " +
                             to_json_line(v));
  return d;
}

Verdict verify_braided_groupoid(const BraidedGroupoid& b) {
  GroupoidMatchedPair mp{b.g, b.g, b.sigma};
  Verdict v = verify_groupoid_matched_pair(mp);
  if (!v.passed) return v;
  for (const auto& [key, val] : b.sigma) {
    int lhs = b.g.compose(val.first, val.second);
    int rhs = b.g.compose(key.first, key.second);
    if (lhs != rhs)
      return Verdict::fail("braided-groupoid-com", {key.first, key.second},
                           {lhs}, {rhs});
  }
  return Verdict::ok();
}

BraidedGroupoid braided_groupoid_from_bdg(const BraidedGroup& b) {
  {
    Verdict v = verify_braided(b);
    if (!v.passed)
      throw PreconditionError("braided_groupoid_from_bdg: unverified braided group: " +
                              to_json_line(v));
  }
  BraidedGroupoid out;
  out.g = functor_q(b.g);
  const int n = b.g.n();
  for (int lam = 0; lam < b.g.l(); ++lam)
    for (int a = 0; a < n; ++a) {
      int lp = b.g.phi(lam, a);
      for (int x = 0; x < n; ++x) {
        int u = b.rharp.at(lam, a, x);
        int v = b.lharp.at(lam, a, x);
        out.sigma[{lam * n + a, lp * n + x}] = {lam * n + u,
                                                b.g.phi(lam, u) * n + v};
      }
    }
  Verdict v = verify_braided_groupoid(out);
  if (!v.passed)
    throw InconsistencyError("braided_groupoid_from_bdg: result failed verification: " +
                             to_json_line(v));
  return out;
}

Verdict quiver_ybe_check(const QuiverBraiding& qb) {
  const Quiver& q = qb.quiver;
  // invariant: r is a quiver isomorphism of the composable-pair quiver
  std::map<std::pair<int, int>, int> seen;
  for (const auto& [key, val] : qb.r) {
    auto [a1, a2] = key;
    auto [b1, b2] = val;
    if (q.tgt[a1] != q.src[a2])
      throw DomainError("quiver braiding defined on non-composable pair");
    if (q.tgt[b1] != q.src[b2] || q.src[b1] != q.src[a1] || q.tgt[b2] != q.tgt[a2])
      throw PreconditionError("quiver braiding is not a quiver morphism");
    if (!seen.emplace(val, 1).second)
      throw PreconditionError("quiver braiding is not injective");
  }
  for (int a1 = 0; a1 < q.num_arrows(); ++a1)
    for (int a2 = 0; a2 < q.num_arrows(); ++a2)
      if (q.tgt[a1] == q.src[a2] && !qb.r.count({a1, a2}))
        throw PreconditionError("quiver braiding not total on composable pairs");

  auto r = [&](int a, int b) { return qb.r.at({a, b}); };
  for (int a1 = 0; a1 < q.num_arrows(); ++a1)
    for (int a2 = 0; a2 < q.num_arrows(); ++a2) {
      if (q.tgt[a1] != q.src[a2]) continue;
      for (int a3 = 0; a3 < q.num_arrows(); ++a3) {
        if (q.tgt[a2] != q.src[a3]) continue;
        auto [b1, b2] = r(a1, a2);
        auto [c2, c3] = r(b2, a3);
        auto [d1, d2] = r(b1, c2);
        auto [e2, e3] = r(a2, a3);
        auto [f1, f2] = r(a1, e2);
        auto [g2, g3] = r(f2, e3);
        if (d1 != f1 || d2 != g2 || c3 != g3)
          return Verdict::fail("quiver-ybe", {a1, a2, a3}, {d1, d2, c3},
                               {f1, g2, g3});
      }
    }
  return Verdict::ok();
}

QuiverBraiding br_q(const DynSet& base, const Braiding& r) {
  if (base != r.base) throw ShapeError("br_q: braiding not on the given set");
  {
    Verdict v = check_dybe(r);
    if (!v.passed)
      throw PreconditionError("br_q: braiding fails the braid relation: " +
                              to_json_line(v));
  }
  QuiverBraiding out;
  out.quiver = quiver_of(base);
  const int n = base.elem_size;
  for (int lam = 0; lam < base.lambda_size; ++lam)
    for (int x = 0; x < n; ++x) {
      int mu = base.phi_at(lam, x);
      for (int y = 0; y < n; ++y) {
        auto [u, v] = r.r(lam, x, y);
        out.r[{lam * n + x, mu * n + y}] = {lam * n + u,
                                            base.phi_at(lam, u) * n + v};
      }
    }
  Verdict v = quiver_ybe_check(out);
  if (!v.passed)
    throw InconsistencyError("br_q: conjugated braiding fails the braid relation: " +
                             to_json_line(v));
  return out;
}

bool diagram_commutes(const BraidedGroup& b) {
  BraidedGroupoid hat = braided_groupoid_from_bdg(b);
  QuiverBraiding tilde = br_q(b.g.base, braided_to_solution(b));
  return hat.sigma == tilde.r;
}

namespace {

std::string default_object_name(int i) { return "l" + std::to_string(i); }

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render_dot(int num_objects, const std::vector<int>& src,
                       const std::vector<int>& tgt,
                       const std::vector<int>& skip_mask,
                       const DotNames& names,
                       const std::vector<std::array<int, 2>>* key) {
  auto obj_name = [&](int o) {
    if (o < static_cast<int>(names.object_names.size()) &&
        !names.object_names[static_cast<size_t>(o)].empty())
      return names.object_names[static_cast<size_t>(o)];
    return default_object_name(o);
  };
  auto morph_name = [&](int m) {
    if (m < static_cast<int>(names.morphism_names.size()) &&
        !names.morphism_names[static_cast<size_t>(m)].empty())
      return names.morphism_names[static_cast<size_t>(m)];
    if (key)
      return "(" + obj_name((*key)[static_cast<size_t>(m)][0]) + "," +
             std::to_string((*key)[static_cast<size_t>(m)][1]) + ")";
    return "m" + std::to_string(m);
  };
  std::vector<std::string> node_lines, edge_lines;
  for (int o = 0; o < num_objects; ++o)
    node_lines.push_back("  " + dot_quote(obj_name(o)) + ";");
  for (size_t m = 0; m < src.size(); ++m) {
    if (skip_mask[m]) continue;
    edge_lines.push_back("  " + dot_quote(obj_name(src[m])) + " -> " +
                         dot_quote(obj_name(tgt[m])) + " [label=" +
                         dot_quote(morph_name(static_cast<int>(m))) + "];");
  }
  std::sort(node_lines.begin(), node_lines.end());
  std::sort(edge_lines.begin(), edge_lines.end());
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& s : node_lines) os << s << "\n";
  for (const auto& s : edge_lines) os << s << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const Groupoid& g, const DotNames& names, bool unit_loops) {
  std::vector<int> skip(g.src.size(), 0);
  if (!unit_loops)
    for (int u : g.unit_of) skip[static_cast<size_t>(u)] = 1;
  return render_dot(g.num_objects, g.src, g.tgt, skip, names,
                    g.key.size() == g.src.size() ? &g.key : nullptr);
}

std::string export_dot(const Quiver& q, const DotNames& names) {
  std::vector<int> skip(q.src.size(), 0);
  return render_dot(q.num_objects, q.src, q.tgt, skip, names, nullptr);
}

}  // namespace dyb
