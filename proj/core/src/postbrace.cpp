#include "dyb/postbrace.hpp"

namespace dyb {

namespace {

// Ordinary group check per lambda slice with a shared designated unit;
// witnesses carry the given axiom prefix and tuple (lambda, ...).
Verdict verify_constant_slices(const Table3& dot, int unit, const char* prefix) {
  const int l = dot.dim0(), n = dot.dim1();
  std::string pre(prefix);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a) {
      if (dot.at(lam, a, unit) != a)
        return Verdict::fail(pre + "-unit", {lam, a}, {dot.at(lam, a, unit)}, {a});
      if (dot.at(lam, unit, a) != a)
        return Verdict::fail(pre + "-unit", {lam, a}, {dot.at(lam, unit, a)}, {a});
    }
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = dot.at(lam, a, dot.at(lam, b, c));
          int rhs = dot.at(lam, dot.at(lam, a, b), c);
          if (lhs != rhs)
            return Verdict::fail(pre + "-assoc", {lam, a, b, c}, {lhs}, {rhs});
        }
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a) {
      int x = -1;
      for (int b = 0; b < n; ++b)
        if (dot.at(lam, a, b) == unit) {
          x = b;
          break;
        }
      if (x < 0 || dot.at(lam, x, a) != unit)
        return Verdict::fail(pre + "-inverse", {lam, a},
                             x < 0 ? std::vector<int>{} : std::vector<int>{dot.at(lam, x, a)},
                             {unit});
    }
  return Verdict::ok();
}

Table2 constant_inverse_table(const Table3& dot, int unit) {
  const int l = dot.dim0(), n = dot.dim1();
  Table2 inv(l, n, -1);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (dot.at(lam, a, b) == unit && dot.at(lam, b, a) == unit) {
          inv.at(lam, a) = b;
          break;
        }
  return inv;
}

DynGroup constant_group_of(const DynSet& base, const Table3& dot, int unit) {
  Table2 phi(base.lambda_size, base.elem_size);
  for (int lam = 0; lam < base.lambda_size; ++lam)
    for (int x = 0; x < base.elem_size; ++x) phi.at(lam, x) = lam;
  return checked_group(DynSet(base.lambda_size, base.elem_size, std::move(phi)),
                       dot, unit);
}

}  // namespace

PostGroup::PostGroup(DynSet b, Table3 dot_table, Table3 tri_table, int unit_elem,
                     bool weak_variant, bool pre_variant)
    : base(std::move(b)), dot(std::move(dot_table)), tri(std::move(tri_table)),
      unit(unit_elem), weak(weak_variant), pre(pre_variant) {
  int l = base.lambda_size, n = base.elem_size;
  for (const Table3* t : {&dot, &tri}) {
    if (t->dim0() != l || t->dim1() != n || t->dim2() != n)
      throw ShapeError("PostGroup: tables must be LxNxN");
    if (!t->entries_in_range(n)) throw ShapeError("PostGroup: entry out of range");
  }
  if (unit < 0 || unit >= n) throw ShapeError("PostGroup: unit out of range");
}

int PostGroup::dot_inv(int lam, int a) const {
  if (dot_inverse.empty())
    throw PreconditionError("PostGroup: dot inverse not derived");
  return dot_inverse.at(lam, a);
}

bool same_post_tables(const PostGroup& a, const PostGroup& b) {
  return a.base == b.base && a.dot == b.dot && a.tri == b.tri && a.unit == b.unit;
}

Verdict verify_post_group(const PostGroup& p) {
  const int l = p.l(), n = p.n(), e = p.unit;
  Verdict slices = verify_constant_slices(p.dot, e, "dot");
  if (!slices.passed) return slices;
  if (p.pre) {
    for (int lam = 0; lam < l; ++lam)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (p.dot_at(lam, a, b) != p.dot_at(lam, b, a))
            return Verdict::fail("dot-abelian", {lam, a, b},
                                 {p.dot_at(lam, a, b)}, {p.dot_at(lam, b, a)});
  }
  if (!p.weak) {
    std::vector<int> row(static_cast<size_t>(n));
    for (int lam = 0; lam < l; ++lam)
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) row[static_cast<size_t>(b)] = p.tri_at(lam, a, b);
        if (!is_permutation_row(row, n))
          return Verdict::fail("tri-bijective", {lam, a}, row, {});
      }
    for (int lam = 0; lam < l; ++lam)
      for (int a = 0; a < n; ++a) {
        if (p.tri_at(lam, a, e) != e)
          return Verdict::fail("tri-unit", {lam, a}, {p.tri_at(lam, a, e)}, {e});
        if (p.tri_at(lam, e, a) != a)
          return Verdict::fail("tri-unit", {lam, a}, {p.tri_at(lam, e, a)}, {a});
      }
  }
  // distributivity over the constant product
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = p.tri_at(lam, a, p.dot_at(p.phi(lam, a), b, c));
          int rhs = p.dot_at(lam, p.tri_at(lam, a, b), p.tri_at(lam, a, c));
          if (lhs != rhs)
            return Verdict::fail("post-1", {lam, a, b, c}, {lhs}, {rhs});
        }
  // weighted associativity
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = p.tri_at(lam, p.dot_at(lam, a, p.tri_at(lam, a, b)), c);
          int rhs = p.tri_at(lam, a, p.tri_at(p.phi(lam, a), b, c));
          if (lhs != rhs)
            return Verdict::fail("post-2", {lam, a, b, c}, {lhs}, {rhs});
        }
  if (!p.weak) {
    // structure-map compatibility of the sub-adjacent product; without it
    // the sub-adjacent tables do not form a dynamical group
    for (int lam = 0; lam < l; ++lam)
      if (p.phi(lam, e) != lam)
        return Verdict::fail("phi-unit", {lam}, {p.phi(lam, e)}, {lam});
    for (int lam = 0; lam < l; ++lam)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int ab = p.dot_at(lam, a, p.tri_at(lam, a, b));
          int lhs = p.phi(lam, ab);
          int rhs = p.phi(p.phi(lam, a), b);
          if (lhs != rhs)
            return Verdict::fail("phi-asso", {lam, a, b}, {lhs}, {rhs});
        }
  }
  return Verdict::ok();
}

PostGroup checked_post_group(PostGroup p) {
  Verdict v = verify_post_group(p);
  if (!v.passed)
    throw PreconditionError("checked_post_group: verification failed: " +
                            to_json_line(v));
  p.dot_inverse = constant_inverse_table(p.dot, p.unit);
  return p;
}

DynGroup sub_adjacent(const PostGroup& p) {
  PostGroup q = checked_post_group(p);
  const int l = q.l(), n = q.n();
  Table3 prod(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        prod.at(lam, a, b) = q.dot_at(lam, a, q.tri_at(lam, a, b));
  DynGroup g(q.base, std::move(prod), q.unit);
  Verdict v = verify_dyn_group(g);
  if (!v.passed)
    throw InconsistencyError("sub_adjacent: result failed verification: " +
                             to_json_line(v));
  g.inverse = inverse_table(g);
  // the inverse must be the tri-preimage of the dot inverse
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      if (q.tri_at(lam, a, g.inv(lam, a)) != q.dot_inv(lam, a))
        throw InconsistencyError("sub_adjacent: inverse formula mismatch");
  return g;
}

DynGroup sub_adjacent_semigroup(const PostGroup& p) {
  const int l = p.l(), n = p.n();
  Table3 prod(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        prod.at(lam, a, b) = p.dot_at(lam, a, p.tri_at(lam, a, b));
  DynGroup g(p.base, std::move(prod), p.unit);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a) {
      if (g.op(lam, a, g.unit) != a)
        throw InconsistencyError("sub_adjacent_semigroup: right unit fails");
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.op(lam, a, g.op(g.phi(lam, a), b, c)) !=
              g.op(lam, g.op(lam, a, b), c))
            throw InconsistencyError("sub_adjacent_semigroup: associativity fails");
    }
  return g;
}

BraidedGroup post_to_braided(const PostGroup& p) {
  DynGroup sub = sub_adjacent(p);
  const int l = p.l(), n = p.n();
  Table3 rharp = p.tri;
  Table3 lharp(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int u = p.tri_at(lam, a, b);
        lharp.at(lam, a, b) =
            sub.op(sub.phi(lam, u), sub.inv(lam, u), sub.op(lam, a, b));
      }
  BraidedGroup bg(std::move(sub), std::move(rharp), std::move(lharp));
  Verdict v = verify_braided(bg);
  if (!v.passed)
    throw InconsistencyError("post_to_braided: result failed verification: " +
                             to_json_line(v));
  return bg;
}

PostGroup braided_to_post(const BraidedGroup& b) {
  {
    Verdict v = verify_braided(b);
    if (!v.passed)
      throw PreconditionError("braided_to_post: unverified braided group: " +
                              to_json_line(v));
  }
  DynGroup g = b.g;
  if (!g.has_inverse()) g.inverse = inverse_table(g);
  const int l = g.l(), n = g.n();
  Table3 dot(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int x = 0; x < n; ++x)
        dot.at(lam, a, x) =
            g.op(lam, a, b.rharp.at(g.phi(lam, a), g.inv(lam, a), x));
  PostGroup p(g.base, std::move(dot), b.rharp, g.unit);
  Verdict v = verify_post_group(p);
  if (!v.passed)
    throw InconsistencyError("braided_to_post: result failed verification: " +
                             to_json_line(v));
  p.dot_inverse = constant_inverse_table(p.dot, p.unit);
  return p;
}

SkewBrace::SkewBrace(DynSet b, Table3 dot_table, Table3 circ_table, int unit_elem)
    : base(std::move(b)), dot(std::move(dot_table)), circ(std::move(circ_table)),
      unit(unit_elem) {
  int l = base.lambda_size, n = base.elem_size;
  for (const Table3* t : {&dot, &circ}) {
    if (t->dim0() != l || t->dim1() != n || t->dim2() != n)
      throw ShapeError("SkewBrace: tables must be LxNxN");
    if (!t->entries_in_range(n)) throw ShapeError("SkewBrace: entry out of range");
  }
  if (unit < 0 || unit >= n) throw ShapeError("SkewBrace: unit out of range");
}

int SkewBrace::dot_inv(int lam, int a) const {
  if (dot_inverse.empty())
    throw PreconditionError("SkewBrace: dot inverse not derived");
  return dot_inverse.at(lam, a);
}

int SkewBrace::circ_inv(int lam, int a) const {
  if (circ_inverse.empty())
    throw PreconditionError("SkewBrace: circ inverse not derived");
  return circ_inverse.at(lam, a);
}

bool same_brace_tables(const SkewBrace& a, const SkewBrace& b) {
  return a.base == b.base && a.dot == b.dot && a.circ == b.circ && a.unit == b.unit;
}

Verdict verify_skew_brace(const SkewBrace& s) {
  Verdict slices = verify_constant_slices(s.dot, s.unit, "dot");
  if (!slices.passed) return slices;
  DynGroup circ_group(s.base, s.circ, s.unit);
  {
    Verdict v = verify_dyn_group(circ_group);
    if (!v.passed) {
      Witness w = *v.witness;
      w.axiom = "circ-" + w.axiom;
      return Verdict::fail(std::move(w));
    }
  }
  Table2 dinv = constant_inverse_table(s.dot, s.unit);
  for (int lam = 0; lam < s.l(); ++lam)
    for (int a = 0; a < s.n(); ++a)
      for (int b = 0; b < s.n(); ++b)
        for (int c = 0; c < s.n(); ++c) {
          int lhs = s.circ_at(lam, a, s.dot_at(s.phi(lam, a), b, c));
          int rhs = s.dot_at(lam, s.dot_at(lam, s.circ_at(lam, a, b), dinv.at(lam, a)),
                             s.circ_at(lam, a, c));
          if (lhs != rhs)
            return Verdict::fail("brace-compat", {lam, a, b, c}, {lhs}, {rhs});
        }
  // derived inversion identity; a failure here is an implementation bug,
  // not an input failure
  for (int lam = 0; lam < s.l(); ++lam)
    for (int a = 0; a < s.n(); ++a)
      for (int b = 0; b < s.n(); ++b) {
        int lhs = dinv.at(lam, s.circ_at(lam, a, b));
        int rhs = s.dot_at(
            lam,
            s.dot_at(lam, dinv.at(lam, a),
                     s.circ_at(lam, a, dinv.at(s.phi(lam, a), b))),
            dinv.at(lam, a));
        if (lhs != rhs)
          throw InconsistencyError("verify_skew_brace: derived inversion identity fails");
      }
  return Verdict::ok();
}

SkewBrace checked_skew_brace(SkewBrace s) {
  Verdict v = verify_skew_brace(s);
  if (!v.passed)
    throw PreconditionError("checked_skew_brace: verification failed: " +
                            to_json_line(v));
  s.dot_inverse = constant_inverse_table(s.dot, s.unit);
  s.circ_inverse = inverse_table(DynGroup(s.base, s.circ, s.unit));
  return s;
}

SkewBrace post_to_skewbrace(const PostGroup& p) {
  DynGroup sub = sub_adjacent(p);
  SkewBrace s(p.base, p.dot, sub.product, p.unit);
  Verdict v = verify_skew_brace(s);
  if (!v.passed)
    throw InconsistencyError("post_to_skewbrace: result failed verification: " +
                             to_json_line(v));
  return checked_skew_brace(std::move(s));
}

PostGroup skewbrace_to_post(const SkewBrace& s_in) {
  SkewBrace s = checked_skew_brace(s_in);
  const int l = s.l(), n = s.n();
  Table3 tri(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        tri.at(lam, a, b) = s.dot_at(lam, s.dot_inv(lam, a), s.circ_at(lam, a, b));
  PostGroup p(s.base, s.dot, std::move(tri), s.unit);
  Verdict v = verify_post_group(p);
  if (!v.passed)
    throw InconsistencyError("skewbrace_to_post: result failed verification: " +
                             to_json_line(v));
  return checked_post_group(std::move(p));
}

Braiding skewbrace_solution(const SkewBrace& s_in) {
  SkewBrace s = checked_skew_brace(s_in);
  const int l = s.l(), n = s.n();
  Table3 vphi(l, n, n), psi(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = s.circ_at(lam, a, b);
        int u = s.dot_at(lam, s.dot_inv(lam, a), ab);
        vphi.at(lam, a, b) = u;
        psi.at(lam, a, b) = s.circ_at(s.phi(lam, u), s.circ_inv(lam, u), ab);
      }
  Braiding r(s.base, std::move(vphi), std::move(psi));
  for (auto check : {check_weight_zero, check_dybe, check_nondegenerate}) {
    Verdict v = check(r);
    if (!v.passed)
      throw InconsistencyError("skewbrace_solution: induced map fails a check: " +
                               to_json_line(v));
  }
  return r;
}

PostGroup rbo_to_post(const RelRBO& r) {
  {
    Verdict v = verify_rbo(r);
    if (!v.passed)
      throw PreconditionError("rbo_to_post: unverified operator: " + to_json_line(v));
  }
  const DynGroup& g = r.action.g;
  const DynGroup& h = r.action.h;
  const int l = h.l(), n = h.n();
  Table2 phi(l, n);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x) phi.at(lam, x) = g.phi(lam, r.b(x));
  Table3 tri(l, n, n);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        tri.at(lam, x, y) = r.action.apply(lam, r.b(x), y);
  PostGroup p(DynSet(l, n, std::move(phi)), h.product, std::move(tri), h.unit);
  Verdict v = verify_post_group(p);
  if (!v.passed)
    throw InconsistencyError("rbo_to_post: result failed verification: " +
                             to_json_line(v));
  return checked_post_group(std::move(p));
}

RelRBO identity_rbo(const PostGroup& p_in) {
  PostGroup p = checked_post_group(p_in);
  DynGroup sub = sub_adjacent(p);
  DynGroup h = constant_group_of(p.base, p.dot, p.unit);
  DynAction act(std::move(sub), std::move(h), p.tri);
  {
    Verdict v = verify_action(act);
    if (!v.passed)
      throw InconsistencyError("identity_rbo: tri-translations are not an action: " +
                               to_json_line(v));
  }
  std::vector<int> id(static_cast<size_t>(p.n()));
  for (int x = 0; x < p.n(); ++x) id[static_cast<size_t>(x)] = x;
  RelRBO r(std::move(act), std::move(id));
  Verdict v = verify_rbo(r);
  if (!v.passed)
    throw InconsistencyError("identity_rbo: identity map fails the operator law: " +
                             to_json_line(v));
  return r;
}

Verdict verify_post_hom(const DynSetMorphism& psi, const PostGroup& src,
                        const PostGroup& dst) {
  {
    Verdict m = verify_morphism(psi);
    if (!m.passed)
      throw PreconditionError("verify_post_hom: not a morphism of dynamical sets: " +
                              to_json_line(m));
  }
  PostGroup s = checked_post_group(src);
  PostGroup d = checked_post_group(dst);
  for (int lam = 0; lam < s.l(); ++lam)
    for (int a = 0; a < s.n(); ++a)
      for (int b = 0; b < s.n(); ++b) {
        int lhs = psi.at(lam, s.dot_at(lam, a, b));
        int rhs = d.dot_at(lam, psi.at(lam, a), psi.at(lam, b));
        if (lhs != rhs)
          return Verdict::fail("post-hom-dot", {lam, a, b}, {lhs}, {rhs});
      }
  for (int lam = 0; lam < s.l(); ++lam)
    for (int a = 0; a < s.n(); ++a)
      for (int b = 0; b < s.n(); ++b) {
        int lhs = psi.at(lam, s.tri_at(lam, a, b));
        int rhs = d.tri_at(lam, psi.at(lam, a), psi.at(s.phi(lam, a), b));
        if (lhs != rhs)
          return Verdict::fail("post-hom-tri", {lam, a, b}, {lhs}, {rhs});
      }
  // a passing morphism must also be a homomorphism of the sub-adjacent groups
  Verdict sub = verify_dyn_group_hom(psi, sub_adjacent(s), sub_adjacent(d));
  if (!sub.passed)
    throw InconsistencyError("verify_post_hom: sub-adjacent homomorphism fails: " +
                             to_json_line(sub));
  return Verdict::ok();
}

}  // namespace dyb
