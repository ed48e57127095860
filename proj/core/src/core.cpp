#include "dyb/core.hpp"

#include <sstream>

namespace dyb {

bool is_permutation_row(const std::vector<int>& row, int n) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int x : row) {
    if (x < 0 || x >= n || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = 1;
  }
  return static_cast<int>(row.size()) == n;
}

std::string to_json_line(const Verdict& v) {
  std::ostringstream os;
  auto arr = [&os](const std::vector<int>& xs) {
    os << '[';
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ',';
      os << xs[i];
    }
    os << ']';
  };
  os << "{\"passed\":" << (v.passed ? "true" : "false");
  if (v.witness) {
    const Witness& w = *v.witness;
    os << ",\"axiom\":\"" << w.axiom << "\",\"tuple\":";
    arr(w.tuple);
    os << ",\"lhs\":";
    arr(w.lhs);
    os << ",\"rhs\":";
    arr(w.rhs);
    if (!w.detail.empty()) os << ",\"detail\":\"" << w.detail << "\"";
  }
  os << "}";
  return os.str();
}

DynSet::DynSet(int l, int n, Table2 phi_table)
    : lambda_size(l), elem_size(n), phi(std::move(phi_table)) {
  if (l < 1 || n < 1)
    throw ShapeError("DynSet: sizes must be positive, got L=" +
                     std::to_string(l) + " N=" + std::to_string(n));
  if (phi.dim0() != l || phi.dim1() != n)
    throw ShapeError("DynSet: phi must be " + std::to_string(l) + "x" +
                     std::to_string(n) + ", got " + std::to_string(phi.dim0()) +
                     "x" + std::to_string(phi.dim1()));
  if (!phi.entries_in_range(l))
    throw ShapeError("DynSet: phi entry out of range 0.." + std::to_string(l - 1));
}

DynGroup::DynGroup(DynSet b, Table3 prod, int unit_elem)
    : base(std::move(b)), product(std::move(prod)), unit(unit_elem) {
  int l = base.lambda_size, n = base.elem_size;
  if (product.dim0() != l || product.dim1() != n || product.dim2() != n)
    throw ShapeError("DynGroup: product must be LxNxN = " + std::to_string(l) +
                     "x" + std::to_string(n) + "x" + std::to_string(n));
  if (!product.entries_in_range(n))
    throw ShapeError("DynGroup: product entry out of range");
  if (unit < 0 || unit >= n) throw ShapeError("DynGroup: unit out of range");
}

int DynGroup::inv(int lam, int a) const {
  if (inverse.empty())
    throw PreconditionError("DynGroup: inverse table not derived");
  return inverse.at(lam, a);
}

bool same_group_tables(const DynGroup& a, const DynGroup& b) {
  return a.base == b.base && a.product == b.product && a.unit == b.unit;
}

Verdict verify_dyn_group(const DynGroup& g) {
  const int l = g.l(), n = g.n(), e = g.unit;
  // unit: a o e = e o a = a
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a) {
      if (g.op(lam, a, e) != a)
        return Verdict::fail("unit", {lam, a}, {g.op(lam, a, e)}, {a});
      if (g.op(lam, e, a) != a)
        return Verdict::fail("unit", {lam, a}, {g.op(lam, e, a)}, {a});
    }
  // phi-unit: phi(lambda, e) = lambda
  for (int lam = 0; lam < l; ++lam)
    if (g.phi(lam, e) != lam)
      return Verdict::fail("phi-unit", {lam}, {g.phi(lam, e)}, {lam});
  // phi-asso: phi(lambda, a o b) = phi(phi(lambda, a), b)
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int lhs = g.phi(lam, g.op(lam, a, b));
        int rhs = g.phi(g.phi(lam, a), b);
        if (lhs != rhs) return Verdict::fail("phi-asso", {lam, a, b}, {lhs}, {rhs});
      }
  // associativity: a o (b o_{phi(lam,a)} c) = (a o b) o c
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = g.op(lam, a, g.op(g.phi(lam, a), b, c));
          int rhs = g.op(lam, g.op(lam, a, b), c);
          if (lhs != rhs)
            return Verdict::fail("associativity", {lam, a, b, c}, {lhs}, {rhs});
        }
  // inverses: exists x with a o x = e and x o_{phi(lam,a)} a = e
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a) {
      int x = -1;
      for (int b = 0; b < n; ++b)
        if (g.op(lam, a, b) == e) {
          x = b;
          break;
        }
      if (x < 0) return Verdict::fail("inverse", {lam, a}, {}, {e});
      int back = g.op(g.phi(lam, a), x, a);
      if (back != e) return Verdict::fail("inverse", {lam, a}, {back}, {e});
    }
  return Verdict::ok();
}

Table2 inverse_table(const DynGroup& g) {
  const int l = g.l(), n = g.n(), e = g.unit;
  Table2 inv(l, n, -1);
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a) {
      int x = -1;
      for (int b = 0; b < n; ++b)
        if (g.op(lam, a, b) == e) {
          x = b;
          break;
        }
      if (x < 0)
        throw InconsistencyError("inverse_table: no right inverse at (" +
                                 std::to_string(lam) + "," + std::to_string(a) +
                                 "); verify_dyn_group was skipped");
      if (g.op(g.phi(lam, a), x, a) != e)
        throw InconsistencyError("inverse_table: right-inverse mismatch at (" +
                                 std::to_string(lam) + "," + std::to_string(a) +
                                 "); verify_dyn_group was skipped");
      inv.at(lam, a) = x;
    }
  return inv;
}

DynGroup checked_group(DynGroup g) {
  Verdict v = verify_dyn_group(g);
  if (!v.passed)
    throw PreconditionError("checked_group: verification failed: " +
                            to_json_line(v));
  g.inverse = inverse_table(g);
  return g;
}

DynGroup checked_group(DynSet base, Table3 product, int unit_elem) {
  return checked_group(DynGroup(std::move(base), std::move(product), unit_elem));
}

bool is_constant(const DynGroup& g) {
  for (int lam = 0; lam < g.l(); ++lam)
    for (int x = 0; x < g.n(); ++x)
      if (g.phi(lam, x) != lam) return false;
  return true;
}

Verdict verify_group_table(const Table2& cayley, int unit) {
  int n = cayley.dim0();
  if (cayley.dim1() != n || !cayley.entries_in_range(n) || unit < 0 || unit >= n)
    throw ShapeError("verify_group_table: expected NxN table with unit in range");
  Table3 prod(1, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) prod.at(0, a, b) = cayley.at(a, b);
  DynGroup g(DynSet(1, n, Table2(1, n, 0)), std::move(prod), unit);
  return verify_dyn_group(g);
}

int find_group_unit(const Table2& cayley) {
  int n = cayley.dim0();
  for (int e = 0; e < n; ++e) {
    bool good = true;
    for (int a = 0; a < n && good; ++a)
      good = cayley.at(a, e) == a && cayley.at(e, a) == a;
    if (good) return e;
  }
  return -1;
}

DynGroup trivial_from_group(const Table2& cayley, int lambda_size) {
  int n = cayley.dim0();
  int e = find_group_unit(cayley);
  if (e < 0)
    throw PreconditionError("trivial_from_group: table has no two-sided unit");
  Verdict v = verify_group_table(cayley, e);
  if (!v.passed)
    throw PreconditionError("trivial_from_group: not a group table: " +
                            to_json_line(v));
  Table3 prod(lambda_size, n, n);
  for (int lam = 0; lam < lambda_size; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) prod.at(lam, a, b) = cayley.at(a, b);
  Table2 phi(lambda_size, n);
  for (int lam = 0; lam < lambda_size; ++lam)
    for (int x = 0; x < n; ++x) phi.at(lam, x) = lam;
  return checked_group(DynSet(lambda_size, n, std::move(phi)), std::move(prod), e);
}

DynSetMorphism::DynSetMorphism(DynSet src, DynSet dst, Table2 table)
    : source(std::move(src)), target(std::move(dst)), f(std::move(table)) {
  if (source.lambda_size != target.lambda_size)
    throw ShapeError("DynSetMorphism: parameter sets differ");
  if (f.dim0() != source.lambda_size || f.dim1() != source.elem_size)
    throw ShapeError("DynSetMorphism: f must be L x N_src");
  if (!f.entries_in_range(target.elem_size))
    throw ShapeError("DynSetMorphism: f entry outside target");
}

Verdict verify_morphism(const DynSetMorphism& m) {
  for (int lam = 0; lam < m.source.lambda_size; ++lam)
    for (int x = 0; x < m.source.elem_size; ++x) {
      int lhs = m.target.phi_at(lam, m.at(lam, x));
      int rhs = m.source.phi_at(lam, x);
      if (lhs != rhs) return Verdict::fail("morphism", {lam, x}, {lhs}, {rhs});
    }
  return Verdict::ok();
}

Verdict verify_dyn_group_hom(const DynSetMorphism& psi, const DynGroup& src,
                             const DynGroup& dst) {
  if (psi.source != src.base || psi.target != dst.base)
    throw ShapeError("verify_dyn_group_hom: morphism endpoints do not match groups");
  Verdict m = verify_morphism(psi);
  if (!m.passed)
    throw PreconditionError("verify_dyn_group_hom: not a morphism of dynamical sets: " +
                            to_json_line(m));
  for (const DynGroup* g : {&src, &dst}) {
    Verdict v = verify_dyn_group(*g);
    if (!v.passed)
      throw PreconditionError("verify_dyn_group_hom: unverified group: " +
                              to_json_line(v));
  }
  for (int lam = 0; lam < src.l(); ++lam)
    for (int a = 0; a < src.n(); ++a)
      for (int b = 0; b < src.n(); ++b) {
        int lhs = psi.at(lam, src.op(lam, a, b));
        int rhs = dst.op(lam, psi.at(lam, a), psi.at(src.phi(lam, a), b));
        if (lhs != rhs) return Verdict::fail("hom", {lam, a, b}, {lhs}, {rhs});
      }
  return Verdict::ok();
}

DynSetMorphism identity_morphism(const DynSet& s) {
  Table2 f(s.lambda_size, s.elem_size);
  for (int lam = 0; lam < s.lambda_size; ++lam)
    for (int x = 0; x < s.elem_size; ++x) f.at(lam, x) = x;
  return DynSetMorphism(s, s, std::move(f));
}

}  // namespace dyb
