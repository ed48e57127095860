#include "dyb/ybe.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace dyb {

Braiding::Braiding(DynSet b, Table3 vphi, Table3 p)
    : base(std::move(b)), varphi(std::move(vphi)), psi(std::move(p)) {
  int l = base.lambda_size, n = base.elem_size;
  for (const Table3* t : {&varphi, &psi}) {
    if (t->dim0() != l || t->dim1() != n || t->dim2() != n)
      throw ShapeError("Braiding: tables must be LxNxN");
    if (!t->entries_in_range(n)) throw ShapeError("Braiding: entry out of range");
  }
}

Verdict check_bijective(const Braiding& r) {
  const int n = r.n();
  for (int lam = 0; lam < r.l(); ++lam) {
    std::vector<int> image;
    image.reserve(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [u, v] = r.r(lam, x, y);
        image.push_back(u * n + v);
      }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n * n; ++i)
      if (sorted[static_cast<size_t>(i)] != i) {
        // locate the first duplicated pair for the witness
        std::vector<char> seen(static_cast<size_t>(n) * n, 0);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            int code = image[static_cast<size_t>(x) * n + y];
            if (seen[static_cast<size_t>(code)])
              return Verdict::fail("bijectivity", {lam, x, y},
                                   {code / n, code % n}, {});
            seen[static_cast<size_t>(code)] = 1;
          }
      }
  }
  return Verdict::ok();
}

Verdict check_weight_zero(const Braiding& r) {
  for (int lam = 0; lam < r.l(); ++lam)
    for (int x = 0; x < r.n(); ++x)
      for (int y = 0; y < r.n(); ++y) {
        auto [u, v] = r.r(lam, x, y);
        int lhs = r.phi(r.phi(lam, u), v);
        int rhs = r.phi(r.phi(lam, x), y);
        if (lhs != rhs)
          return Verdict::fail("weight-zero", {lam, x, y}, {lhs}, {rhs});
      }
  return Verdict::ok();
}

Verdict check_nondegenerate(const Braiding& r) {
  const int n = r.n(), l = r.l();
  std::vector<int> row(static_cast<size_t>(n));
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) row[static_cast<size_t>(y)] = r.varphi.at(lam, x, y);
      if (!is_permutation_row(row, n))
        return Verdict::fail("nondegenerate-varphi", {lam, x}, row, {});
    }
  // psi direction: the second output carries the shifted parameter
  // phi(lambda, first output), so injectivity is checked on output
  // (parameter, element) pairs over each source fiber {(lambda, x) :
  // phi(lambda, x) = mu}. At L = 1 this is the classical column check.
  for (int mu = 0; mu < l; ++mu)
    for (int y = 0; y < n; ++y) {
      std::map<std::pair<int, int>, std::pair<int, int>> seen;
      for (int lam = 0; lam < l; ++lam)
        for (int x = 0; x < n; ++x) {
          if (r.phi(lam, x) != mu) continue;
          auto [u, v] = r.r(lam, x, y);
          std::pair<int, int> out{r.phi(lam, u), v};
          auto [it, fresh] = seen.emplace(out, std::pair<int, int>{lam, x});
          if (!fresh)
            return Verdict::fail("nondegenerate-psi", {mu, y},
                                 {it->second.first, it->second.second},
                                 {lam, x});
        }
    }
  return Verdict::ok();
}

namespace {

std::string chain_detail(const std::array<int, 6>& left,
                         const std::array<int, 6>& right) {
  std::ostringstream os;
  os << "lhs d,e,f,g,h,k=";
  for (size_t i = 0; i < 6; ++i) os << (i ? "," : "") << left[i];
  os << " rhs q,r,s,t,v,w=";
  for (size_t i = 0; i < 6; ++i) os << (i ? "," : "") << right[i];
  return os.str();
}

}  // namespace

Verdict check_dybe(const Braiding& r) {
  Verdict pre = check_bijective(r);
  if (!pre.passed) return pre;
  pre = check_weight_zero(r);
  if (!pre.passed) return pre;

  const int n = r.n();
  for (int lam = 0; lam < r.l(); ++lam)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          // left side: R12, then R23 at phi(lam, first), then R12
          auto [d, e] = r.r(lam, x, y);
          auto [f, g] = r.r(r.phi(lam, d), e, z);
          auto [h, k] = r.r(lam, d, f);
          // right side: R23 at phi(lam, first), then R12, then R23
          auto [q, rr] = r.r(r.phi(lam, x), y, z);
          auto [s, t] = r.r(lam, x, q);
          auto [v, w] = r.r(r.phi(lam, s), t, rr);
          if (h != s || k != v || g != w)
            return Verdict::fail(
                "dybe", {lam, x, y, z}, {h, k, g}, {s, v, w},
                chain_detail({d, e, f, g, h, k}, {q, rr, s, t, v, w}));
        }
  return Verdict::ok();
}

Verdict check_compatible_actions(const DynGroup& g, const Braiding& r) {
  if (g.base != r.base)
    throw ShapeError("check_compatible_actions: braiding not on the group's set");
  {
    Verdict v = verify_dyn_group(g);
    if (!v.passed)
      throw PreconditionError("check_compatible_actions: unverified group: " +
                              to_json_line(v));
  }
  const int l = g.l(), n = g.n();
  // varphi(lam, a o b, c) = varphi(lam, a, varphi(phi(lam,a), b, c))
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = r.varphi.at(lam, g.op(lam, a, b), c);
          int rhs = r.varphi.at(lam, a, r.varphi.at(g.phi(lam, a), b, c));
          if (lhs != rhs)
            return Verdict::fail("compatible-action-1", {lam, a, b, c}, {lhs}, {rhs});
        }
  // psi(lam, a, b o_{phi(lam,a)} c) = psi(phi(lam, varphi(lam,a,b)), psi(lam,a,b), c)
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = r.psi.at(lam, a, g.op(g.phi(lam, a), b, c));
          int rhs = r.psi.at(g.phi(lam, r.varphi.at(lam, a, b)),
                             r.psi.at(lam, a, b), c);
          if (lhs != rhs)
            return Verdict::fail("compatible-action-2", {lam, a, b, c}, {lhs}, {rhs});
        }
  // varphi(lam,a,b) o psi(lam,a,b) = a o b
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int lhs = g.op(lam, r.varphi.at(lam, a, b), r.psi.at(lam, a, b));
        int rhs = g.op(lam, a, b);
        if (lhs != rhs)
          return Verdict::fail("compatible-action-3", {lam, a, b}, {lhs}, {rhs});
      }
  return Verdict::ok();
}

Braiding flip_braiding(const DynSet& s) {
  Table3 vphi(s.lambda_size, s.elem_size, s.elem_size);
  Table3 psi(s.lambda_size, s.elem_size, s.elem_size);
  for (int lam = 0; lam < s.lambda_size; ++lam)
    for (int x = 0; x < s.elem_size; ++x)
      for (int y = 0; y < s.elem_size; ++y) {
        vphi.at(lam, x, y) = y;
        psi.at(lam, x, y) = x;
      }
  return Braiding(s, std::move(vphi), std::move(psi));
}

}  // namespace dyb
