#ifndef DYB_POSTBRACE_HPP
#define DYB_POSTBRACE_HPP

#include "dyb/core.hpp"
#include "dyb/matched.hpp"
#include "dyb/rota.hpp"
#include "dyb/ybe.hpp"

namespace dyb {

/// A dynamical post-group: a constant dynamical group (dot slices sharing
/// one unit) with an extra operation tri whose left translations are
/// bijective, distributive over dot and weighted-associative.
///
/// The `weak` flag waives bijectivity and the unit laws (the sub-adjacent
/// product is then only a semi-group); `pre` additionally asserts abelian
/// dot slices. Both are flags on the same type because they differ only in
/// which invariants are asserted.
struct PostGroup {
  DynSet base;
  Table3 dot;  // constant product slices (lambda, a, b)
  Table3 tri;  // (lambda, a, b) -> a |> b
  int unit = 0;
  Table2 dot_inverse;  // derived: (lambda, a) -> a^lambda
  bool weak = false;
  bool pre = false;

  PostGroup() = default;
  PostGroup(DynSet b, Table3 dot_table, Table3 tri_table, int unit_elem,
            bool weak_variant = false, bool pre_variant = false);

  int n() const { return base.elem_size; }
  int l() const { return base.lambda_size; }
  int phi(int lam, int x) const { return base.phi.at(lam, x); }
  int dot_at(int lam, int a, int b) const { return dot.at(lam, a, b); }
  int tri_at(int lam, int a, int b) const { return tri.at(lam, a, b); }
  int dot_inv(int lam, int a) const;
};

bool same_post_tables(const PostGroup& a, const PostGroup& b);

/// Checks, in order: dot slices form a constant dynamical group; tri rows
/// bijective; tri unit laws; distributivity; weighted associativity; and
/// structure-map compatibility of the sub-adjacent product
/// (phi(lambda, e) = lambda and phi(lambda, a.(a|>b)) = phi(phi(lambda,a), b)).
/// Weak mode skips bijectivity, unit laws and the compatibility check.
Verdict verify_post_group(const PostGroup& p);

/// Verify + derive the dot inverse table; PreconditionError on failure.
PostGroup checked_post_group(PostGroup p);

/// Sub-adjacent group a o b = a . (a |> b); also asserts that the left
/// tri-translations act on the dot structure.
DynGroup sub_adjacent(const PostGroup& p);

/// Sub-adjacent product table of a weak post-group; associativity of the
/// result is asserted, inverses and the left unit are not.
DynGroup sub_adjacent_semigroup(const PostGroup& p);

/// R_G(lambda,a,b) = (a|>b, inv(a|>b) o_{phi(lambda,a|>b)} (a o b)) on the
/// sub-adjacent group.
BraidedGroup post_to_braided(const PostGroup& p);

/// a |> b = a rharp b and a . b = a o (inv(a) rharp_{phi(lambda,a)} b);
/// round-trips with post_to_braided exactly.
PostGroup braided_to_post(const BraidedGroup& b);

/// One constant group and one dynamical group on the same set with shared
/// unit, linked by a o (b . c) = (a o b) . a^lambda . (a o c).
struct SkewBrace {
  DynSet base;
  Table3 dot;   // constant product
  Table3 circ;  // dynamical product
  int unit = 0;
  Table2 dot_inverse;   // derived: a^lambda
  Table2 circ_inverse;  // derived: inverse for circ

  SkewBrace() = default;
  SkewBrace(DynSet b, Table3 dot_table, Table3 circ_table, int unit_elem);

  int n() const { return base.elem_size; }
  int l() const { return base.lambda_size; }
  int phi(int lam, int x) const { return base.phi.at(lam, x); }
  int dot_at(int lam, int a, int b) const { return dot.at(lam, a, b); }
  int circ_at(int lam, int a, int b) const { return circ.at(lam, a, b); }
  int dot_inv(int lam, int a) const;
  int circ_inv(int lam, int a) const;
};

bool same_brace_tables(const SkewBrace& a, const SkewBrace& b);

/// Both underlying structures verify with the shared unit and the
/// compatibility identity holds everywhere. The derived inversion identity
/// (a o b)^lambda = a^lambda . (a o b^{phi(lambda,a)}) . a^lambda is
/// re-checked as an internal cross-check; its failure raises
/// InconsistencyError rather than a verdict.
Verdict verify_skew_brace(const SkewBrace& s);

SkewBrace checked_skew_brace(SkewBrace s);

/// dot unchanged, circ = sub-adjacent product.
SkewBrace post_to_skewbrace(const PostGroup& p);

/// a |> b = a^lambda . (a o b); sub_adjacent of the result equals circ.
PostGroup skewbrace_to_post(const SkewBrace& s);

/// Solution induced directly from the brace tables; equals
/// braided_to_solution(post_to_braided(skewbrace_to_post(s))) entry for
/// entry.
Braiding skewbrace_solution(const SkewBrace& s);

/// Post-group induced by a relative Rota-Baxter operator:
/// x |>^B y = Phi_lambda(B(x))(y) over phi_B; sub_adjacent equals the
/// descendant group exactly.
PostGroup rbo_to_post(const RelRBO& r);

/// The identity map on a post-group's carrier as a relative Rota-Baxter
/// operator on its sub-adjacent group with the left tri-translation action.
RelRBO identity_rbo(const PostGroup& p);

/// Homomorphism of post-groups: dot-multiplicative at each lambda and
/// tri-equivariant with the shifted second argument. A passing morphism is
/// asserted to be a homomorphism of the sub-adjacent groups.
Verdict verify_post_hom(const DynSetMorphism& psi, const PostGroup& src,
                        const PostGroup& dst);

}  // namespace dyb

#endif
