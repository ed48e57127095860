#ifndef DYB_CORE_HPP
#define DYB_CORE_HPP

#include <vector>

#include "dyb/tables.hpp"
#include "dyb/verdict.hpp"

// Table-backed finite dynamical sets and dynamical groups.
//
// Elements and parameters are dense indices 0..N-1 and 0..L-1; named labels
// exist only in the document layer. All types are immutable after
// construction and the verifiers are pure functions over read-only tables,
// so any verified structure may be shared across concurrent readers.

namespace dyb {

/// A finite set of N elements with a structure map phi over L parameters.
struct DynSet {
  int lambda_size = 0;  // L
  int elem_size = 0;    // N
  Table2 phi;           // (lambda, x) -> lambda', L x N

  DynSet() = default;
  DynSet(int l, int n, Table2 phi_table);

  int phi_at(int lam, int x) const { return phi.at(lam, x); }

  friend bool operator==(const DynSet&, const DynSet&) = default;
};

/// A dynamical group: lambda-indexed products with a shared unit and
/// parameter-dependent inverses.
///
/// The inverse table is always derived, never user-supplied; it stays empty
/// until inverse_table()/checked_group() fills it.
struct DynGroup {
  DynSet base;
  Table3 product;  // (lambda, a, b) -> a o_lambda b
  int unit = 0;
  Table2 inverse;  // (lambda, a) -> inverse of a at lambda; derived

  DynGroup() = default;
  DynGroup(DynSet b, Table3 prod, int unit_elem);

  int n() const { return base.elem_size; }
  int l() const { return base.lambda_size; }
  int phi(int lam, int x) const { return base.phi.at(lam, x); }
  int op(int lam, int a, int b) const { return product.at(lam, a, b); }
  bool has_inverse() const { return !inverse.empty(); }
  int inv(int lam, int a) const;
};

/// Same product/phi/unit tables, derived inverse excluded.
bool same_group_tables(const DynGroup& a, const DynGroup& b);

/// Checks the dynamical group axioms exhaustively. Axioms are tried in the
/// fixed order unit, phi-unit, phi-asso, associativity, inverses; within an
/// axiom the scan is lexicographic in (lambda, a, b, c).
Verdict verify_dyn_group(const DynGroup& g);

/// Derives the inverse table of a verified group. For each (lambda, a) finds
/// the unique x with a o_lambda x = e and checks x o_{phi(lambda,a)} a = e.
/// Throws InconsistencyError if either step fails (verify was skipped).
Table2 inverse_table(const DynGroup& g);

/// Verify + derive inverses in one step; throws PreconditionError with the
/// witness text when verification fails.
DynGroup checked_group(DynSet base, Table3 product, int unit_elem);
DynGroup checked_group(DynGroup g);

/// phi(lambda, x) = lambda everywhere?
bool is_constant(const DynGroup& g);

/// Ordinary-group check on one Cayley table (the L=1 special case of
/// verify_dyn_group). `unit` = designated unit element.
Verdict verify_group_table(const Table2& cayley, int unit);

/// Finds the two-sided unit of an ordinary group table, or -1.
int find_group_unit(const Table2& cayley);

/// Builds the constant dynamical group with every slice equal to `cayley`.
/// Throws PreconditionError carrying a verdict-style message if the table is
/// not a group.
DynGroup trivial_from_group(const Table2& cayley, int lambda_size);

/// A family of maps f_lambda : source -> target.
struct DynSetMorphism {
  DynSet source;
  DynSet target;
  Table2 f;  // (lambda, x) -> element of target

  DynSetMorphism() = default;
  DynSetMorphism(DynSet src, DynSet dst, Table2 table);

  int at(int lam, int x) const { return f.at(lam, x); }
};

/// phi_Y(lambda, f(lambda,x)) = phi_X(lambda,x) everywhere.
Verdict verify_morphism(const DynSetMorphism& m);

/// psi(a o b) = psi(a) o' psi_{phi(lambda,a)}(b) everywhere. Inputs are
/// re-verified; failures raise PreconditionError.
Verdict verify_dyn_group_hom(const DynSetMorphism& psi, const DynGroup& src,
                             const DynGroup& dst);

/// Identity morphism on a set.
DynSetMorphism identity_morphism(const DynSet& s);

}  // namespace dyb

#endif
