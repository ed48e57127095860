#ifndef DYB_YBE_HPP
#define DYB_YBE_HPP

#include "dyb/core.hpp"

namespace dyb {

/// A candidate braiding R(lambda)(x,y) = (varphi(lambda,x,y), psi(lambda,x,y))
/// on a dynamical set.
///
/// psi is stored with argument order (lambda, x, y) -> psi^lambda_y(x): the
/// second output of R at the pair (x, y). This transposition relative to the
/// subscript/argument convention makes R(lambda)(x,y) a single two-table
/// lookup.
struct Braiding {
  DynSet base;
  Table3 varphi;  // first output
  Table3 psi;     // second output

  Braiding() = default;
  Braiding(DynSet b, Table3 vphi, Table3 p);

  int n() const { return base.elem_size; }
  int l() const { return base.lambda_size; }
  int phi(int lam, int x) const { return base.phi.at(lam, x); }
  std::pair<int, int> r(int lam, int x, int y) const {
    return {varphi.at(lam, x, y), psi.at(lam, x, y)};
  }
};

/// R(lambda) is a bijection of N x N for every lambda.
Verdict check_bijective(const Braiding& r);

/// phi(phi(lambda, varphi(lambda,x,y)), psi(lambda,x,y)) = phi(phi(lambda,x), y).
Verdict check_weight_zero(const Braiding& r);

/// Non-degeneracy of both component directions. The varphi direction is
/// row bijectivity y -> varphi(lambda,x,y). The psi direction tracks the
/// shifted output parameter: over each source fiber {(lambda,x) :
/// phi(lambda,x) = mu} the map to output pairs (phi(lambda, varphi), psi)
/// must be injective, which at L = 1 collapses to column bijectivity.
Verdict check_nondegenerate(const Braiding& r);

/// The braid relation with the middle factor evaluated at the shifted
/// parameter phi(lambda, current first coordinate). Re-checks per-lambda
/// bijectivity and weight zero first and propagates their witnesses; the
/// two sides are evaluated stepwise so a failing witness carries the full
/// intermediate chain.
Verdict check_dybe(const Braiding& r);

/// The three compatibility identities tying a braiding to a group product;
/// together with weight zero they force the braid relation.
Verdict check_compatible_actions(const DynGroup& g, const Braiding& r);

/// Flip braiding R(lambda)(x,y) = (y,x) on a set.
Braiding flip_braiding(const DynSet& s);

}  // namespace dyb

#endif
