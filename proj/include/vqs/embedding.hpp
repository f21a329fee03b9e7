#pragma once

#include "vqs/quad.hpp"

namespace vqs {

struct HyperbolicComplement {
  Subspace sigma;    // N + N~, hyperbolic of dimension 2 dim N
  Subspace n_tilde;  // the mirror half
};

// Recursive construction: pick u in N, solve B(u,v)=1 inside the current
// complement, split off <u,v>, recurse on <u,v>^perp.  Requires an
// invertible gram and B identically zero on n_sub.  Postconditions
// (dim Sigma = 2 dim N, N^perp cap Sigma = N, B invertible on Sigma) are
// asserted before returning.
HyperbolicComplement hyperbolic_complement(const Mat& gram,
                                           const Subspace& n_sub);

// Characteristic 2, invertible (hence alternating) gram: a basis
// (e1,f1,...,ek,fk), as rows, in which B is block-hyperbolic.
Mat symplectic_basis(const Mat& gram);

struct MinimalDecomposition {
  Subspace n_sub;    // N = U cap U^perp
  Subspace m_sub;    // M = U cap Sigma^perp
  Subspace sigma;    // Sigma = N + N~
  Subspace n_tilde;  // N~
  Subspace m_hat;    // M^perp cap Sigma^perp
  Subspace vm;       // V_m = U + Sigma
};

// Embed a (possibly degenerate) quadratic space U into a minimal virtual
// quadratic space: V = U + N~ with the ambient form
// Q~(u~ + v) = Q(v) + sum f~_i(u~) f_i(v), where the f_i read off the
// pivot coordinates of a basis of N = ker B.
VirtualQuadraticSpace embed_ambient(const QuadraticSpace& u_space);

struct MinimalizeResult {
  VirtualQuadraticSpace space;  // re-expressed in V_m coordinates
  MinimalDecomposition decomp;  // subspaces in the original ambient
  Mat vm_basis;                 // rows: the V_m basis used for coordinates
};

MinimalizeResult minimalize(const VirtualQuadraticSpace& vqs);

// Exhaustively checks Iso(V,U) = Iso(V_m,U): equal orders and identical
// element sets after restriction to V_m.  Test hook; enumeration-backed.
bool iso_preserving_restriction_check(const VirtualQuadraticSpace& vqs,
                                      const MinimalizeResult& minimal);

}  // namespace vqs
