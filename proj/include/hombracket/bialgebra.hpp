#pragma once

#include "hombracket/big_bracket.hpp"
#include "hombracket/hom_lie.hpp"

namespace hombracket {

/// The bracket as an element of the exterior algebra (two covector factors,
/// one vector factor per term).
BigElement mu_as_big(const HomLieAlgebra& g);

/// Shape guards for the structure tensors: a cobracket has one covector and
/// two vector factors per term, phi is a pure three-vector, psi a pure
/// three-covector. Each throws ShapeError.
void validate_cobracket_shape(const BigElement& delta);
void validate_phi_shape(const BigElement& phi);
void validate_psi_shape(const BigElement& psi);

/// The cobracket read as a map V -> wedge^2 V.
BigElement apply_cobracket(const BigElement& delta, const Vec& x);

/// Transpose of the cobracket: the induced arity-2 cochain on the dual
/// space, in dual-basis coordinates. No preconditions.
Cochain dual_cochain(const BigElement& delta);

/// Dual bracket with the full contract: requires the cobracket to be
/// twist-invariant (AdAlphaViolation otherwise) and cross-checks the
/// big-bracket expressions for delta(x) and the transpose against direct
/// tensor transposition before returning the dual cochain.
Cochain dual_bracket(const HomLieAlgebra& g, const BigElement& delta);

/// Full bialgebra verdict: twist invariance of the cobracket, the single
/// master-element condition, the three itemized conditions (hom-Lie on V,
/// hom-Lie on the dual, the cocycle identity), and the agreement of the two
/// routes.
Report check_bialgebra(const HomLieAlgebra& g, const BigElement& delta);

/// Master-element condition for the three-vector twist phi, with the
/// graded component breakdown.
Report check_lie_quasi_bialgebra(const HomLieAlgebra& g, const BigElement& delta,
                                 const BigElement& phi);

/// Mirror check for the three-covector twist psi.
Report check_quasi_lie_bialgebra(const HomLieAlgebra& g, const BigElement& delta,
                                 const BigElement& psi);

} // namespace hombracket
