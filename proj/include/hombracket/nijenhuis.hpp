#pragma once

#include "hombracket/bialgebra.hpp"
#include "hombracket/right_symmetric.hpp"

namespace hombracket {

/// A bracket family [x,y] + t w(x,y) + ... held coefficientwise; exact
/// arithmetic in each coefficient, degree at most 2 in the parameter.
struct DeformationPolynomial {
    std::vector<Cochain> coeffs; // index = power of t

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Cochain eval(const Rational& t) const;
    bool operator==(const DeformationPolynomial& o) const;
};

/// The i-fold twisted composition power of an arity-1 map. The 0-fold power
/// is the twist itself, which acts as the unit of the twisted composition
/// on twist-commuting maps.
Matrix compose_power(const Matrix& n, int i, const TwistMap& alpha);

/// Twisted-torsion check for an endomorphism commuting with the twist.
/// Evaluates both the nested master-element condition and the direct
/// bracket identity on all basis pairs, and reports whether they agree.
/// Throws AdAlphaViolation when N does not commute with the twist.
Report is_hom_nijenhuis(const Matrix& n, const HomLieAlgebra& g);

/// The 2-cocycle generated by a certified operator, computed through the
/// nested bracket formula and, independently, as the coboundary of N; the
/// two must agree. Returns the cocycle and the deformed bracket mu + t w.
std::pair<Cochain, DeformationPolynomial> deformation_from_n(const Matrix& n,
                                                             const HomLieAlgebra& g);

/// The three deformation conditions on a 2-cochain (twist invariance, the
/// mixed cocycle identity, the squared identity), each cross-checked
/// against its bracket-machinery formulation.
Report check_deformation(const Cochain& omega, const HomLieAlgebra& g);

/// Coefficientwise comparison of (alpha + tN)[x,y]_t with
/// [(alpha + tN)x, (alpha + tN)y], plus the two displayed consequences.
Report check_trivial_deformation(const Matrix& n, const Cochain& omega, const HomLieAlgebra& g);

/// P(N) built from twisted composition powers, certified in turn. Also
/// verifies the power identity: the i-fold twisted power of an
/// alpha-commuting N equals N^i alpha^{-(i-1)}.
std::pair<Matrix, Report> poly_of_nijenhuis(const std::vector<Rational>& coeffs, const Matrix& n,
                                            const HomLieAlgebra& g);

/// The mixed-powers identity for all 0 <= i, j <= max_power on basis pairs,
/// with plain matrix powers N^i.
Report powers_lemma_check(const Matrix& n, const HomLieAlgebra& g, int max_power);

/// Semidirect product on V + W, twist alpha + beta, bracket
/// [(x,u),(y,v)] = ([x,y], rho(x)v - rho(y)u). The result must certify as a
/// hom-Lie algebra; a twisted fallback variant is tried if the primary
/// formula fails, and ConstructionFailure raised when neither passes.
HomLieAlgebra semidirect_product(const HomLieAlgebra& g, const Representation& r);

/// The embedding of a map W -> V as the strictly upper block of an
/// endomorphism of V + W.
Matrix o_operator_block(const Matrix& t, const HomLieAlgebra& g, const Representation& r);

/// The two defining conditions: T beta = alpha T and the bracket-transport
/// identity on all basis pairs of W.
Report is_hom_o_operator(const Matrix& t, const HomLieAlgebra& g, const Representation& r);

/// The induced product u*v = rho(T(beta^-1 v))(u) on W with twist beta; the
/// result must pass check_right_symmetric. Throws NotOOperator when T fails
/// its check.
RightSymmetricAlgebra right_symmetric_from_o(const Matrix& t, const HomLieAlgebra& g,
                                             const Representation& r);

} // namespace hombracket
