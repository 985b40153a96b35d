#pragma once

#include "hombracket/cochain.hpp"
#include "hombracket/matrix.hpp"
#include "hombracket/report.hpp"

namespace hombracket {

/// A certified hom-Lie algebra: an invertible twist together with an
/// arity-2 bracket that passed is_hom_lie. Construction goes through
/// certify(), so holding a value implies the axioms hold.
class HomLieAlgebra {
public:
    static HomLieAlgebra certify(TwistMap alpha, Cochain mu);

    int dim() const { return alpha_.dim(); }
    const TwistMap& alpha() const { return alpha_; }
    const Cochain& mu() const { return mu_; }

    Vec bracket(const Vec& x, const Vec& y) const { return mu_.eval({x, y}); }
    Vec bracket_basis(int i, int j) const { return mu_.eval_basis({i, j}); }

private:
    HomLieAlgebra(TwistMap alpha, Cochain mu) : alpha_(std::move(alpha)), mu_(std::move(mu)) {}
    TwistMap alpha_;
    Cochain mu_;
};

/// Reports the two representation identities on all basis pairs:
/// rho(alpha x) beta = beta rho(x) and
/// rho([x,y]) beta = rho(alpha x) rho(y) - rho(alpha y) rho(x).
Report check_representation(const HomLieAlgebra& g, const std::vector<Matrix>& rho,
                            const TwistMap& beta);

/// A certified representation of g on a space W with twist beta. rho holds
/// one W-endomorphism per basis vector of V and extends linearly.
class Representation {
public:
    static Representation certify(const HomLieAlgebra& g, std::vector<Matrix> rho, TwistMap beta);
    /// The adjoint representation x -> mu(x, .) with beta = alpha.
    static Representation adjoint(const HomLieAlgebra& g);
    /// The direct sum of the adjoint action and a one-dimensional trivial
    /// summand; a handy non-adjoint module over any instance.
    static Representation adjoint_plus_trivial(const HomLieAlgebra& g);
    /// The zero action on a wdim-dimensional space with the given twist.
    static Representation trivial(const HomLieAlgebra& g, TwistMap beta);

    int wdim() const { return beta_.dim(); }
    const TwistMap& beta() const { return beta_; }
    const std::vector<Matrix>& rho() const { return rho_; }
    /// rho extended linearly to an arbitrary element of V.
    Matrix rho_of(const Vec& x) const;

private:
    Representation(std::vector<Matrix> rho, TwistMap beta)
        : rho_(std::move(rho)), beta_(std::move(beta)) {}
    std::vector<Matrix> rho_;
    TwistMap beta_;
};

} // namespace hombracket
