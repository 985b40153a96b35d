#pragma once

#include "hombracket/hom_lie.hpp"

namespace hombracket {

/// A bilinear product table together with a twist that must preserve it.
/// The table is full (not antisymmetrized): table[i][j] = e_i * e_j.
struct RightSymmetricAlgebra {
    TwistMap gamma;
    std::vector<std::vector<Vec>> table;

    int dim() const { return gamma.dim(); }
    Vec product_basis(int i, int j) const { return table[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    Vec product(const Vec& x, const Vec& y) const;
};

/// Verifies that gamma is a multiplication morphism and that the associator
/// identity (x*y)*g(z) - g(x)*(y*z) = (x*z)*g(y) - g(x)*(z*y) holds on all
/// basis triples.
Report check_right_symmetric(const RightSymmetricAlgebra& rs);

/// The commutator bracket [x,y] = x*y - y*x packaged and re-certified as a
/// hom-Lie algebra. Throws NotRightSymmetric when the input fails its check.
HomLieAlgebra commutator_hom_lie(const RightSymmetricAlgebra& rs);

} // namespace hombracket
