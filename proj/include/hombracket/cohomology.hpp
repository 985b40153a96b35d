#pragma once

#include "hombracket/hom_lie.hpp"

namespace hombracket {

/// Degree +1 square-zero operator on V-valued cochains,
/// d f = (-1)^{k+1} [mu, f] with k the arity of f.
Cochain coboundary(const Cochain& f, const HomLieAlgebra& g);

/// Coboundary on W-valued cochains for a representation (rho, beta): the
/// action sum plus the twisted bracket-insertion sum, slots pre-twisted by
/// powers of the inverse twist.
Cochain rep_coboundary(const Cochain& f, const HomLieAlgebra& g, const Representation& r);

/// The matrix of rep_coboundary from arity k to arity k+1, over the basis
/// (increasing tuple, target basis vector), tuple-major.
Matrix rep_coboundary_matrix(const HomLieAlgebra& g, const Representation& r, int arity);

struct CohomologyDegree {
    int degree = 0;
    int kernel_dim = 0;
    int image_dim = 0; // rank of d leaving this degree
    int h_dim = 0;     // kernel here minus rank of d entering
};

/// Exact cohomology dimensions for degrees 0..max_degree. Verifies d*d = 0
/// on the way; ranks are computed by fraction-free elimination.
std::vector<CohomologyDegree> cohomology_dims(const HomLieAlgebra& g, const Representation& r,
                                              int max_degree);

} // namespace hombracket
