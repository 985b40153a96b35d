#pragma once

#include "hombracket/big_element.hpp"

namespace hombracket {

/// The twisted graded bracket on the exterior algebra over V + V*. Bilinear;
/// on two canonical monomials it contracts each vector factor of one side
/// into the covector word of the other through the twisted interior product,
/// with the inverse-dual / forward twists on the untouched factors. Both
/// pure-vector and pure-covector pairs bracket to zero, as do scalars
/// against anything.
BigElement big_bracket(const BigElement& a, const BigElement& b, const TwistMap& alpha);

/// Residual of the bridge between the two bracket views on elements with a
/// single vector factor per term: big_bracket(a, b) + (-1)^{ql} times the
/// image of the cochain-side bracket, where q and l count the covector
/// degrees. Zero exactly when the two conventions agree.
BigElement nr_consistency_residual(const BigElement& a, const BigElement& b,
                                   const TwistMap& alpha);

} // namespace hombracket
