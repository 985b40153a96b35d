#include "hombracket/big_bracket.hpp"

#include "hombracket/errors.hpp"

namespace hombracket {

namespace {

int parity_sign(long long e) {
    return (e % 2 == 0) ? 1 : -1;
}

// Bracket of two canonical basis monomials (cov1|vec1) and (cov2|vec2),
// through the closed contraction formula. Sizes p, q, l, k follow the
// factor counts: |vec1| = p+1, |cov1| = q+1, |cov2| = l+1, |vec2| = k+1,
// so empty factors give the value -1. The two sums contract vector factors
// of one side into the covector word of the other; the empty-factor cases
// degenerate correctly because an interior product against a scalar is zero
// and empty sums vanish.
BigElement bracket_monomial(int dim, const MultiIndex& cov1, const MultiIndex& vec1,
                            const MultiIndex& cov2, const MultiIndex& vec2,
                            const TwistMap& alpha) {
    const long long p = static_cast<long long>(vec1.size()) - 1;
    const long long q = static_cast<long long>(cov1.size()) - 1;
    const long long l = static_cast<long long>(cov2.size()) - 1;

    const Matrix dual_inv = alpha.dual_inverse();
    BigElement out(dim);

    // first sum: vectors of the left monomial against covectors of the right
    if (!vec1.empty() && !cov2.empty()) {
        const int s1 = parity_sign(p * l + p);
        const BigElement tc1 =
            BigElement::monomial(dim, cov1, {}, 1).transform_factors(dual_inv, alpha.forward());
        const BigElement ty2 =
            BigElement::monomial(dim, {}, vec2, 1).transform_factors(dual_inv, alpha.forward());
        for (int j = 0; j < static_cast<int>(vec1.size()); ++j) {
            BigElement ip = interior(Vec::basis(dim, vec1[static_cast<size_t>(j)]),
                                     BigElement::monomial(dim, cov2, {}, 1), alpha);
            if (ip.is_zero())
                continue;
            BigElement tv1 = BigElement::monomial(dim, {}, erase_at(vec1, j), 1)
                                 .transform_factors(dual_inv, alpha.forward());
            BigElement term = wedge(wedge(tc1, ip), wedge(tv1, ty2));
            int sign = s1 * parity_sign(j);
            out += Rational(sign) * term;
        }
    }

    // second sum: vectors of the right monomial against covectors of the left
    if (!vec2.empty() && !cov1.empty()) {
        const int s2 = -parity_sign(p * l + q);
        const BigElement tc2 =
            BigElement::monomial(dim, cov2, {}, 1).transform_factors(dual_inv, alpha.forward());
        const BigElement tx1 =
            BigElement::monomial(dim, {}, vec1, 1).transform_factors(dual_inv, alpha.forward());
        for (int j = 0; j < static_cast<int>(vec2.size()); ++j) {
            BigElement ip = interior(Vec::basis(dim, vec2[static_cast<size_t>(j)]),
                                     BigElement::monomial(dim, cov1, {}, 1), alpha);
            if (ip.is_zero())
                continue;
            BigElement tv2 = BigElement::monomial(dim, {}, erase_at(vec2, j), 1)
                                 .transform_factors(dual_inv, alpha.forward());
            BigElement term = wedge(wedge(ip, tc2), wedge(tx1, tv2));
            int sign = s2 * parity_sign(j);
            out += Rational(sign) * term;
        }
    }
    return out;
}

} // namespace

BigElement big_bracket(const BigElement& a, const BigElement& b, const TwistMap& alpha) {
    if (a.dim() != b.dim() || a.dim() != alpha.dim())
        throw DimensionMismatch("big_bracket: dimensions differ");
    BigElement out(a.dim());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            BigElement m = bracket_monomial(a.dim(), ka.first, ka.second, kb.first, kb.second, alpha);
            out += (ca * cb) * m;
        }
    return out;
}

BigElement nr_consistency_residual(const BigElement& a, const BigElement& b,
                                   const TwistMap& alpha) {
    const Cochain pa = cochain_from_big(a);
    const Cochain pb = cochain_from_big(b);
    const long long q = pa.arity() - 1; // covector degree of a
    const long long l = pb.arity() - 1;
    BigElement lhs = big_bracket(a, b, alpha);
    BigElement rhs = big_from_cochain(nr_bracket(pa, pb, alpha));
    return lhs + Rational(parity_sign(q * l)) * rhs;
}

} // namespace hombracket
