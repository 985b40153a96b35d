#pragma once

#include "hombracket/cochain.hpp"
#include "hombracket/matrix.hpp"
#include "hombracket/multiindex.hpp"

#include <map>

namespace hombracket {

/// An element of the exterior algebra over V + V*, held in canonical basis
/// form: each term is (covector index set, vector index set) -> coefficient,
/// with all covector generators written first. Every generator is odd; the
/// wedge normalizes words to this form with the Koszul sign. A term with
/// q+1 covectors and p+1 vectors has degree p+q, so scalars sit in degree -2.
/// Elements may be inhomogeneous.
class BigElement {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;

    BigElement() = default;
    explicit BigElement(int dim) : dim_(dim) {}

    static BigElement scalar(int dim, const Rational& c);
    /// Single canonical term; both index sets must be strictly increasing.
    static BigElement monomial(int dim, MultiIndex cov, MultiIndex vec, const Rational& c);
    static BigElement basis_vector(int dim, int i) { return monomial(dim, {}, {i}, 1); }
    static BigElement basis_covector(int dim, int i) { return monomial(dim, {i}, {}, 1); }
    /// Degree -1 element with the coordinates of v.
    static BigElement from_vector(const Vec& v);
    /// Pure covector of degree -1 with the coordinates of xi.
    static BigElement from_covector(const Vec& xi);

    int dim() const { return dim_; }
    const std::map<Key, Rational>& terms() const { return terms_; }

    /// Accumulates a canonical term; zero coefficients are never stored.
    void add_term(const MultiIndex& cov, const MultiIndex& vec, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const BigElement& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    BigElement& operator+=(const BigElement& o);
    BigElement& operator-=(const BigElement& o);
    BigElement& operator*=(const Rational& s);
    friend BigElement operator+(BigElement a, const BigElement& b) { return a += b; }
    friend BigElement operator-(BigElement a, const BigElement& b) { return a -= b; }
    friend BigElement operator*(const Rational& s, BigElement e) { return e *= s; }
    friend BigElement operator-(BigElement e);

    bool is_homogeneous() const;
    /// Degree of a homogeneous nonzero element.
    int degree() const;
    /// Splits into homogeneous pieces, keyed by degree.
    std::map<int, BigElement> homogeneous_components() const;

    bool is_pure_covector() const;
    bool is_pure_vector() const;

    /// Applies cov_map to every covector factor and vec_map to every vector
    /// factor (coordinate matrices, expanded through exterior-power minors).
    BigElement transform_factors(const Matrix& cov_map, const Matrix& vec_map) const;

    std::string str() const;

private:
    int dim_ = 0;
    std::map<Key, Rational> terms_;
};

/// Graded product: concatenate the two words and normalize to canonical
/// order with the Koszul sign; repeated generators kill the term.
BigElement wedge(const BigElement& a, const BigElement& b);

/// The twist action: inverse-dual on covector factors, forward on vector
/// factors.
BigElement ad_alpha(const BigElement& a, const TwistMap& alpha);

/// Twisted interior product of a vector against a pure covector element:
/// contract x through the inverse twist into each covector slot. Throws
/// NotPureCovector when the element has vector factors.
BigElement interior(const Vec& x, const BigElement& xi, const TwistMap& alpha);

/// Reads a homogeneous element with exactly one vector factor per term as an
/// alternating map: (Xi (x) x)(args) = Xi(args) x with the determinant
/// pairing. Throws ShapeError otherwise. The zero element maps to the zero
/// arity-0 cochain.
Cochain cochain_from_big(const BigElement& a);

/// Inverse of cochain_from_big; round-trips exactly.
BigElement big_from_cochain(const Cochain& c);

} // namespace hombracket
