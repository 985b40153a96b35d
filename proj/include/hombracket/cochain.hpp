#pragma once

#include "hombracket/matrix.hpp"
#include "hombracket/multiindex.hpp"
#include "hombracket/report.hpp"

#include <map>

namespace hombracket {

/// An alternating multilinear map from arity-many copies of V to a target
/// space (V itself unless target_dim says otherwise). Values are stored on
/// strictly increasing basis tuples; evaluation on anything else extends by
/// multilinearity and full antisymmetry. An arity-0 cochain is a plain
/// vector of the target space.
///
/// Degree bookkeeping: an arity-(k+1) cochain has degree k; arity 0 means
/// degree -1.
class Cochain {
public:
    Cochain() = default;
    Cochain(int dim, int arity, int target_dim = -1);

    static Cochain zero(int dim, int arity, int target_dim = -1) { return Cochain(dim, arity, target_dim); }
    /// Arity-1 cochain from a matrix (a plain linear map).
    static Cochain from_matrix(const Matrix& m);
    /// Arity-0 cochain from a vector.
    static Cochain from_vector(int dim, const Vec& v);

    int dim() const { return dim_; }
    int target_dim() const { return target_dim_; }
    int arity() const { return arity_; }
    int degree() const { return arity_ - 1; }
    bool target_is_domain() const { return target_dim_ == dim_; }

    /// Sets the value on a strictly increasing tuple (zero values are dropped).
    void set(const MultiIndex& args, Vec value);
    /// Value on a strictly increasing tuple; zero when absent.
    Vec value(const MultiIndex& args) const;
    /// Value on an arbitrary basis-index word (sign-adjusted, zero on repeats).
    Vec eval_basis(const std::vector<int>& word) const;
    /// Full multilinear alternating evaluation on coordinate vectors.
    Vec eval(const std::vector<Vec>& args) const;

    /// The matrix of an arity-1 cochain.
    Matrix as_matrix() const;
    /// The vector of an arity-0 cochain.
    Vec as_vector() const;

    /// M applied after this map (target side).
    Cochain post_compose(const Matrix& m) const;
    /// This map with every argument slot pre-twisted: f(m x1, .., m xk).
    Cochain pre_twist(const Matrix& m) const;

    bool is_zero() const { return values_.empty(); }
    bool operator==(const Cochain& o) const;

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain& operator*=(const Rational& s);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, Cochain c) { return c *= s; }
    friend Cochain operator-(Cochain c);

    const std::map<MultiIndex, Vec>& terms() const { return values_; }

private:
    int dim_ = 0;
    int target_dim_ = 0;
    int arity_ = 0;
    std::map<MultiIndex, Vec> values_;
};

/// The twisted insertion product. P gains Q in its first argument slot,
/// summed over unshuffles, every argument pre-twisted by the inverse twist
/// and the result pushed forward by the twist. The result has arity
/// arity(P) + arity(Q) - 1; insertions that would need a negative arity give
/// the zero cochain.
Cochain compose(const Cochain& p, const Cochain& q, const TwistMap& alpha);

/// Graded commutator of compose: [P,Q] = P o Q - (-1)^{deg P deg Q} Q o P.
Cochain nr_bracket(const Cochain& p, const Cochain& q, const TwistMap& alpha);

/// Conjugation by the twist: (Ad P)(x1,..,xk) = a P(a^-1 x1, .., a^-1 xk).
Cochain ad_alpha(const Cochain& p, const TwistMap& alpha);

/// Checks that (mu, alpha) is a hom-Lie structure: Ad-invariance of mu and
/// vanishing of [mu, mu]. Witnesses carry the least failing basis tuple.
Report is_hom_lie(const Cochain& mu, const TwistMap& alpha);

} // namespace hombracket
