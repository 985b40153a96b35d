#include "hombracket/big_element.hpp"

#include "hombracket/errors.hpp"

#include <sstream>

namespace hombracket {

namespace {

void check_increasing(const MultiIndex& t, int dim) {
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= dim)
            throw ShapeError("big element: basis index out of range");
        if (i > 0 && t[i] <= t[i - 1])
            throw ShapeError("big element: index set not strictly increasing");
    }
}

} // namespace

BigElement BigElement::scalar(int dim, const Rational& c) {
    BigElement e(dim);
    e.add_term({}, {}, c);
    return e;
}

BigElement BigElement::monomial(int dim, MultiIndex cov, MultiIndex vec, const Rational& c) {
    check_increasing(cov, dim);
    check_increasing(vec, dim);
    BigElement e(dim);
    e.add_term(cov, vec, c);
    return e;
}

BigElement BigElement::from_vector(const Vec& v) {
    BigElement e(v.size());
    for (int i = 0; i < v.size(); ++i)
        e.add_term({}, {i}, v[i]);
    return e;
}

BigElement BigElement::from_covector(const Vec& xi) {
    BigElement e(xi.size());
    for (int i = 0; i < xi.size(); ++i)
        e.add_term({i}, {}, xi[i]);
    return e;
}

void BigElement::add_term(const MultiIndex& cov, const MultiIndex& vec, const Rational& c) {
    if (c == 0)
        return;
    Key key{cov, vec};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigElement& BigElement::operator+=(const BigElement& o) {
    if (dim_ != o.dim_)
        throw DimensionMismatch("big element sum: dimensions differ");
    for (const auto& [key, c] : o.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

BigElement& BigElement::operator-=(const BigElement& o) {
    if (dim_ != o.dim_)
        throw DimensionMismatch("big element sum: dimensions differ");
    for (const auto& [key, c] : o.terms_)
        add_term(key.first, key.second, -c);
    return *this;
}

BigElement& BigElement::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_)
        c *= s;
    return *this;
}

BigElement operator-(BigElement e) {
    e *= Rational(-1);
    return e;
}

bool BigElement::is_homogeneous() const {
    int deg = 0;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        int d = static_cast<int>(key.first.size() + key.second.size()) - 2;
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return false;
        }
    }
    return true;
}

int BigElement::degree() const {
    if (terms_.empty())
        throw ShapeError("degree: zero element has no degree");
    if (!is_homogeneous())
        throw ShapeError("degree: element is inhomogeneous");
    const auto& key = terms_.begin()->first;
    return static_cast<int>(key.first.size() + key.second.size()) - 2;
}

std::map<int, BigElement> BigElement::homogeneous_components() const {
    std::map<int, BigElement> out;
    for (const auto& [key, c] : terms_) {
        int d = static_cast<int>(key.first.size() + key.second.size()) - 2;
        auto it = out.find(d);
        if (it == out.end())
            it = out.emplace(d, BigElement(dim_)).first;
        it->second.add_term(key.first, key.second, c);
    }
    return out;
}

bool BigElement::is_pure_covector() const {
    for (const auto& [key, c] : terms_)
        if (!key.second.empty())
            return false;
    return true;
}

bool BigElement::is_pure_vector() const {
    for (const auto& [key, c] : terms_)
        if (!key.first.empty())
            return false;
    return true;
}

namespace {

enum class MapShape { Identity, Diagonal, General };

MapShape classify(const Matrix& m) {
    bool diag = true, ident = true;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i != j && m(i, j) != 0)
                diag = false;
            if (i == j && m(i, j) != 1)
                ident = false;
        }
    if (!diag)
        return MapShape::General;
    return ident ? MapShape::Identity : MapShape::Diagonal;
}

} // namespace

BigElement BigElement::transform_factors(const Matrix& cov_map, const Matrix& vec_map) const {
    const MapShape cov_shape = classify(cov_map);
    const MapShape vec_shape = classify(vec_map);
    if (cov_shape == MapShape::Identity && vec_shape == MapShape::Identity)
        return *this;
    BigElement out(dim_);
    for (const auto& [key, c] : terms_) {
        const auto& [cov, vec] = key;
        // exterior powers act through minors: e_S -> sum_T det(M[T,S]) e_T;
        // diagonal maps keep the index set and contribute a plain product
        if (cov_shape != MapShape::General && vec_shape != MapShape::General) {
            Rational scale = c;
            for (int i : cov)
                scale *= cov_map(i, i);
            for (int i : vec)
                scale *= vec_map(i, i);
            out.add_term(cov, vec, scale);
            continue;
        }
        for (const MultiIndex& cov_to : increasing_tuples(dim_, static_cast<int>(cov.size()))) {
            Rational dc = minor_det(cov_map, cov_to, cov);
            if (dc == 0)
                continue;
            for (const MultiIndex& vec_to : increasing_tuples(dim_, static_cast<int>(vec.size()))) {
                Rational dv = minor_det(vec_map, vec_to, vec);
                if (dv == 0)
                    continue;
                out.add_term(cov_to, vec_to, c * dc * dv);
            }
        }
    }
    return out;
}

std::string BigElement::str() const {
    std::ostringstream os;
    if (terms_.empty())
        return "0";
    bool first = true;
    for (const auto& [key, c] : terms_) {
        os << (first ? "" : " + ") << c << "*(cov";
        for (int i : key.first)
            os << " " << i + 1;
        os << " | vec";
        for (int i : key.second)
            os << " " << i + 1;
        os << ")";
        first = false;
    }
    return os.str();
}

BigElement wedge(const BigElement& a, const BigElement& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("wedge: dimensions differ");
    BigElement out(a.dim());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // move b's covectors past a's vectors, then merge each kind
            auto cov = merge_with_sign(ka.first, kb.first);
            if (!cov)
                continue;
            auto vec = merge_with_sign(ka.second, kb.second);
            if (!vec)
                continue;
            int sign = cov->second * vec->second;
            if ((ka.second.size() * kb.first.size()) % 2 != 0)
                sign = -sign;
            out.add_term(cov->first, vec->first, Rational(sign) * ca * cb);
        }
    }
    return out;
}

BigElement ad_alpha(const BigElement& a, const TwistMap& alpha) {
    if (a.dim() != alpha.dim())
        throw DimensionMismatch("ad_alpha: dimensions differ");
    return a.transform_factors(alpha.dual_inverse(), alpha.forward());
}

BigElement interior(const Vec& x, const BigElement& xi, const TwistMap& alpha) {
    if (x.size() != xi.dim() || xi.dim() != alpha.dim())
        throw DimensionMismatch("interior: dimensions differ");
    if (!xi.is_pure_covector())
        throw NotPureCovector("interior: element has vector factors");
    const Vec ax = alpha.inverse().apply(x);
    const Matrix dual_inv = alpha.dual_inverse();
    const MapShape shape = classify(dual_inv);
    BigElement out(xi.dim());
    for (const auto& [key, c] : xi.terms()) {
        const MultiIndex& cov = key.first;
        // expand the determinant pairing along the contracted slot:
        // i_x(xi_0 ^ .. ^ xi_q) = sum_a (-1)^a <xi_a, a^-1 x> (a^-1)*(rest)
        for (int a = 0; a < static_cast<int>(cov.size()); ++a) {
            Rational pair = ax[cov[static_cast<size_t>(a)]];
            if (pair == 0)
                continue;
            Rational coeff = c * pair;
            if (a % 2 != 0)
                coeff = -coeff;
            MultiIndex rest = erase_at(cov, a);
            if (shape != MapShape::General) {
                for (int i : rest)
                    coeff *= dual_inv(i, i);
                out.add_term(rest, {}, coeff);
                continue;
            }
            for (const MultiIndex& to : increasing_tuples(xi.dim(), static_cast<int>(rest.size()))) {
                Rational d = minor_det(dual_inv, to, rest);
                if (d != 0)
                    out.add_term(to, {}, coeff * d);
            }
        }
    }
    return out;
}

Cochain cochain_from_big(const BigElement& a) {
    if (a.is_zero())
        return Cochain(a.dim(), 0);
    int arity = -1;
    for (const auto& [key, c] : a.terms()) {
        if (key.second.size() != 1)
            throw ShapeError("cochain_from_big: every term needs exactly one vector factor");
        int k = static_cast<int>(key.first.size());
        if (arity < 0)
            arity = k;
        else if (arity != k)
            throw ShapeError("cochain_from_big: element is not homogeneous");
    }
    Cochain out(a.dim(), arity);
    for (const auto& [key, c] : a.terms()) {
        Vec v = out.value(key.first);
        v[key.second[0]] += c;
        out.set(key.first, std::move(v));
    }
    return out;
}

BigElement big_from_cochain(const Cochain& c) {
    if (!c.target_is_domain())
        throw ShapeError("big_from_cochain: cochain must be V-valued");
    BigElement out(c.dim());
    for (const auto& [tuple, val] : c.terms())
        for (int i = 0; i < val.size(); ++i)
            out.add_term(tuple, {i}, val[i]);
    return out;
}

} // namespace hombracket
