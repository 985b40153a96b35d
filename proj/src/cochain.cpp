#include "hombracket/cochain.hpp"

#include "hombracket/errors.hpp"

#include <algorithm>

namespace hombracket {

Cochain::Cochain(int dim, int arity, int target_dim)
    : dim_(dim), target_dim_(target_dim < 0 ? dim : target_dim), arity_(arity) {
    if (dim < 0 || arity < 0)
        throw DimensionMismatch("cochain: negative dimension or arity");
}

Cochain Cochain::from_matrix(const Matrix& m) {
    Cochain c(m.cols(), 1, m.rows());
    for (int j = 0; j < m.cols(); ++j)
        c.set({j}, m.column(j));
    return c;
}

Cochain Cochain::from_vector(int dim, const Vec& v) {
    Cochain c(dim, 0, v.size());
    c.set({}, v);
    return c;
}

void Cochain::set(const MultiIndex& args, Vec value) {
    if (static_cast<int>(args.size()) != arity_)
        throw ShapeError("cochain: tuple length differs from arity");
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] < 0 || args[i] >= dim_)
            throw ShapeError("cochain: basis index out of range");
        if (i > 0 && args[i] <= args[i - 1])
            throw ShapeError("cochain: tuple not strictly increasing");
    }
    if (value.size() != target_dim_)
        throw DimensionMismatch("cochain: value size differs from target dimension");
    if (value.is_zero())
        values_.erase(args);
    else
        values_[args] = std::move(value);
}

Vec Cochain::value(const MultiIndex& args) const {
    auto it = values_.find(args);
    return it == values_.end() ? Vec(target_dim_) : it->second;
}

Vec Cochain::eval_basis(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != arity_)
        throw ShapeError("cochain: wrong number of arguments");
    auto sorted = sort_with_sign(word);
    if (!sorted)
        return Vec(target_dim_);
    Vec v = value(sorted->first);
    if (sorted->second < 0)
        v = -v;
    return v;
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw ShapeError("cochain: wrong number of arguments");
    for (const Vec& a : args)
        if (a.size() != dim_)
            throw DimensionMismatch("cochain: argument has wrong dimension");
    Vec out(target_dim_);
    // P(v1,..,vk) = sum over stored tuples S of det[(v_b)_{S_a}] P(e_S)
    for (const auto& [tuple, val] : values_) {
        Rational det;
        if (arity_ == 0) {
            det = 1;
        } else {
            Matrix coords(arity_, arity_);
            for (int a = 0; a < arity_; ++a)
                for (int b = 0; b < arity_; ++b)
                    coords(a, b) = args[static_cast<size_t>(b)][tuple[static_cast<size_t>(a)]];
            std::vector<int> all(static_cast<size_t>(arity_));
            for (int i = 0; i < arity_; ++i)
                all[static_cast<size_t>(i)] = i;
            det = minor_det(coords, all, all);
        }
        if (det != 0)
            out += det * val;
    }
    return out;
}

Matrix Cochain::as_matrix() const {
    if (arity_ != 1)
        throw ShapeError("as_matrix: cochain arity is not 1");
    Matrix m(target_dim_, dim_);
    for (const auto& [tuple, val] : values_)
        for (int i = 0; i < target_dim_; ++i)
            m(i, tuple[0]) = val[i];
    return m;
}

Vec Cochain::as_vector() const {
    if (arity_ != 0)
        throw ShapeError("as_vector: cochain arity is not 0");
    return value({});
}

Cochain Cochain::post_compose(const Matrix& m) const {
    if (m.cols() != target_dim_)
        throw DimensionMismatch("post_compose: shape mismatch");
    Cochain out(dim_, arity_, m.rows());
    for (const auto& [tuple, val] : values_)
        out.set(tuple, m.apply(val));
    return out;
}

Cochain Cochain::pre_twist(const Matrix& m) const {
    if (m.rows() != dim_ || m.cols() != dim_)
        throw DimensionMismatch("pre_twist: matrix shape mismatch");
    Cochain out(dim_, arity_, target_dim_);
    for (const MultiIndex& t : increasing_tuples(dim_, arity_)) {
        std::vector<Vec> args;
        args.reserve(t.size());
        for (int idx : t)
            args.push_back(m.column(idx));
        Vec v = eval(args);
        if (!v.is_zero())
            out.set(t, std::move(v));
    }
    return out;
}

bool Cochain::operator==(const Cochain& o) const {
    if (dim_ != o.dim_)
        return false;
    // zero maps of clamped arity (from degenerate insertions) compare equal
    if (values_.empty() && o.values_.empty())
        return true;
    return target_dim_ == o.target_dim_ && arity_ == o.arity_ && values_ == o.values_;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (dim_ != o.dim_)
        throw DimensionMismatch("cochain sum: dimensions differ");
    if (o.values_.empty())
        return *this;
    if (values_.empty()) {
        *this = o;
        return *this;
    }
    if (target_dim_ != o.target_dim_ || arity_ != o.arity_)
        throw DimensionMismatch("cochain sum: shape mismatch");
    for (const auto& [tuple, val] : o.values_) {
        auto it = values_.find(tuple);
        if (it == values_.end()) {
            values_[tuple] = val;
        } else {
            it->second += val;
            if (it->second.is_zero())
                values_.erase(it);
        }
    }
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    return *this += Rational(-1) * o;
}

Cochain& Cochain::operator*=(const Rational& s) {
    if (s == 0) {
        values_.clear();
        return *this;
    }
    for (auto& [tuple, val] : values_)
        val *= s;
    return *this;
}

Cochain operator-(Cochain c) {
    c *= Rational(-1);
    return c;
}

Cochain compose(const Cochain& p, const Cochain& q, const TwistMap& alpha) {
    if (p.dim() != q.dim() || p.dim() != alpha.dim())
        throw DimensionMismatch("compose: dimensions differ");
    if (!p.target_is_domain() || !q.target_is_domain())
        throw DimensionMismatch("compose: cochains must be V-valued");
    const int n = p.dim();
    const int m = p.arity() + q.arity() - 1;
    if (p.arity() == 0 || m < 0)
        return Cochain(n, std::max(m, 0));

    const Matrix& ainv = alpha.inverse();
    std::vector<Vec> inv_cols;
    inv_cols.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        inv_cols.push_back(ainv.column(j));

    Cochain out(n, m);
    const auto shuffles = unshuffles(q.arity(), p.arity() - 1);
    for (const MultiIndex& t : increasing_tuples(n, m)) {
        Vec acc(n);
        for (const Unshuffle& u : shuffles) {
            std::vector<Vec> q_args;
            q_args.reserve(static_cast<size_t>(q.arity()));
            for (int b = 0; b < q.arity(); ++b)
                q_args.push_back(inv_cols[static_cast<size_t>(t[static_cast<size_t>(u.perm[static_cast<size_t>(b)])])]);
            Vec inner = ainv.apply(q.eval(q_args));
            std::vector<Vec> p_args;
            p_args.reserve(static_cast<size_t>(p.arity()));
            p_args.push_back(std::move(inner));
            for (int b = q.arity(); b < m; ++b)
                p_args.push_back(inv_cols[static_cast<size_t>(t[static_cast<size_t>(u.perm[static_cast<size_t>(b)])])]);
            Vec term = p.eval(p_args);
            if (u.sign < 0)
                term = -term;
            acc += term;
        }
        if (!acc.is_zero())
            out.set(t, alpha.forward().apply(acc));
    }
    return out;
}

Cochain nr_bracket(const Cochain& p, const Cochain& q, const TwistMap& alpha) {
    Cochain pq = compose(p, q, alpha);
    Cochain qp = compose(q, p, alpha);
    const int sign = ((p.degree() * q.degree()) % 2 == 0) ? 1 : -1;
    return sign > 0 ? pq - qp : pq + qp;
}

Cochain ad_alpha(const Cochain& p, const TwistMap& alpha) {
    if (p.dim() != alpha.dim())
        throw DimensionMismatch("ad_alpha: dimensions differ");
    if (!p.target_is_domain())
        throw DimensionMismatch("ad_alpha: cochain must be V-valued");
    return p.pre_twist(alpha.inverse()).post_compose(alpha.forward());
}

namespace {

Witness vec_witness(const MultiIndex& args, const Vec& residual) {
    Witness w;
    for (int a : args)
        w.args.push_back(a + 1);
    for (int i = 0; i < residual.size(); ++i)
        w.residual.push_back(to_string(residual[i]));
    return w;
}

} // namespace

Report is_hom_lie(const Cochain& mu, const TwistMap& alpha) {
    if (mu.dim() != alpha.dim())
        throw DimensionMismatch("is_hom_lie: dimensions differ");
    if (mu.arity() != 2 || !mu.target_is_domain())
        throw ShapeError("is_hom_lie: mu must be an arity-2 V-valued cochain");
    Report rep;
    rep.check = "hom_lie";

    Cochain ad_mu = ad_alpha(mu, alpha);
    bool mult_ok = true;
    Witness mult_w;
    for (const MultiIndex& t : increasing_tuples(mu.dim(), 2)) {
        Vec resid = ad_mu.value(t) - mu.value(t);
        if (!resid.is_zero()) {
            mult_ok = false;
            mult_w = vec_witness(t, resid);
            break;
        }
    }
    rep.add("multiplicative", mult_ok, mult_w);

    Cochain jac = nr_bracket(mu, mu, alpha);
    bool jac_ok = true;
    Witness jac_w;
    for (const MultiIndex& t : increasing_tuples(mu.dim(), 3)) {
        Vec resid = jac.value(t);
        if (!resid.is_zero()) {
            jac_ok = false;
            jac_w = vec_witness(t, resid);
            break;
        }
    }
    rep.add("hom_jacobi", jac_ok, jac_w);
    return rep;
}

} // namespace hombracket
