#include "hombracket/nijenhuis.hpp"

#include "hombracket/cohomology.hpp"
#include "hombracket/errors.hpp"

namespace hombracket {

namespace {

Witness vec_witness(const std::vector<int>& args_0based, const Vec& residual) {
    Witness w;
    for (int a : args_0based)
        w.args.push_back(a + 1);
    for (int i = 0; i < residual.size(); ++i)
        w.residual.push_back(to_string(residual[i]));
    return w;
}

Witness big_witness(const BigElement& residual) {
    Witness w;
    const auto& [key, c] = *residual.terms().begin();
    std::string term = "{cov:[";
    for (size_t i = 0; i < key.first.size(); ++i)
        term += (i ? "," : "") + std::to_string(key.first[i] + 1);
    term += "],vec:[";
    for (size_t i = 0; i < key.second.size(); ++i)
        term += (i ? "," : "") + std::to_string(key.second[i] + 1);
    term += "],coeff:" + to_string(c) + "}";
    w.residual.push_back(term);
    return w;
}

// direct torsion residual [Nx,Ny] - N[N a^-1 x, y] - N[x, N a^-1 y] + N^2 [a^-1 x, a^-1 y]
Vec torsion_residual(const Matrix& n, const HomLieAlgebra& g, const Vec& x, const Vec& y) {
    const Matrix& ai = g.alpha().inverse();
    const Matrix n2 = n * n;
    Vec lhs = g.bracket(n.apply(x), n.apply(y));
    Vec rhs = n.apply(g.bracket(n.apply(ai.apply(x)), y)) +
              n.apply(g.bracket(x, n.apply(ai.apply(y)))) -
              n2.apply(g.bracket(ai.apply(x), ai.apply(y)));
    return lhs - rhs;
}

} // namespace

Cochain DeformationPolynomial::eval(const Rational& t) const {
    if (coeffs.empty())
        throw ShapeError("deformation polynomial has no coefficients");
    Cochain acc = coeffs[0];
    Rational power = 1;
    for (size_t i = 1; i < coeffs.size(); ++i) {
        power *= t;
        acc += power * coeffs[i];
    }
    return acc;
}

bool DeformationPolynomial::operator==(const DeformationPolynomial& o) const {
    size_t m = std::max(coeffs.size(), o.coeffs.size());
    for (size_t i = 0; i < m; ++i) {
        bool lz = i >= coeffs.size() || coeffs[i].is_zero();
        bool rz = i >= o.coeffs.size() || o.coeffs[i].is_zero();
        if (lz && rz)
            continue;
        if (lz != rz || !(coeffs[i] == o.coeffs[i]))
            return false;
    }
    return true;
}

Matrix compose_power(const Matrix& n, int i, const TwistMap& alpha) {
    // The twist is the unit of the twisted composition on maps commuting
    // with it, so it seeds the power tower: the recursion
    // pow_i = pow_{i-1} o N then collapses to N^i alpha^{-(i-1)} for all i.
    if (i == 0)
        return alpha.forward();
    Matrix acc = n;
    for (int s = 2; s <= i; ++s)
        acc = alpha.forward() * acc * alpha.inverse() * n * alpha.inverse();
    return acc;
}

Report is_hom_nijenhuis(const Matrix& n, const HomLieAlgebra& g) {
    if (n.rows() != g.dim() || n.cols() != g.dim())
        throw DimensionMismatch("is_hom_nijenhuis: matrix shape mismatch");
    const TwistMap& a = g.alpha();
    Matrix conj = a.forward() * n * a.inverse();
    if (!(conj == n))
        throw AdAlphaViolation("is_hom_nijenhuis: N does not commute with the twist");

    Report rep;
    rep.check = "hom_nijenhuis";

    // nested master-element route: {N, {N, mu}} - {N o N, mu} = 0
    const BigElement nb = big_from_cochain(Cochain::from_matrix(n));
    const BigElement mu = mu_as_big(g);
    const BigElement nn = big_from_cochain(Cochain::from_matrix(compose_power(n, 2, a)));
    BigElement big_resid = big_bracket(nb, big_bracket(nb, mu, a), a) - big_bracket(nn, mu, a);
    bool big_ok = big_resid.is_zero();
    rep.add("big_bracket_torsion", big_ok, big_ok ? Witness{} : big_witness(big_resid));

    bool direct_ok = true;
    Witness direct_w;
    for (const MultiIndex& pair : increasing_tuples(g.dim(), 2)) {
        Vec resid = torsion_residual(n, g, Vec::basis(g.dim(), pair[0]), Vec::basis(g.dim(), pair[1]));
        if (!resid.is_zero()) {
            direct_ok = false;
            direct_w = vec_witness({pair[0], pair[1]}, resid);
            break;
        }
    }
    rep.add("direct_torsion", direct_ok, direct_w);
    rep.add("routes_agree", big_ok == direct_ok, Witness{});
    return rep;
}

std::pair<Cochain, DeformationPolynomial> deformation_from_n(const Matrix& n,
                                                             const HomLieAlgebra& g) {
    Report rep = is_hom_nijenhuis(n, g);
    if (!rep.passed())
        throw NotNijenhuis("deformation_from_n: operator fails its check:\n" + rep.to_text());

    const TwistMap& a = g.alpha();
    const BigElement nb = big_from_cochain(Cochain::from_matrix(n));
    const BigElement nmu = big_bracket(nb, mu_as_big(g), a);

    // w(x, y) = -{{{N, mu}, a^-1 x}, y}
    Cochain omega(g.dim(), 2);
    for (const MultiIndex& pair : increasing_tuples(g.dim(), 2)) {
        BigElement inner = big_bracket(nmu, BigElement::from_vector(a.inverse().column(pair[0])), a);
        BigElement outer = -big_bracket(inner, BigElement::basis_vector(g.dim(), pair[1]), a);
        Vec v(g.dim());
        for (const auto& [key, c] : outer.terms()) {
            if (!key.first.empty() || key.second.size() != 1)
                throw Error("deformation_from_n: nested bracket is not a vector");
            v[key.second[0]] = c;
        }
        if (!v.is_zero())
            omega.set(pair, std::move(v));
    }

    Cochain via_d = coboundary(Cochain::from_matrix(n), g);
    if (!(via_d == omega))
        throw Error("deformation_from_n: nested bracket route differs from the coboundary");

    DeformationPolynomial poly;
    poly.coeffs = {g.mu(), omega};
    return {std::move(omega), std::move(poly)};
}

Report check_deformation(const Cochain& omega, const HomLieAlgebra& g) {
    if (omega.dim() != g.dim() || omega.arity() != 2 || !omega.target_is_domain())
        throw ShapeError("check_deformation: omega must be an arity-2 cochain on V");
    const TwistMap& a = g.alpha();
    Report rep;
    rep.check = "deformation";

    Cochain inv_resid = ad_alpha(omega, a) - omega;
    rep.add("ad_alpha_omega", inv_resid.is_zero(),
            inv_resid.is_zero() ? Witness{}
                                : vec_witness({inv_resid.terms().begin()->first[0],
                                               inv_resid.terms().begin()->first[1]},
                                              inv_resid.terms().begin()->second));

    auto cyclic_check = [&](auto&& term, const char* name) {
        bool ok = true;
        Witness w;
        for (const MultiIndex& t : increasing_tuples(g.dim(), 3)) {
            Vec x = Vec::basis(g.dim(), t[0]), y = Vec::basis(g.dim(), t[1]),
                z = Vec::basis(g.dim(), t[2]);
            Vec resid = term(x, y, z) + term(y, z, x) + term(z, x, y);
            if (!resid.is_zero()) {
                ok = false;
                w = vec_witness({t[0], t[1], t[2]}, resid);
                break;
            }
        }
        rep.add(name, ok, w);
        return ok;
    };

    const Matrix& af = a.forward();
    bool mixed_ok = cyclic_check(
        [&](const Vec& x, const Vec& y, const Vec& z) {
            return g.bracket(omega.eval({x, y}), af.apply(z)) +
                   omega.eval({g.bracket(x, y), af.apply(z)});
        },
        "mixed_cocycle");
    bool square_ok = cyclic_check(
        [&](const Vec& x, const Vec& y, const Vec& z) {
            return omega.eval({omega.eval({x, y}), af.apply(z)});
        },
        "omega_hom_jacobi");

    // bracket-machinery cross-checks: (d w)(a., a., a.) = 0 and
    // [w, w](a., a., a.) = 0 say the same thing
    Cochain dw = coboundary(omega, g);
    Cochain ww = nr_bracket(omega, omega, a);
    bool dw_ok = true, ww_ok = true;
    for (const MultiIndex& t : increasing_tuples(g.dim(), 3)) {
        std::vector<Vec> twisted = {af.column(t[0]), af.column(t[1]), af.column(t[2])};
        if (!dw.eval(twisted).is_zero())
            dw_ok = false;
        if (!ww.eval(twisted).is_zero())
            ww_ok = false;
    }
    rep.add("nr_route_mixed", dw_ok == mixed_ok, Witness{});
    rep.add("nr_route_square", ww_ok == square_ok, Witness{});
    return rep;
}

Report check_trivial_deformation(const Matrix& n, const Cochain& omega, const HomLieAlgebra& g) {
    const int dim = g.dim();
    if (n.rows() != dim || n.cols() != dim || omega.dim() != dim || omega.arity() != 2)
        throw DimensionMismatch("check_trivial_deformation: shape mismatch");
    const Matrix& af = g.alpha().forward();
    const Matrix& ai = g.alpha().inverse();

    Report rep;
    rep.check = "trivial_deformation";

    // bilinear helper producing the cochain (x, y) -> mu(Ax, By) + mu(Bx, Ay)
    auto polarized = [&](const Cochain& f, const Matrix& ma, const Matrix& mb) {
        Cochain out(dim, 2);
        for (const MultiIndex& pair : increasing_tuples(dim, 2)) {
            Vec x = Vec::basis(dim, pair[0]), y = Vec::basis(dim, pair[1]);
            Vec v = f.eval({ma.apply(x), mb.apply(y)}) + f.eval({mb.apply(x), ma.apply(y)});
            if (!v.is_zero())
                out.set(pair, std::move(v));
        }
        return out;
    };
    auto conjugated = [&](const Cochain& f, const Matrix& m) {
        return f.pre_twist(m);
    };

    // (alpha + tN)[x,y]_t, coefficientwise in t
    DeformationPolynomial lhs;
    lhs.coeffs = {g.mu().post_compose(af), g.mu().post_compose(n) + omega.post_compose(af),
                  omega.post_compose(n)};
    // [(alpha + tN)x, (alpha + tN)y]
    Cochain t2 = conjugated(g.mu(), n);
    DeformationPolynomial rhs;
    rhs.coeffs = {conjugated(g.mu(), af), polarized(g.mu(), af, n), t2};

    for (int k = 0; k <= 2; ++k) {
        Cochain resid = lhs.coeffs[static_cast<size_t>(k)] - rhs.coeffs[static_cast<size_t>(k)];
        bool ok = resid.is_zero();
        Witness w;
        if (!ok) {
            const auto& [tuple, val] = *resid.terms().begin();
            w = vec_witness({tuple[0], tuple[1]}, val);
        }
        rep.add("t" + std::to_string(k) + "_coefficient", ok, w);
    }

    // displayed consequences of the identity
    bool omega_ok = true;
    Witness omega_w;
    for (const MultiIndex& pair : increasing_tuples(dim, 2)) {
        Vec x = Vec::basis(dim, pair[0]), y = Vec::basis(dim, pair[1]);
        Vec expect = g.bracket(x, n.apply(ai.apply(y))) + g.bracket(n.apply(ai.apply(x)), y) -
                     n.apply(g.bracket(ai.apply(x), ai.apply(y)));
        Vec resid = omega.eval({x, y}) - expect;
        if (!resid.is_zero()) {
            omega_ok = false;
            omega_w = vec_witness({pair[0], pair[1]}, resid);
            break;
        }
    }
    rep.add("displayed_omega_formula", omega_ok, omega_w);

    bool nsq_ok = true;
    Witness nsq_w;
    for (const MultiIndex& pair : increasing_tuples(dim, 2)) {
        Vec x = Vec::basis(dim, pair[0]), y = Vec::basis(dim, pair[1]);
        Vec resid = n.apply(omega.eval({x, y})) - g.bracket(n.apply(x), n.apply(y));
        if (!resid.is_zero()) {
            nsq_ok = false;
            nsq_w = vec_witness({pair[0], pair[1]}, resid);
            break;
        }
    }
    rep.add("displayed_n_omega_formula", nsq_ok, nsq_w);
    return rep;
}

std::pair<Matrix, Report> poly_of_nijenhuis(const std::vector<Rational>& coeffs, const Matrix& n,
                                            const HomLieAlgebra& g) {
    Report in_rep = is_hom_nijenhuis(n, g);
    if (!in_rep.passed())
        throw NotNijenhuis("poly_of_nijenhuis: operator fails its check:\n" + in_rep.to_text());
    const TwistMap& a = g.alpha();

    Matrix p = Matrix::zero(g.dim(), g.dim());
    bool power_id_ok = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Matrix pw = compose_power(n, static_cast<int>(i), a);
        // for alpha-commuting N the twisted power collapses to N^i a^{-(i-1)}
        Matrix plain = matrix_power(n, static_cast<int>(i)) * a.power(1 - static_cast<int>(i));
        if (!(pw == plain))
            power_id_ok = false;
        p += coeffs[i] * pw;
    }
    Report rep = is_hom_nijenhuis(p, g);
    rep.check = "polynomial_nijenhuis";
    rep.add("compose_power_identity", power_id_ok, Witness{});
    return {std::move(p), std::move(rep)};
}

Report powers_lemma_check(const Matrix& n, const HomLieAlgebra& g, int max_power) {
    Report in_rep = is_hom_nijenhuis(n, g);
    if (!in_rep.passed())
        throw NotNijenhuis("powers_lemma_check: operator fails its check:\n" + in_rep.to_text());

    Report rep;
    rep.check = "powers_lemma";
    bool ok = true;
    Witness w;
    for (int i = 0; i <= max_power && ok; ++i)
        for (int j = 0; j <= max_power && ok; ++j) {
            Matrix ni = matrix_power(n, i);
            Matrix nj = matrix_power(n, j);
            Matrix nij = matrix_power(n, i + j);
            Matrix a_mi = g.alpha().power(-i);
            Matrix a_mj = g.alpha().power(-j);
            for (const MultiIndex& pair : increasing_tuples(g.dim(), 2)) {
                Vec x = Vec::basis(g.dim(), pair[0]), y = Vec::basis(g.dim(), pair[1]);
                Vec resid = g.bracket(ni.apply(x), nj.apply(y)) -
                            ni.apply(g.bracket(x, nj.apply(a_mi.apply(y)))) -
                            nj.apply(g.bracket(ni.apply(a_mj.apply(x)), y)) +
                            nij.apply(g.bracket(a_mj.apply(x), a_mi.apply(y)));
                if (!resid.is_zero()) {
                    ok = false;
                    w = vec_witness({pair[0], pair[1]}, resid);
                    w.note = "powers i=" + std::to_string(i) + " j=" + std::to_string(j);
                    break;
                }
            }
        }
    rep.add("mixed_powers_identity", ok, w);
    return rep;
}

namespace {

Cochain semidirect_mu(const HomLieAlgebra& g, const Representation& r, bool twist_rho) {
    const int n = g.dim();
    const int w = r.wdim();
    Cochain mu(n + w, 2);
    auto rho_at = [&](int i) {
        return twist_rho ? r.rho_of(g.alpha().forward().column(i)) : r.rho()[static_cast<size_t>(i)];
    };
    for (const MultiIndex& pair : increasing_tuples(n + w, 2)) {
        Vec v(n + w);
        const int i = pair[0], j = pair[1];
        if (i < n && j < n) {
            Vec b = g.bracket_basis(i, j);
            for (int s = 0; s < n; ++s)
                v[s] = b[s];
        } else if (i < n && j >= n) {
            Vec b = rho_at(i).column(j - n);
            for (int s = 0; s < w; ++s)
                v[n + s] = b[s];
        } // two W legs bracket to zero
        if (!v.is_zero())
            mu.set(pair, std::move(v));
    }
    return mu;
}

} // namespace

HomLieAlgebra semidirect_product(const HomLieAlgebra& g, const Representation& r) {
    const int n = g.dim();
    const int w = r.wdim();
    Matrix twist(n + w, n + w);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            twist(i, j) = g.alpha().forward()(i, j);
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
            twist(n + i, n + j) = r.beta().forward()(i, j);
    TwistMap big_twist(std::move(twist));

    try {
        return HomLieAlgebra::certify(big_twist, semidirect_mu(g, r, false));
    } catch (const NotHomLie&) {
        // fall through to the twisted action variant
    }
    try {
        return HomLieAlgebra::certify(big_twist, semidirect_mu(g, r, true));
    } catch (const NotHomLie&) {
        throw ConstructionFailure("semidirect_product: no bracket variant certifies");
    }
}

Matrix o_operator_block(const Matrix& t, const HomLieAlgebra& g, const Representation& r) {
    const int n = g.dim();
    const int w = r.wdim();
    if (t.rows() != n || t.cols() != w)
        throw DimensionMismatch("o_operator_block: T must map W into V");
    Matrix block(n + w, n + w);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < w; ++j)
            block(i, n + j) = t(i, j);
    return block;
}

Report is_hom_o_operator(const Matrix& t, const HomLieAlgebra& g, const Representation& r) {
    const int n = g.dim();
    const int w = r.wdim();
    if (t.rows() != n || t.cols() != w)
        throw DimensionMismatch("is_hom_o_operator: T must map W into V");

    Report rep;
    rep.check = "hom_o_operator";

    Matrix intertwine = t * r.beta().forward() - g.alpha().forward() * t;
    bool twist_ok = intertwine.is_zero();
    Witness tw;
    if (!twist_ok) {
        for (int j = 0; j < w; ++j)
            if (!intertwine.column(j).is_zero()) {
                tw = vec_witness({j}, intertwine.column(j));
                break;
            }
    }
    rep.add("intertwines_twists", twist_ok, tw);

    const Matrix bi = r.beta().inverse();
    bool transport_ok = true;
    Witness trw;
    for (const MultiIndex& pair : increasing_tuples(w, 2)) {
        Vec u = Vec::basis(w, pair[0]), v = Vec::basis(w, pair[1]);
        Vec lhs = g.bracket(t.apply(u), t.apply(v));
        Vec rhs = t.apply(r.rho_of(t.apply(bi.apply(u))).apply(v) -
                          r.rho_of(t.apply(bi.apply(v))).apply(u));
        Vec resid = lhs - rhs;
        if (!resid.is_zero()) {
            transport_ok = false;
            trw = vec_witness({pair[0], pair[1]}, resid);
            break;
        }
    }
    rep.add("bracket_transport", transport_ok, trw);
    return rep;
}

RightSymmetricAlgebra right_symmetric_from_o(const Matrix& t, const HomLieAlgebra& g,
                                             const Representation& r) {
    Report rep = is_hom_o_operator(t, g, r);
    if (!rep.passed())
        throw NotOOperator("right_symmetric_from_o: T fails its check:\n" + rep.to_text());
    const int w = r.wdim();
    const Matrix bi = r.beta().inverse();
    std::vector<std::vector<Vec>> table(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) {
        table[static_cast<size_t>(i)].reserve(static_cast<size_t>(w));
        for (int j = 0; j < w; ++j) {
            Vec u = Vec::basis(w, i), v = Vec::basis(w, j);
            table[static_cast<size_t>(i)].push_back(r.rho_of(t.apply(bi.apply(v))).apply(u));
        }
    }
    RightSymmetricAlgebra rs{r.beta(), std::move(table)};
    Report check = check_right_symmetric(rs);
    if (!check.passed())
        throw Error("right_symmetric_from_o: induced product fails its check:\n" + check.to_text());
    return rs;
}

} // namespace hombracket
