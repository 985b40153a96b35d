#include "hombracket/hom_lie.hpp"

#include "hombracket/errors.hpp"

namespace hombracket {

HomLieAlgebra HomLieAlgebra::certify(TwistMap alpha, Cochain mu) {
    Report rep = is_hom_lie(mu, alpha);
    if (!rep.passed())
        throw NotHomLie("hom-Lie certification failed:\n" + rep.to_text());
    return HomLieAlgebra(std::move(alpha), std::move(mu));
}

namespace {

Witness matrix_witness(std::vector<int> args_0based, const Matrix& residual) {
    Witness w;
    for (int a : args_0based)
        w.args.push_back(a + 1);
    for (int i = 0; i < residual.rows(); ++i)
        for (int j = 0; j < residual.cols(); ++j)
            w.residual.push_back(to_string(residual(i, j)));
    w.note = "residual is a row-major matrix on W";
    return w;
}

} // namespace

Report check_representation(const HomLieAlgebra& g, const std::vector<Matrix>& rho,
                            const TwistMap& beta) {
    const int n = g.dim();
    if (static_cast<int>(rho.size()) != n)
        throw DimensionMismatch("check_representation: need one endomorphism per basis vector");
    const int w = beta.dim();
    for (const Matrix& m : rho)
        if (m.rows() != w || m.cols() != w)
            throw DimensionMismatch("check_representation: endomorphism shape mismatch");

    auto rho_of = [&](const Vec& x) {
        Matrix acc(w, w);
        for (int i = 0; i < n; ++i)
            if (x[i] != 0)
                acc += x[i] * rho[static_cast<size_t>(i)];
        return acc;
    };

    Report rep;
    rep.check = "representation";

    bool twist_ok = true;
    Witness twist_w;
    for (int i = 0; i < n && twist_ok; ++i) {
        Matrix lhs = rho_of(g.alpha().forward().column(i)) * beta.forward();
        Matrix rhs = beta.forward() * rho[static_cast<size_t>(i)];
        if (!(lhs == rhs)) {
            twist_ok = false;
            twist_w = matrix_witness({i}, lhs - rhs);
        }
    }
    rep.add("twist_intertwines", twist_ok, twist_w);

    bool act_ok = true;
    Witness act_w;
    for (const MultiIndex& t : increasing_tuples(n, 2)) {
        Matrix lhs = rho_of(g.bracket_basis(t[0], t[1])) * beta.forward();
        Matrix rhs = rho_of(g.alpha().forward().column(t[0])) * rho[static_cast<size_t>(t[1])] -
                     rho_of(g.alpha().forward().column(t[1])) * rho[static_cast<size_t>(t[0])];
        if (!(lhs == rhs)) {
            act_ok = false;
            act_w = matrix_witness({t[0], t[1]}, lhs - rhs);
            break;
        }
    }
    rep.add("bracket_action", act_ok, act_w);
    return rep;
}

Representation Representation::certify(const HomLieAlgebra& g, std::vector<Matrix> rho,
                                       TwistMap beta) {
    Report rep = check_representation(g, rho, beta);
    if (!rep.passed())
        throw NotRepresentation("representation certification failed:\n" + rep.to_text());
    return Representation(std::move(rho), std::move(beta));
}

Representation Representation::adjoint(const HomLieAlgebra& g) {
    std::vector<Matrix> rho;
    rho.reserve(static_cast<size_t>(g.dim()));
    for (int i = 0; i < g.dim(); ++i) {
        Matrix m(g.dim(), g.dim());
        for (int j = 0; j < g.dim(); ++j) {
            Vec v = g.bracket_basis(i, j);
            for (int r = 0; r < g.dim(); ++r)
                m(r, j) = v[r];
        }
        rho.push_back(std::move(m));
    }
    return certify(g, std::move(rho), g.alpha());
}

Representation Representation::adjoint_plus_trivial(const HomLieAlgebra& g) {
    const int n = g.dim();
    Representation ad = adjoint(g);
    std::vector<Matrix> rho;
    rho.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Matrix m(n + 1, n + 1);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m(r, c) = ad.rho()[static_cast<size_t>(i)](r, c);
        rho.push_back(std::move(m));
    }
    Matrix beta(n + 1, n + 1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            beta(r, c) = g.alpha().forward()(r, c);
    beta(n, n) = 1;
    return certify(g, std::move(rho), TwistMap(std::move(beta)));
}

Representation Representation::trivial(const HomLieAlgebra& g, TwistMap beta) {
    std::vector<Matrix> rho(static_cast<size_t>(g.dim()), Matrix::zero(beta.dim(), beta.dim()));
    return certify(g, std::move(rho), std::move(beta));
}

Matrix Representation::rho_of(const Vec& x) const {
    Matrix acc(wdim(), wdim());
    for (size_t i = 0; i < rho_.size(); ++i)
        if (x[static_cast<int>(i)] != 0)
            acc += x[static_cast<int>(i)] * rho_[i];
    return acc;
}

} // namespace hombracket
