#include "hombracket/cohomology.hpp"

#include "hombracket/errors.hpp"

namespace hombracket {

Cochain coboundary(const Cochain& f, const HomLieAlgebra& g) {
    if (f.dim() != g.dim() || !f.target_is_domain())
        throw DimensionMismatch("coboundary: cochain shape mismatch");
    Cochain br = nr_bracket(g.mu(), f, g.alpha());
    if (f.arity() % 2 == 0)
        br *= Rational(-1); // sign (-1)^{k+1}, k = arity of f
    return br;
}

Cochain rep_coboundary(const Cochain& f, const HomLieAlgebra& g, const Representation& r) {
    if (f.dim() != g.dim() || f.target_dim() != r.wdim())
        throw DimensionMismatch("rep_coboundary: cochain shape mismatch");
    const int n = g.dim();
    const int k = f.arity();
    const Matrix a_inv = g.alpha().inverse();
    const Matrix a_inv2 = g.alpha().power(-2);

    Cochain out(n, k + 1, r.wdim());
    for (const MultiIndex& t : increasing_tuples(n, k + 1)) {
        Vec acc(r.wdim());
        // action sum
        for (int i = 0; i <= k; ++i) {
            std::vector<Vec> args;
            args.reserve(static_cast<size_t>(k));
            for (int j = 0; j <= k; ++j)
                if (j != i)
                    args.push_back(a_inv.column(t[static_cast<size_t>(j)]));
            Vec term = r.rho()[static_cast<size_t>(t[static_cast<size_t>(i)])].apply(f.eval(args));
            if (i % 2 != 0)
                term = -term;
            acc += term;
        }
        // bracket-insertion sum
        for (int i = 0; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                Vec xij = g.mu().eval({a_inv2.column(t[static_cast<size_t>(i)]),
                                       a_inv2.column(t[static_cast<size_t>(j)])});
                std::vector<Vec> args;
                args.reserve(static_cast<size_t>(k));
                args.push_back(std::move(xij));
                for (int s = 0; s <= k; ++s)
                    if (s != i && s != j)
                        args.push_back(a_inv.column(t[static_cast<size_t>(s)]));
                Vec term = r.beta().forward().apply(f.eval(args));
                if ((i + j) % 2 != 0) // (-1)^{i+j} over 1-based positions
                    term = -term;
                acc += term;
            }
        }
        if (!acc.is_zero())
            out.set(t, std::move(acc));
    }
    return out;
}

Matrix rep_coboundary_matrix(const HomLieAlgebra& g, const Representation& r, int arity) {
    const int n = g.dim();
    const int w = r.wdim();
    const auto dom = increasing_tuples(n, arity);
    const auto codom = increasing_tuples(n, arity + 1);
    Matrix d(static_cast<int>(codom.size()) * w, static_cast<int>(dom.size()) * w);
    for (size_t s = 0; s < dom.size(); ++s) {
        for (int b = 0; b < w; ++b) {
            Cochain basis(n, arity, w);
            basis.set(dom[s], Vec::basis(w, b));
            Cochain img = rep_coboundary(basis, g, r);
            for (size_t tt = 0; tt < codom.size(); ++tt) {
                Vec v = img.value(codom[tt]);
                for (int c = 0; c < w; ++c)
                    d(static_cast<int>(tt) * w + c, static_cast<int>(s) * w + b) = v[c];
            }
        }
    }
    return d;
}

std::vector<CohomologyDegree> cohomology_dims(const HomLieAlgebra& g, const Representation& r,
                                              int max_degree) {
    const int n = g.dim();
    const int w = r.wdim();
    std::vector<CohomologyDegree> out;
    std::vector<Matrix> d;
    d.reserve(static_cast<size_t>(max_degree) + 2);
    for (int k = 0; k <= max_degree + 1; ++k)
        d.push_back(rep_coboundary_matrix(g, r, k));
    for (int k = 0; k <= max_degree; ++k)
        if (!(d[static_cast<size_t>(k) + 1] * d[static_cast<size_t>(k)]).is_zero())
            throw Error("cohomology_dims: d*d != 0 at arity " + std::to_string(k));
    for (int k = 0; k <= max_degree; ++k) {
        CohomologyDegree deg;
        deg.degree = k;
        const auto count = increasing_tuples(n, k).size();
        const int space_dim = static_cast<int>(count) * w;
        const int rank_out = rank(d[static_cast<size_t>(k)]);
        const int rank_in = k == 0 ? 0 : rank(d[static_cast<size_t>(k) - 1]);
        deg.kernel_dim = space_dim - rank_out;
        deg.image_dim = rank_out;
        deg.h_dim = deg.kernel_dim - rank_in;
        out.push_back(deg);
    }
    return out;
}

} // namespace hombracket
