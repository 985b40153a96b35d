#include "hombracket/right_symmetric.hpp"

#include "hombracket/errors.hpp"

namespace hombracket {

Vec RightSymmetricAlgebra::product(const Vec& x, const Vec& y) const {
    const int n = dim();
    Vec out(n);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < n; ++j)
            if (y[j] != 0)
                out += (x[i] * y[j]) * product_basis(i, j);
    }
    return out;
}

namespace {

Witness vec_witness(const std::vector<int>& args_0based, const Vec& residual) {
    Witness w;
    for (int a : args_0based)
        w.args.push_back(a + 1);
    for (int i = 0; i < residual.size(); ++i)
        w.residual.push_back(to_string(residual[i]));
    return w;
}

} // namespace

Report check_right_symmetric(const RightSymmetricAlgebra& rs) {
    const int n = rs.dim();
    if (static_cast<int>(rs.table.size()) != n)
        throw DimensionMismatch("check_right_symmetric: table rows differ from dimension");
    for (const auto& row : rs.table)
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatch("check_right_symmetric: table columns differ from dimension");

    Report rep;
    rep.check = "right_symmetric";
    const Matrix& g = rs.gamma.forward();

    bool morph_ok = true;
    Witness morph_w;
    for (int i = 0; i < n && morph_ok; ++i)
        for (int j = 0; j < n && morph_ok; ++j) {
            Vec lhs = g.apply(rs.product_basis(i, j));
            Vec rhs = rs.product(g.column(i), g.column(j));
            if (!(lhs == rhs)) {
                morph_ok = false;
                morph_w = vec_witness({i, j}, lhs - rhs);
            }
        }
    rep.add("gamma_morphism", morph_ok, morph_w);

    bool ident_ok = true;
    Witness ident_w;
    for (int i = 0; i < n && ident_ok; ++i)
        for (int j = 0; j < n && ident_ok; ++j)
            for (int k = 0; k < n && ident_ok; ++k) {
                Vec x = Vec::basis(n, i), y = Vec::basis(n, j), z = Vec::basis(n, k);
                Vec lhs = rs.product(rs.product(x, y), g.apply(z)) -
                          rs.product(g.apply(x), rs.product(y, z));
                Vec rhs = rs.product(rs.product(x, z), g.apply(y)) -
                          rs.product(g.apply(x), rs.product(z, y));
                if (!(lhs == rhs)) {
                    ident_ok = false;
                    ident_w = vec_witness({i, j, k}, lhs - rhs);
                }
            }
    rep.add("right_symmetric_identity", ident_ok, ident_w);
    return rep;
}

HomLieAlgebra commutator_hom_lie(const RightSymmetricAlgebra& rs) {
    Report rep = check_right_symmetric(rs);
    if (!rep.passed())
        throw NotRightSymmetric("commutator_hom_lie: input fails its check:\n" + rep.to_text());
    const int n = rs.dim();
    Cochain mu(n, 2);
    for (const MultiIndex& pair : increasing_tuples(n, 2)) {
        Vec v = rs.product_basis(pair[0], pair[1]) - rs.product_basis(pair[1], pair[0]);
        if (!v.is_zero())
            mu.set(pair, std::move(v));
    }
    return HomLieAlgebra::certify(rs.gamma, std::move(mu));
}

} // namespace hombracket
