#include "hombracket/cochain.hpp"
#include "hombracket/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hombracket;

namespace {

// deterministic cochain generator
struct Gen {
    unsigned long long s;
    explicit Gen(unsigned long long seed) : s(seed) {}
    int next(int lo, int hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational next_rat() { return Rational(next(-3, 3), next(1, 2)); }
    Cochain cochain(int dim, int arity) {
        Cochain c(dim, arity);
        for (const MultiIndex& t : increasing_tuples(dim, arity)) {
            Vec v(dim);
            for (int i = 0; i < dim; ++i)
                v[i] = next_rat();
            c.set(t, v);
        }
        return c;
    }
};

Cochain e_matrix(int dim, int to, int from) {
    Matrix m(dim, dim);
    m(to, from) = 1;
    return Cochain::from_matrix(m);
}

// the dim-2 instance mu(e1, e2) = e2
Cochain mu_dim2() {
    Cochain mu(2, 2);
    mu.set({0, 1}, Vec::basis(2, 1));
    return mu;
}

// sl2 with basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
Cochain mu_sl2() {
    Cochain mu(3, 2);
    mu.set({0, 1}, rat(2) * Vec::basis(3, 1));
    mu.set({0, 2}, rat(-2) * Vec::basis(3, 2));
    mu.set({1, 2}, Vec::basis(3, 0));
    return mu;
}

} // namespace

TEST_CASE("unshuffle enumeration") {
    auto u = unshuffles(2, 1);
    REQUIRE(u.size() == 3);
    CHECK(u[0].perm == std::vector<int>{0, 1, 2});
    CHECK(u[0].sign == 1);
    CHECK(u[1].perm == std::vector<int>{0, 2, 1});
    CHECK(u[1].sign == -1);
    CHECK(u[2].perm == std::vector<int>{1, 2, 0});
    CHECK(u[2].sign == 1);
    CHECK(unshuffles(0, 3).size() == 1);
    CHECK(unshuffles(3, 0).size() == 1);
}

TEST_CASE("cochain evaluation extends multilinearly and alternates") {
    Cochain mu = mu_sl2();
    Vec h = Vec::basis(3, 0), e = Vec::basis(3, 1), f = Vec::basis(3, 2);
    CHECK(mu.eval({h, e}) == rat(2) * e);
    CHECK(mu.eval({e, h}) == rat(-2) * e);
    CHECK(mu.eval({e + f, e + f}).is_zero());
    CHECK(mu.eval({h + e, f}) == rat(-2) * f + h);
}

TEST_CASE("compose on matrices is the twisted product") {
    TwistMap t(Matrix::from_rows({{1, 2}, {1, 1}}));
    Matrix p = Matrix::from_rows({{0, 1}, {3, 0}});
    Matrix q = Matrix::from_rows({{1, 1}, {0, 2}});
    Cochain pq = compose(Cochain::from_matrix(p), Cochain::from_matrix(q), t);
    Matrix expect = t.forward() * p * t.inverse() * q * t.inverse();
    CHECK(pq.as_matrix() == expect);
}

TEST_CASE("compose with an arity-0 cochain applies the conjugated map") {
    TwistMap t(Matrix::from_rows({{1, 2}, {1, 1}}));
    Matrix nmat = Matrix::from_rows({{0, 1}, {3, 0}});
    Cochain n = Cochain::from_matrix(nmat);
    Vec y{rat(1), rat(2)};
    Cochain ny = compose(n, Cochain::from_vector(2, y), t);
    CHECK(ny.as_vector() == (t.forward() * nmat * t.inverse()).apply(y));
    // the flipped insertion has no slot to fill
    CHECK(compose(Cochain::from_vector(2, y), n, t).is_zero());
    // and the bracket reduces to (Ad N)(y)
    Cochain br = nr_bracket(n, Cochain::from_vector(2, y), t);
    CHECK(br.as_vector() == (t.forward() * nmat * t.inverse()).apply(y));
}

TEST_CASE("compose at the identity twist matches the classical oracle") {
    TwistMap id2 = TwistMap::identity(2), id3 = TwistMap::identity(3);
    Gen g(99);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = trial % 2 ? 2 : 3;
        const TwistMap& id = dim == 2 ? id2 : id3;
        Cochain p = g.cochain(dim, g.next(0, 3));
        Cochain q = g.cochain(dim, g.next(0, 3));
        CHECK(compose(p, q, id) == oracle::classical_compose(p, q));
    }
}

TEST_CASE("nr_bracket worked example at dim 2") {
    TwistMap t(Matrix::diagonal({rat(1), rat(2)}));
    Cochain a = e_matrix(2, 0, 1); // E12
    Cochain b = e_matrix(2, 1, 0); // E21
    Matrix expect(2, 2);
    expect(0, 0) = rat(1, 2);
    expect(1, 1) = rat(-1);
    CHECK(nr_bracket(a, b, t).as_matrix() == expect);
}

TEST_CASE("nr_bracket at identity is the matrix commutator") {
    TwistMap id = TwistMap::identity(2);
    Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
    CHECK(nr_bracket(Cochain::from_matrix(a), Cochain::from_matrix(b), id).as_matrix() ==
          a * b - b * a);
}

TEST_CASE("odd-degree self-bracket conventions") {
    TwistMap t(Matrix::diagonal({rat(1), rat(2)}));
    Cochain mu = mu_dim2();
    // even arity = odd degree: [mu, mu] = 2 (mu o mu)
    CHECK(nr_bracket(mu, mu, t) == rat(2) * compose(mu, mu, t));
    Gen g(7);
    Cochain p = g.cochain(2, 2);
    CHECK(nr_bracket(p, p, t) == rat(2) * compose(p, p, t));
    // odd arity = even degree: [p, p] vanishes identically
    Cochain q = g.cochain(2, 1);
    CHECK(nr_bracket(q, q, t).is_zero());
}

TEST_CASE("ad_alpha on cochains") {
    TwistMap id = TwistMap::identity(2);
    Gen g(3);
    Cochain p = g.cochain(2, 2);
    CHECK(ad_alpha(p, id) == p);

    TwistMap t(Matrix::from_rows({{1, 2}, {1, 1}}));
    Matrix m = Matrix::from_rows({{0, 1}, {3, 0}});
    CHECK(ad_alpha(Cochain::from_matrix(m), t).as_matrix() ==
          t.forward() * m * t.inverse());

    // mu(e1,e2) = e2 is invariant under diag(1,2)
    TwistMap d(Matrix::diagonal({rat(1), rat(2)}));
    CHECK(ad_alpha(mu_dim2(), d) == mu_dim2());
}

TEST_CASE("is_hom_lie verdicts") {
    TwistMap id2 = TwistMap::identity(2);
    CHECK(is_hom_lie(Cochain(2, 2), id2).passed()); // zero bracket

    TwistMap d(Matrix::diagonal({rat(1), rat(2)}));
    CHECK(is_hom_lie(mu_dim2(), d).passed());

    TwistMap id3 = TwistMap::identity(3);
    CHECK(is_hom_lie(mu_sl2(), id3).passed());

    // sl2 with a non-automorphism twist fails multiplicativity at (e, f)
    TwistMap bad(Matrix::diagonal({rat(1), rat(2), rat(3)}));
    Report r = is_hom_lie(mu_sl2(), bad);
    CHECK_FALSE(r.passed());
    REQUIRE(r.conditions.size() == 2);
    CHECK(r.conditions[0].name == "multiplicative");
    CHECK_FALSE(r.conditions[0].passed);
    REQUIRE(r.conditions[0].witness.has_value());
    CHECK(r.conditions[0].witness->args == std::vector<int>{2, 3}); // 1-based (e, f)
}

TEST_CASE("hom-Jacobi expansion identity under multiplicativity") {
    // [mu,mu](a x1, a x2, a x3) = 2 (mu(mu(x1,x2), a x3) + cyclic)
    TwistMap d(Matrix::diagonal({rat(1), rat(2)}));
    Cochain mu = mu_dim2();
    Cochain br = nr_bracket(mu, mu, d);
    const Matrix& a = d.forward();
    Vec x1 = Vec::basis(2, 0), x2 = Vec::basis(2, 1), x3 = x1 + x2;
    Vec lhs = br.eval({a.apply(x1), a.apply(x2), a.apply(x3)});
    Vec rhs = mu.eval({mu.eval({x1, x2}), a.apply(x3)}) +
              mu.eval({mu.eval({x2, x3}), a.apply(x1)}) +
              mu.eval({mu.eval({x3, x1}), a.apply(x2)});
    CHECK(lhs == rat(2) * rhs);
}

TEST_CASE("graded hom-Lie axioms hold on random samples") {
    std::vector<TwistMap> twists;
    twists.push_back(TwistMap(Matrix::diagonal({rat(1), rat(2)})));
    twists.push_back(TwistMap::identity(3));
    twists.push_back(TwistMap(Matrix::diagonal({rat(1), rat(2), rat(1, 2)})));
    Gen g(11);
    for (const TwistMap& t : twists) {
        const int dim = t.dim();
        for (int trial = 0; trial < 25; ++trial) {
            Cochain p = g.cochain(dim, g.next(0, 3));
            Cochain q = g.cochain(dim, g.next(0, 3));
            Cochain w = g.cochain(dim, g.next(0, 3));

            // equivariance
            CHECK(ad_alpha(nr_bracket(p, q, t), t) ==
                  nr_bracket(ad_alpha(p, t), ad_alpha(q, t), t));
            // graded antisymmetry
            int s = (p.degree() * q.degree()) % 2 == 0 ? -1 : 1;
            CHECK(nr_bracket(p, q, t) == Rational(s) * nr_bracket(q, p, t));
            // graded hom-Jacobi
            Cochain lhs = nr_bracket(ad_alpha(w, t), nr_bracket(p, q, t), t);
            Cochain rhs1 = nr_bracket(nr_bracket(w, p, t), ad_alpha(q, t), t);
            Cochain rhs2 = nr_bracket(ad_alpha(p, t), nr_bracket(w, q, t), t);
            int sj = (w.degree() * p.degree()) % 2 == 0 ? 1 : -1;
            CHECK(lhs == rhs1 + Rational(sj) * rhs2);

            // right-symmetry of the twisted composition: the associator is
            // graded-symmetric in its last two arguments
            CHECK(ad_alpha(compose(p, q, t), t) ==
                  compose(ad_alpha(p, t), ad_alpha(q, t), t));
            Cochain l = compose(compose(p, q, t), ad_alpha(w, t), t) -
                        compose(ad_alpha(p, t), compose(q, w, t), t);
            Cochain r = compose(compose(p, w, t), ad_alpha(q, t), t) -
                        compose(ad_alpha(p, t), compose(w, q, t), t);
            int sa = (q.degree() * w.degree()) % 2 == 0 ? 1 : -1;
            CHECK(l == Rational(sa) * r);
        }
    }
}
