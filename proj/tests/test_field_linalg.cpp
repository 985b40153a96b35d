#include "hombracket/errors.hpp"
#include "hombracket/matrix.hpp"
#include "hombracket/rational.hpp"

#include <doctest.h>

using namespace hombracket;

TEST_CASE("rational parse and print round-trip") {
    CHECK(to_string(parse_rational("3/4")) == "3/4");
    CHECK(to_string(parse_rational("-3/4")) == "-3/4");
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(to_string(parse_rational("−2/3")) == "-2/3"); // U+2212 minus
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("2/-3"), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
    // two evaluation orders agree bit-for-bit
    Rational a = rat(1, 3), b = rat(1, 6), c = rat(5, 7);
    CHECK((a + b) + c == a + (b + c));
    CHECK(to_string((a + b) * c) == to_string(c * b + c * a));
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
}

TEST_CASE("invert: identity and diagonal") {
    CHECK(invert(Matrix::identity(3)) == Matrix::identity(3));
    Matrix d = Matrix::diagonal({rat(2), rat(3)});
    Matrix expect = Matrix::diagonal({rat(1, 2), rat(1, 3)});
    CHECK(invert(d) == expect);
}

TEST_CASE("invert: unipotent example multiplies back to identity") {
    Matrix m = Matrix::from_rows({{1, 1}, {0, 1}});
    Matrix mi = invert(m);
    CHECK(mi == Matrix::from_rows({{1, -1}, {0, 1}}));
    CHECK(m * mi == Matrix::identity(2));
    CHECK(mi * m == Matrix::identity(2));
}

TEST_CASE("invert: errors") {
    CHECK_THROWS_AS(invert(Matrix::zero(2, 3)), DimensionMismatch);
    CHECK_THROWS_AS(invert(Matrix::from_rows({{1, 2}, {2, 4}})), NotInvertible);
    CHECK_THROWS_AS(invert(Matrix::from_rows({{1, 0}, {0, 0}})), NotInvertible);
}

TEST_CASE("rank: pinned values") {
    CHECK(rank(Matrix::zero(2, 2)) == 0);
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1); // rows proportional
    CHECK(rank(Matrix::from_rows({{0, 1, 0}, {0, 0, 0}})) == 1);
}

namespace {

// small deterministic generator for matrix entries
struct Lcg {
    unsigned long long s = 12345;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

Matrix random_matrix(Lcg& g, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = Rational(g.next(-4, 4), g.next(1, 3));
    return m;
}

} // namespace

TEST_CASE("invert is an involution on random invertible matrices") {
    Lcg g;
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        int n = g.next(1, 4);
        Matrix m = random_matrix(g, n);
        Matrix mi;
        try {
            mi = invert(m);
        } catch (const NotInvertible&) {
            continue;
        }
        CHECK(m * mi == Matrix::identity(n));
        CHECK(invert(mi) == m);
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("rank equals rank of the transpose") {
    Lcg g;
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(g, 4);
        // plant some rank deficiency occasionally
        if (trial % 3 == 0)
            for (int j = 0; j < 4; ++j)
                m(3, j) = m(0, j) + m(1, j);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("kernel basis spans the exact kernel") {
    Matrix m = Matrix::from_rows({{1, 2, 0}, {2, 4, 0}});
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const Vec& v : basis)
        CHECK(m.apply(v).is_zero());
    CHECK(static_cast<int>(basis.size()) == 3 - rank(m));
}

TEST_CASE("twist map caches the exact inverse and dual") {
    TwistMap t(Matrix::from_rows({{1, 1}, {0, 1}}));
    CHECK(t.forward() * t.inverse() == Matrix::identity(2));
    CHECK(t.dual() == t.forward().transpose());
    CHECK(t.power(-2) == t.inverse() * t.inverse());
    CHECK(t.power(0) == Matrix::identity(2));
    CHECK_THROWS_AS(TwistMap(Matrix::from_rows({{1, 0}, {0, 0}})), NotInvertible);
}
