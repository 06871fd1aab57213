#include <catch2/catch_amalgamated.hpp>

#include "lrb/matrix.hpp"
#include "test_util.hpp"

using lrb::make_rational;
using lrb::Matrix;
using lrb::Polynomial;
using lrb::Rational;

namespace {

// Right regular representation of (1/2)a + (1/2)b on the free LRB with two
// letters {e, a, b, ab, ba}, written out by hand: column s holds s*w.
Matrix running_example_matrix() {
    Matrix m(5, 5);
    const Rational h = make_rational(1, 2);
    m.at(1, 0) = h;  // e*w = (1/2)a + (1/2)b
    m.at(2, 0) = h;
    m.at(1, 1) = h;  // a*w = (1/2)a + (1/2)ab
    m.at(3, 1) = h;
    m.at(2, 2) = h;  // b*w = (1/2)b + (1/2)ba
    m.at(4, 2) = h;
    m.at(3, 3) = 1;  // ab*w = ab
    m.at(4, 4) = 1;  // ba*w = ba
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic basics", "[matrix]") {
    Matrix id = Matrix::identity(3);
    CHECK(id * id == id);
    CHECK((id - id).is_zero());
    Matrix m(2, 2);
    m.at(0, 1) = 1;
    CHECK((m * m).is_zero());
    CHECK(Rational(2) * id == id + id);
}

TEST_CASE("minimal polynomial of simple matrices", "[matrix]") {
    CHECK(lrb::minimal_polynomial(Matrix::identity(3)) ==
          Polynomial({Rational(-1), Rational(1)}));

    Matrix nilpotent(2, 2);
    nilpotent.at(0, 1) = 1;
    CHECK(lrb::minimal_polynomial(nilpotent) ==
          Polynomial({Rational(0), Rational(0), Rational(1)}));

    CHECK(lrb::minimal_polynomial(Matrix(0, 0)) == Polynomial::one());
    CHECK(lrb::minimal_polynomial(Matrix(3, 3)) ==
          Polynomial({Rational(0), Rational(1)}));
}

TEST_CASE("minimal polynomial of the running example", "[matrix]") {
    const Matrix m = running_example_matrix();
    const Polynomial expected = lrb::product_of_linear_factors(
        {Rational(0), make_rational(1, 2), Rational(1)});
    CHECK(lrb::minimal_polynomial(m) == expected);
    CHECK(lrbtest::brute_force_minimal_polynomial(m) == expected);
    CHECK(lrb::evaluate(expected, m).is_zero());
}

TEST_CASE("minimal polynomial matches brute-force oracle", "[matrix]") {
    lrbtest::RationalGen gen(301);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = gen.pick(1, 4);
        const Matrix m = gen.matrix(n, n);
        const Polynomial p = lrb::minimal_polynomial(m);
        CHECK(p == lrbtest::brute_force_minimal_polynomial(m));
        CHECK(p.is_monic());
        CHECK(lrb::evaluate(p, m).is_zero());
    }
}

TEST_CASE("no proper divisor of the minimal polynomial annihilates", "[matrix]") {
    // Triangular matrices with few distinct diagonal values: every eigenvalue
    // is on the diagonal, so the linear factor structure is known. Any proper
    // monic divisor of p divides p / (z - root) for some root, so checking the
    // maximal divisors suffices.
    lrbtest::RationalGen gen(302);
    const std::vector<Rational> values = {Rational(0), make_rational(1, 2), Rational(1),
                                          make_rational(-2, 3)};
    for (int trial = 0; trial < 20; ++trial) {
        const int n = gen.pick(2, 8);
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = values[gen.pick(0, static_cast<int>(values.size()) - 1)];
            for (int j = i + 1; j < n; ++j)
                if (gen.flip()) m.at(i, j) = gen.any();
        }
        const Polynomial p = lrb::minimal_polynomial(m);
        CHECK(lrb::evaluate(p, m).is_zero());
        for (const Rational& root : values) {
            const Polynomial factor({-root, Rational(1)});
            if (!lrb::poly_divides(factor, p)) continue;
            const Polynomial maximal_divisor = p.divmod(factor).first;
            CHECK_FALSE(lrb::evaluate(maximal_divisor, m).is_zero());
        }
    }
}

TEST_CASE("apply_linear_factors", "[matrix]") {
    CHECK(lrb::apply_linear_factors(Matrix::identity(4), {Rational(1)}).is_zero());

    Matrix nilpotent(2, 2);
    nilpotent.at(0, 1) = 1;
    CHECK(lrb::apply_linear_factors(nilpotent, {Rational(0)}) == nilpotent);

    const Matrix m = running_example_matrix();
    const std::vector<Rational> roots = {Rational(0), make_rational(1, 2), Rational(1)};
    CHECK(lrb::apply_linear_factors(m, roots).is_zero());

    // Order independence: the factors are polynomials in m and commute.
    lrbtest::RationalGen gen(303);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = gen.pick(1, 4);
        const Matrix a = gen.matrix(n, n);
        std::vector<Rational> rs;
        for (int i = 0; i < gen.pick(1, 4); ++i) rs.push_back(gen.any());
        const Matrix forward = lrb::apply_linear_factors(a, rs);
        std::reverse(rs.begin(), rs.end());
        CHECK(forward == lrb::apply_linear_factors(a, rs));
    }
}

TEST_CASE("kernel dimension", "[matrix]") {
    CHECK(lrb::kernel_dimension(Matrix(4, 4)) == 4);
    CHECK(lrb::kernel_dimension(Matrix::identity(4)) == 0);

    // Regression baselines for the running example: geometric multiplicities
    // 1, 2, 2 at eigenvalues 0, 1/2, 1.
    const Matrix m = running_example_matrix();
    const Matrix id = Matrix::identity(5);
    CHECK(lrb::kernel_dimension(m) == 1);
    CHECK(lrb::kernel_dimension(m - make_rational(1, 2) * id) == 2);
    CHECK(lrb::kernel_dimension(m - Rational(1) * id) == 2);
}

TEST_CASE("fraction-free rank matches Gaussian elimination", "[matrix]") {
    lrbtest::RationalGen gen(304);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = gen.pick(1, 7), cols = gen.pick(1, 7);
        Matrix m = gen.matrix(rows, cols);
        // Force rank deficiency half the time by duplicating scaled rows.
        if (gen.flip() && rows >= 2) {
            const int src = gen.pick(0, rows - 1), dst = gen.pick(0, rows - 1);
            const Rational f = gen.any();
            if (src != dst)
                for (int j = 0; j < cols; ++j) m.at(dst, j) = f * m.at(src, j);
        }
        CHECK(lrb::rank(m) == lrbtest::gauss_rank(m));
    }
}
