#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detrep/fp.hpp"
#include "detrep/generators.hpp"
#include "detrep/linalg.hpp"
#include "detrep/multipoly.hpp"
#include "detrep/rational.hpp"
#include "detrep/unipoly.hpp"

#include "oracles.hpp"

using namespace detrep;

namespace {

Rat q(long n, long d = 1) { return Rat(mpz_class(n), mpz_class(d)); }

MultiPoly<Rat> var(std::size_t nvars, std::size_t i) { return MultiPoly<Rat>::variable(nvars, i); }

MultiPoly<Rat> random_multipoly(Rng& rng, std::size_t nvars, unsigned max_deg,
                                std::size_t max_terms) {
    MultiPoly<Rat> p(nvars);
    const std::size_t terms = 1 + static_cast<std::size_t>(rng.int_in(0, static_cast<long long>(max_terms) - 1));
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        unsigned left = max_deg;
        for (std::size_t i = 0; i < nvars && left > 0; ++i) {
            const unsigned take = static_cast<unsigned>(rng.int_in(0, left));
            e[i] = take;
            left -= take;
        }
        p.add_term(e, Rat(rng.int_in(-5, 5)));
    }
    return p;
}

} // namespace

TEST_CASE("rational scalar invariants") {
    CHECK(Rat(mpz_class(2), mpz_class(6)) == Rat(mpz_class(1), mpz_class(3)));
    CHECK(Rat(mpz_class(2), mpz_class(-6)).den() == 3);
    CHECK(Rat(mpz_class(2), mpz_class(-6)).num() == -1);
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(0).den() == 1);
    CHECK((q(1, 3) + q(2, 6)).str() == "2/3");
    CHECK(Rat::parse("-3/9") == q(-1, 3));
    CHECK(Rat::parse("7") == q(7));
    CHECK_THROWS_AS(Rat::parse("x"), ParseError);
    CHECK_THROWS_AS(q(1) / q(0), Error);
}

TEST_CASE("prime field arithmetic") {
    Fp::set_modulus(101);
    CHECK(Fp(100) + Fp(2) == Fp(1));
    CHECK(Fp(-1) == Fp(100));
    CHECK((Fp(7) / Fp(7)) == Fp(1));
    CHECK(Fp(3).inverse() * Fp(3) == Fp(1));
    CHECK_THROWS_AS(Fp::set_modulus(100), ParseError);
    Fp::set_modulus(101);
}

TEST_CASE("mat_rank examples") {
    CHECK(mat_rank(Matrix<Rat>::identity(2)) == 2);
    const Matrix<Rat> prop{{q(1), q(2)}, {q(2), q(4)}};
    CHECK(mat_rank(prop) == 1);

    // planted rank 3 by factor product, confirmed against the minor oracle
    Rng rng(7);
    const Matrix<Rat> left = random_matrix<Rat>(rng, 5, 3);
    const Matrix<Rat> right = random_matrix<Rat>(rng, 3, 5);
    const Matrix<Rat> planted = left * right;
    REQUIRE(oracles::rank_by_minors(planted) == 3); // rank exactly 3 for this seed
    CHECK(mat_rank(planted) == 3);
}

TEST_CASE("mat_kernel examples") {
    CHECK(mat_kernel(Matrix<Rat>::identity(2)).cols() == 0);

    const Matrix<Rat> wide{{q(1), q(1)}};
    const Matrix<Rat> kern = mat_kernel(wide);
    REQUIRE(kern.cols() == 1);
    CHECK(kern(0, 0) == q(1));
    CHECK(kern(1, 0) == q(-1));

    // catalecticant fiber at t = 2: [[1,2],[2,4]], solved by hand: x = -2y
    const Matrix<Rat> fiber{{q(1), q(2)}, {q(2), q(4)}};
    const Matrix<Rat> fk = mat_kernel(fiber);
    REQUIRE(fk.cols() == 1);
    CHECK(fiber * fk == Matrix<Rat>(2, 1, q(0)));
    CHECK(fk(0, 0) == q(1));
    CHECK(fk(1, 0) == q(-1, 2));
}

TEST_CASE("mat_inverse examples") {
    CHECK(mat_inverse(Matrix<Rat>::identity(3)) == Matrix<Rat>::identity(3));

    const Matrix<Rat> d{{q(2), q(0)}, {q(0), q(1, 2)}};
    const Matrix<Rat> expected{{q(1, 2), q(0)}, {q(0), q(2)}};
    CHECK(mat_inverse(d) == expected);

    Rng rng(11);
    const Matrix<Rat> m = random_invertible_matrix<Rat>(rng, 4);
    CHECK(m * mat_inverse(m) == Matrix<Rat>::identity(4));
    CHECK(mat_inverse(m) * m == Matrix<Rat>::identity(4));

    const Matrix<Rat> singular{{q(1), q(2)}, {q(2), q(4)}};
    CHECK_THROWS_AS(mat_inverse(singular), SingularMatrix);
}

TEST_CASE("det_multipoly_matrix examples") {
    // the rank-4 quadric pattern
    Matrix<MultiPoly<Rat>> coord(2, 2, MultiPoly<Rat>(4));
    coord(0, 0) = var(4, 0);
    coord(0, 1) = var(4, 1);
    coord(1, 0) = var(4, 2);
    coord(1, 1) = var(4, 3);
    const MultiPoly<Rat> quadric = det_multipoly_matrix(coord);
    CHECK(quadric == var(4, 0) * var(4, 3) - var(4, 1) * var(4, 2));

    // diagonal product
    const std::size_t n = 3;
    Matrix<MultiPoly<Rat>> diag(n, n, MultiPoly<Rat>(n));
    MultiPoly<Rat> prod = MultiPoly<Rat>::constant(n, Rat(1));
    for (std::size_t i = 0; i < n; ++i) {
        diag(i, i) = var(n, i);
        prod = prod * var(n, i);
    }
    CHECK(det_multipoly_matrix(diag) == prod);

    // random vs the independent cofactor oracle
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<MultiPoly<Rat>> m(3, 3, MultiPoly<Rat>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                MultiPoly<Rat> lin(3);
                for (std::size_t v = 0; v < 3; ++v) {
                    Exponents e(3, 0);
                    e[v] = 1;
                    lin.add_term(e, Rat(rng.int_in(-5, 5)));
                }
                m(i, j) = lin;
            }
        CHECK(det_multipoly_matrix(m) == oracles::det_poly(m));
    }
}

TEST_CASE("bareiss handles zero pivots and singular inputs") {
    // first column entirely zero: determinant must vanish
    Matrix<MultiPoly<Rat>> z(2, 2, MultiPoly<Rat>(2));
    z(0, 1) = var(2, 0);
    z(1, 1) = var(2, 1);
    CHECK(det_multipoly_matrix(z).is_zero());

    // zero top-left pivot forces a swap
    Matrix<MultiPoly<Rat>> sw(2, 2, MultiPoly<Rat>(2));
    sw(0, 1) = var(2, 0);
    sw(1, 0) = var(2, 1);
    CHECK(det_multipoly_matrix(sw) == -(var(2, 0) * var(2, 1)));

    // general polynomial entries, not just linear forms
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t k = 2 + static_cast<std::size_t>(rng.int_in(0, 2));
        Matrix<MultiPoly<Rat>> m(k, k, MultiPoly<Rat>(2));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m(i, j) = random_multipoly(rng, 2, 2, 3);
        CHECK(det_multipoly_matrix(m) == oracles::det_poly(m));
    }
}

TEST_CASE("unipoly divmod, gcd and xgcd") {
    const UniPoly<Rat> a{-1, 0, 1};   // t^2 - 1
    const UniPoly<Rat> b{-1, 1};      // t - 1
    CHECK(unipoly_gcd(a, b) == b);

    CHECK(unipoly_gcd(UniPoly<Rat>{0, 1}, UniPoly<Rat>{1}) == UniPoly<Rat>{1});
    CHECK_THROWS_AS(unipoly_gcd(UniPoly<Rat>(), UniPoly<Rat>()), BothZero);

    // planted common factor t^2 + 3
    Rng rng(5);
    const UniPoly<Rat> common{3, 0, 1};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> c1(3), c2(4);
        for (auto& x : c1) x = Rat(rng.int_in(-5, 5));
        for (auto& x : c2) x = Rat(rng.int_in(-5, 5));
        UniPoly<Rat> f = UniPoly<Rat>(std::move(c1)) * common;
        UniPoly<Rat> g = UniPoly<Rat>(std::move(c2)) * common;
        if (f.is_zero() || g.is_zero()) continue;
        const UniPoly<Rat> d = unipoly_gcd(f, g);
        auto [quot, rem] = unipoly_divmod(d, common);
        CHECK(rem.is_zero()); // t^2 + 3 divides the gcd
    }

    // xgcd identity
    const auto [d, u, v] = unipoly_xgcd(a, UniPoly<Rat>{1, 2, 1});
    CHECK(u * a + v * UniPoly<Rat>{1, 2, 1} == d);
    CHECK(d.is_monic());
}

TEST_CASE("column_primitive_part examples") {
    using Col = std::vector<UniPoly<Rat>>;
    const UniPoly<Rat> t{0, 1};

    auto [col1, content1] = column_primitive_part(Col{t, t * t});
    CHECK(content1 == t);
    CHECK(col1[0] == UniPoly<Rat>{1});
    CHECK(col1[1] == t);

    auto [col2, content2] = column_primitive_part(Col{UniPoly<Rat>{1}, t});
    CHECK(content2 == UniPoly<Rat>{1});
    CHECK(col2[0] == UniPoly<Rat>{1});
    CHECK(col2[1] == t);

    // (t^2-1, t-1) * (t+2): content (t-1)(t+2)
    const UniPoly<Rat> tp2{2, 1};
    auto [col3, content3] = column_primitive_part(Col{UniPoly<Rat>{-1, 0, 1} * tp2, UniPoly<Rat>{-1, 1} * tp2});
    CHECK(content3 == (UniPoly<Rat>{-1, 1} * tp2).monic());
    CHECK(col3[0] == UniPoly<Rat>{1, 1});
    CHECK(col3[1] == UniPoly<Rat>{1});

    CHECK_THROWS_AS(column_primitive_part(Col{UniPoly<Rat>(), UniPoly<Rat>()}), ZeroColumn);
}

TEST_CASE("rank and kernel dimension properties") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + static_cast<std::size_t>(rng.int_in(0, 4));
        const std::size_t cols = 1 + static_cast<std::size_t>(rng.int_in(0, 4));
        const Matrix<Rat> m = random_matrix<Rat>(rng, rows, cols);
        const std::size_t r = mat_rank(m);
        CHECK(r == mat_rank(transpose(m)));
        CHECK(r == oracles::rank_by_minors(m));
        CHECK(mat_kernel(m).cols() + r == cols);
    }
}

TEST_CASE("det multiplicativity under the mixed product") {
    Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const FrobeniusInstance<Rat> inst = gen_frobenius_instance<Rat>(1, 4, false, rng.next());
        const Rat scale = mat_det(inst.s0) * mat_det(inst.t0);
        CHECK(determinant_hypersurface(inst.a) ==
              determinant_hypersurface(inst.b).scaled(scale));
    }
}

TEST_CASE("rational function field arithmetic") {
    const UniPoly<Rat> t{0, 1};
    const RatFunc<Rat> x(t);
    const RatFunc<Rat> one(UniPoly<Rat>{1});
    const RatFunc<Rat> f = one / (x - one); // 1/(t-1)
    CHECK((f * (x - one)) == one);
    CHECK((f + f) == RatFunc<Rat>(UniPoly<Rat>{2}, UniPoly<Rat>{-1, 1}));
    CHECK(RatFunc<Rat>(t * t, t).num() == t); // reduction
    CHECK(RatFunc<Rat>(t * t, t).den().is_one());

    // matrix algebra over the function field
    Matrix<RatFunc<Rat>> m(2, 2);
    m(0, 0) = one;
    m(0, 1) = x;
    m(1, 0) = x;
    m(1, 1) = x * x;
    CHECK(mat_rank(m) == 1);
    CHECK(mat_kernel(m).cols() == 1);
}

TEST_CASE("extract_rational_roots finds planted roots") {
    const UniPoly<Rat> t{0, 1};
    // (t - 2)^2 (t + 1/3) (t^2 + 1) * 6
    UniPoly<Rat> f = UniPoly<Rat>{-2, 1} * UniPoly<Rat>{-2, 1} *
                     UniPoly<Rat>(std::vector<Rat>{q(1, 3), q(1)}) * UniPoly<Rat>{1, 0, 1};
    f = f.scaled(q(6));
    auto [roots, rem] = extract_rational_roots(f);
    bool saw_two = false, saw_third = false;
    for (const auto& [root, mult] : roots) {
        if (root == q(2)) {
            saw_two = true;
            CHECK(mult == 2);
        }
        if (root == q(-1, 3)) {
            saw_third = true;
            CHECK(mult == 1);
        }
    }
    CHECK(saw_two);
    CHECK(saw_third);
    CHECK(rem.monic() == UniPoly<Rat>{1, 0, 1});
}

TEST_CASE("exact algebra works over a prime field too") {
    Fp::set_modulus(10007);
    Rng rng(31);
    const Matrix<Fp> m = random_matrix<Fp>(rng, 4, 4);
    CHECK(mat_rank(m) == oracles::rank_by_minors(m));
    const Matrix<Fp> inv_input = random_invertible_matrix<Fp>(rng, 3);
    CHECK(inv_input * mat_inverse(inv_input) == Matrix<Fp>::identity(3));
}
