#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shimfol/gfpn.hpp"
#include "shimfol/linalg.hpp"
#include "shimfol/tensor.hpp"

using namespace shimfol;
using namespace shimfol::gf;

namespace {

FieldElement random_element(const FiniteField& k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, *k.order() - 1);
    return k.from_index(pick(rng));
}

Poly as_poly(const FieldElement& x) { return Poly(x.coeffs().begin(), x.coeffs().end()); }

}  // namespace

TEST_CASE("prime field needs no modulus") {
    auto k = build_field(5, 1);
    CHECK(k.characteristic() == 5);
    CHECK(k.degree() == 1);
    CHECK(*k.order() == 5);
    CHECK((k.from_int(3) * k.from_int(4)) == k.from_int(2));
    CHECK(k.from_int(-1) == k.from_int(4));
}

TEST_CASE("default modulus is the smallest irreducible") {
    CHECK(build_field(2, 2).modulus() == Poly{1, 1, 1});
    CHECK(build_field(3, 2).modulus() == Poly{1, 0, 1});
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int n = 1; n <= (p == 2 ? 6 : 4); ++n) {
            CAPTURE(p);
            CAPTURE(n);
            CHECK(build_field(p, n).modulus() == oracle::smallest_irreducible(p, n));
        }
    }
}

TEST_CASE("bad field requests are rejected") {
    CHECK_THROWS_AS(build_field(2, 2, Poly{1, 0, 1}), InputError);
    CHECK_THROWS_AS(build_field(4, 1), InputError);
    CHECK_THROWS_AS(build_field(2, 0), InputError);
    CHECK_THROWS_AS(build_field(3, 2, Poly{1, 0, 2}), InputError);
}

TEST_CASE("fields are interned") {
    CHECK(build_field(3, 4) == build_field(3, 4));
    CHECK(build_field(3, 4).generator().field() == build_field(3, 4));
}

TEST_CASE("multiplication agrees with schoolbook reduction") {
    std::mt19937_64 rng(11);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 5}, {3, 4}, {5, 3}, {7, 2}, {2, 12}}) {
        auto k = build_field(p, n);
        for (int t = 0; t < 300; ++t) {
            auto x = random_element(k, rng), y = random_element(k, rng);
            CHECK(as_poly(x * y) == oracle::field_mul(as_poly(x), as_poly(y), k.modulus(), p));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(12);
    auto k = build_field(3, 5);
    for (int t = 0; t < 500; ++t) {
        auto a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == k.zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == k.one());
            CHECK((b / a) * a == b);
        }
    }
    CHECK_THROWS(k.zero().inverse());
}

TEST_CASE("frobenius examples") {
    auto k5 = build_field(5, 1);
    for (int v = 0; v < 5; ++v) CHECK(frobenius(k5.from_int(v), 1) == k5.from_int(v));
    auto k4 = build_field(2, 2);
    auto g = k4.generator();
    CHECK(frobenius(g, 1) != g);
    CHECK(frobenius(g, 1) == g + k4.one());
    auto k = build_field(3, 4);
    for (std::uint64_t i = 0; i < *k.order(); i += 7) CHECK(frobenius(k.from_index(i), 4) == k.from_index(i));
}

TEST_CASE("frobenius has order n on the generator") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 6}, {3, 4}, {5, 3}}) {
        auto g = build_field(p, n).generator();
        for (int t = 1; t < n; ++t) CHECK(frobenius(g, t) != g);
        CHECK(frobenius(g, n) == g);
    }
}

TEST_CASE("frobenius is a ring automorphism on 1000 random pairs") {
    std::mt19937_64 rng(13);
    auto k = build_field(5, 6);
    for (int t = 0; t < 1000; ++t) {
        auto x = random_element(k, rng), y = random_element(k, rng);
        CHECK(frobenius(x * y) == frobenius(x) * frobenius(y));
        CHECK(frobenius(x + y) == frobenius(x) + frobenius(y));
        CHECK(frobenius(x) == x.pow(5));
    }
}

TEST_CASE("kernel basis examples") {
    auto k2 = build_field(2, 1);
    auto id = kernel_basis(Matrix::identity(k2, 3));
    CHECK(id.rank == 3);
    CHECK(id.basis.empty());
    auto zero = kernel_basis(Matrix(k2, 2, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.basis.size() == 3);
    auto ones = kernel_basis(Matrix::from_ints(k2, {{1, 1}, {1, 1}}));
    CHECK(ones.rank == 1);
    REQUIRE(ones.basis.size() == 1);
    CHECK(ones.basis[0] == Vector{k2.one(), k2.one()});
}

TEST_CASE("kernel basis property on random matrices") {
    std::mt19937_64 rng(14);
    auto k = build_field(3, 2);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int t = 0; t < 200; ++t) {
        Matrix a(k, dim(rng), dim(rng));
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c)
                if (rng() % 3) a.at(r, c) = random_element(k, rng);
        auto ker = kernel_basis(a);
        CHECK(ker.rank + static_cast<int>(ker.basis.size()) == a.cols());
        CHECK(ker.rank <= std::min(a.rows(), a.cols()));
        CHECK(ker.rank == rank(rref(a).reduced));
        for (const auto& b : ker.basis) {
            auto img = a * b;
            CHECK(std::all_of(img.begin(), img.end(), [](const FieldElement& x) { return x.is_zero(); }));
        }
        if (!ker.basis.empty()) CHECK(rank(Matrix::from_columns(k, a.cols(), ker.basis)) == static_cast<int>(ker.basis.size()));
    }
}

TEST_CASE("semilinear kernel dimension") {
    auto k4 = build_field(2, 2);
    CHECK(semilinear_kernel_dim(Matrix::identity(k4, 3), 1) == 0);
    CHECK(semilinear_kernel_dim(Matrix(k4, 3, 3), -1) == 3);
    auto g = k4.generator();
    Matrix a(k4, 2, 2);
    a.at(0, 0) = k4.one();
    a.at(0, 1) = g;
    a.at(1, 0) = g;
    a.at(1, 1) = g * g;
    CHECK(semilinear_kernel_dim(a, 1) == 1);
}

TEST_CASE("solve finds a preimage or reports none") {
    auto k = build_field(5, 1);
    auto a = Matrix::from_ints(k, {{1, 2}, {2, 4}});
    auto x = solve(a, {k.from_int(1), k.from_int(2)});
    REQUIRE(x);
    CHECK(a * *x == Vector{k.from_int(1), k.from_int(2)});
    CHECK_FALSE(solve(a, {k.from_int(1), k.from_int(3)}));
}

namespace {

/// Every nonzero idempotent e of the algebra with (a (x) 1) e = (1 (x) sigma(a)) e for the given sigma root.
std::vector<TensorAlgebra::Element> brute_idempotents(const TensorAlgebra& alg) {
    const auto& big = alg.big();
    const std::uint64_t q = *big.order();
    const int f = alg.rank();
    std::vector<TensorAlgebra::Element> out;
    std::uint64_t total = 1;
    for (int i = 0; i < f; ++i) total *= q;
    for (std::uint64_t code = 1; code < total; ++code) {
        TensorAlgebra::Element e(f);
        std::uint64_t c = code;
        for (int i = 0; i < f; ++i) {
            e[i] = big.from_index(c % q);
            c /= q;
        }
        if (alg.mul(e, e) == e) out.push_back(e);
    }
    return out;
}

}  // namespace

TEST_CASE("tensor idempotents: trivial case") {
    auto k = build_field(3, 2);
    auto ti = tensor_idempotents(1, k);
    REQUIRE(ti.idempotents.size() == 1);
    CHECK(ti.idempotents[0] == ti.algebra.one());
    CHECK_THROWS_AS(tensor_idempotents(3, k), InputError);
}

TEST_CASE("tensor idempotents match brute force and are permuted by frobenius") {
    for (auto [p, f, n] : std::vector<std::tuple<std::uint32_t, int, int>>{{2, 2, 2}, {3, 2, 4}, {2, 3, 3}, {2, 2, 4}}) {
        CAPTURE(p);
        CAPTURE(f);
        CAPTURE(n);
        auto k = build_field(p, n);
        auto ti = tensor_idempotents(f, k);
        const auto& alg = ti.algebra;
        const auto& e = ti.idempotents;
        REQUIRE(static_cast<int>(e.size()) == f);

        // The primitive idempotents are exactly the brute-force idempotents that are
        // not sums of two others; each library idempotent must be among them.
        auto all = brute_idempotents(alg);
        CHECK(all.size() == (std::size_t{1} << f) - 1);
        for (const auto& x : e) CHECK(std::find(all.begin(), all.end(), x) != all.end());

        auto sum = alg.zero();
        for (const auto& x : e) sum = alg.add(sum, x);
        CHECK(sum == alg.one());
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) CHECK(alg.mul(e[i], e[j]) == (i == j ? e[i] : alg.zero()));
        for (const auto& a : subfield_elements(alg.small(), f))
            for (int i = 0; i < f; ++i) CHECK(alg.mul(alg.from_small(a), e[i]) == alg.mul(alg.from_big(alg.embed(i, a)), e[i]));
        for (int i = 0; i < f; ++i) CHECK(alg.frobenius(e[i]) == e[(i + 1) % f]);
    }
}

TEST_CASE("embedding roots are frobenius-cyclic from the smallest root") {
    auto k = build_field(3, 4);
    auto ti = tensor_idempotents(2, k);
    const auto& roots = ti.algebra.roots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] < roots[1]);
    CHECK(roots[1] == frobenius(roots[0]));
    for (const auto& r : roots) CHECK(evaluate(ti.algebra.small().modulus(), r).is_zero());
}

TEST_CASE("subfield elements") {
    auto k = build_field(2, 6);
    CHECK(subfield_elements(k, 2).size() == 4);
    CHECK(subfield_elements(k, 3).size() == 8);
    for (const auto& x : subfield_elements(k, 3)) CHECK(frobenius(x, 3) == x);
    CHECK(subfield_basis(k, 3).size() == 3);
}
