#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shimfol/qexp.hpp"

using namespace shimfol;
using namespace shimfol::qexp;

namespace {

/// Product by a double loop over the term lists, summing coefficients by key.
std::map<std::vector<std::int64_t>, gf::FieldElement> schoolbook(const QExp& a, const QExp& b) {
    std::map<std::vector<std::int64_t>, gf::FieldElement> out;
    for (const auto& [ka, ta] : a.terms())
        for (const auto& [kb, tb] : b.terms()) {
            auto alpha = ta.alpha + tb.alpha;
            auto it = out.find(alpha.key);
            if (it == out.end()) out.emplace(alpha.key, ta.coeff * tb.coeff);
            else it->second = it->second + ta.coeff * tb.coeff;
        }
    return out;
}

}  // namespace

TEST_CASE("single term under xi") {
    auto k = gf::build_field(5, 1);
    Exponent alpha{{1}, {k.from_int(3), k.from_int(2)}, {}};
    QExp f(k);
    f.add_term(alpha, k.from_int(4));
    auto x0 = xi_derivation(f, 0);
    CHECK(x0.coefficient({1}) == k.from_int(2));
    auto x1 = xi_derivation(f, 1);
    CHECK(x1.coefficient({1}) == k.from_int(3));
    CHECK(x1.coefficient({2}) == k.zero());
    CHECK_THROWS_AS(xi_derivation(f, 2), InputError);
}

TEST_CASE("terms with zero coefficients vanish") {
    auto k = gf::build_field(3, 1);
    Exponent alpha{{2}, {k.zero()}, {}};
    QExp f(k);
    f.add_term(alpha, k.from_int(1));
    CHECK(f.size() == 1);
    CHECK(xi_derivation(f, 0).empty());
    f.add_term(alpha, k.from_int(2));
    CHECK(f.empty());
}

TEST_CASE("metadata clashes and missing traces are rejected") {
    auto k = gf::build_field(3, 1);
    QExp f(k);
    f.add_term(Exponent{{1}, {k.one()}, {}}, k.one());
    CHECK_THROWS_AS(f.add_term(Exponent{{1}, {k.from_int(2)}, {}}, k.one()), InputError);
    CHECK_THROWS_AS(katz_derivation(f, 0), InputError);
}

TEST_CASE("katz derivation multiplies by the reduced trace") {
    auto k = gf::build_field(3, 2);
    QExp f(k);
    f.add_term(Exponent{{1}, {k.one()}, {5, 3}}, k.generator());
    auto d0 = katz_derivation(f, 0);
    CHECK(d0.coefficient({1}) == k.from_int(2) * k.generator());
    CHECK(katz_derivation(f, 1).empty());
}

TEST_CASE("lattice exponents respect frobenius and additivity") {
    std::mt19937_64 rng(41);
    hilbert::SplittingDatum datum{2, {1, 2}};
    auto kappa = gf::build_field(2, 2);
    ExponentLattice lattice(datum, kappa, 2, 2, rng);
    for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t b = -3; b <= 3; ++b) {
            auto e = lattice.exponent({a, b});
            for (int s = 0; s < datum.g(); ++s) CHECK(e.emb[datum.phi(s)] == e.emb[s].pow(2));
            auto sum = lattice.exponent({a, b}) + lattice.exponent({1, -1});
            auto direct = lattice.exponent({a + 1, b - 1});
            CHECK(sum.key == direct.key);
            CHECK(sum.same_metadata(direct));
        }
}

TEST_CASE("products agree with a schoolbook double loop") {
    std::mt19937_64 rng(42);
    hilbert::SplittingDatum datum{3, {2}};
    auto kappa = gf::build_field(3, 2);
    ExponentLattice lattice(datum, kappa, 2, 1, rng);
    for (int t = 0; t < 30; ++t) {
        auto f = lattice.random_expansion(20, 4, rng);
        auto h = lattice.random_expansion(20, 4, rng);
        auto prod = f * h;
        auto ref = schoolbook(f, h);
        for (const auto& [key, c] : ref) CHECK(prod.coefficient(key) == c);
        for (const auto& [key, term] : prod.terms()) CHECK(!term.coeff.is_zero());
        CHECK(f * h == h * f);
        CHECK(f + h == h + f);
    }
}

TEST_CASE("xi_sigma^p = xi_{phi sigma} and Leibniz on random expansions") {
    std::mt19937_64 rng(43);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (const auto& sizes : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {2, 2}}) {
            hilbert::SplittingDatum datum{p, sizes};
            int l = 1;
            for (int f : sizes) l = std::lcm(l, f);
            auto kappa = gf::build_field(p, l);
            ExponentLattice lattice(datum, kappa, 2, 2, rng);
            for (int t = 0; t < 8; ++t) {
                auto f = lattice.random_expansion(30, 5, rng);
                auto h = lattice.random_expansion(30, 5, rng);
                for (int s = 0; s < datum.g(); ++s) {
                    auto powered = f;
                    for (std::uint32_t k = 0; k < p; ++k) powered = xi_derivation(powered, s);
                    CHECK(powered == xi_derivation(f, datum.phi(s)));
                    CHECK(xi_derivation(f * h, s) == xi_derivation(f, s) * h + f * xi_derivation(h, s));
                }
                for (int gamma = 0; gamma < 2; ++gamma)
                    CHECK(katz_derivation(f * h, gamma) == katz_derivation(f, gamma) * h + f * katz_derivation(h, gamma));
            }
        }
}

TEST_CASE("katz derivation vanishes when every trace is divisible by p") {
    auto k = gf::build_field(5, 1);
    QExp f(k);
    for (std::int64_t j = 1; j <= 4; ++j) f.add_term(Exponent{{j}, {k.from_int(j)}, {5 * j, 0}}, k.from_int(j));
    CHECK(katz_derivation(f, 0).empty());
    CHECK(katz_derivation(f, 1).empty());
}
