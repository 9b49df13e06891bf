#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "shimfol/dieudonne.hpp"
#include "shimfol/eo.hpp"

using namespace shimfol;
using namespace shimfol::dieudonne;
using eo::Shuffle;

namespace {

const gf::FiniteField& gf2() {
    static const auto k = gf::build_field(2, 1);
    return k;
}

std::vector<std::vector<int>> signatures(int d, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(size, 0);
    while (true) {
        out.push_back(f);
        int k = size - 1;
        while (k >= 0 && f[k] == d) f[k--] = 0;
        if (k < 0) return out;
        ++f[k];
    }
}

/// Every tuple (w_0, ..., w_{n-1}) with w_i in Pi_{f(i), d-f(i)}.
std::vector<std::vector<Shuffle>> shuffle_tuples(int d, const std::vector<int>& f) {
    std::vector<std::vector<Shuffle>> out{{}};
    for (int fi : f) {
        std::vector<std::vector<Shuffle>> next;
        for (const auto& t : out)
            for (const auto& w : eo::enumerate_shuffles(fi, d)) {
                auto u = t;
                u.push_back(w);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

int rank_of(const SemilinearMap& m) { return gf::rank(m.matrix); }

gf::Vector unit(const gf::FiniteField& k, int d, int j) {
    gf::Vector v(d, k.zero());
    v[j - 1] = k.one();
    return v;
}

}  // namespace

TEST_CASE("standard module: multiplicative and etale components") {
    const OrbitDatum orbit{OrbitKind::Split, 2};
    auto mult = build_standard(gf2(), {1, {1, 1}}, orbit);
    for (int i = 0; i < 2; ++i) {
        CHECK(mult.F[i].is_zero());
        CHECK(mult.V[i] == gf::Matrix::identity(gf2(), 1));
    }
    auto etale = build_standard(gf2(), {1, {0, 0}}, orbit);
    for (int i = 0; i < 2; ++i) {
        CHECK(etale.V[i].is_zero());
        CHECK(etale.F[i] == gf::Matrix::identity(gf2(), 1));
    }
}

TEST_CASE("standard module: cotangent spaces") {
    const OrbitDatum orbit{OrbitKind::Inert, 2};
    auto n = build_standard(gf2(), {3, {2, 1}}, orbit);
    CHECK(cotangent_component(n, 0).size() == 2);
    CHECK(cotangent_component(n, 1).size() == 1);
    // Spanned by e_{i,j} with j > d - f(i).
    auto basis = cotangent_component(n, 0);
    auto span = gf::Matrix::from_columns(gf2(), 3, basis);
    auto with_e23 = basis;
    with_e23.push_back(unit(gf2(), 3, 2));
    with_e23.push_back(unit(gf2(), 3, 3));
    CHECK(gf::rank(gf::Matrix::from_columns(gf2(), 3, with_e23)) == gf::rank(span));
    auto zero = build_standard(gf2(), {3, {0, 3}}, OrbitDatum{OrbitKind::Inert, 2});
    CHECK(cotangent_component(zero, 0).empty());
}

TEST_CASE("standard module: V on the cotangent space") {
    auto n = build_standard(gf2(), {3, {2, 1}}, OrbitDatum{OrbitKind::Inert, 2});
    CHECK(dim_ker_V_on_cotangent(n, 0) == 1);
    CHECK(dim_ker_V_on_cotangent(n, 1) == 0);
}

TEST_CASE("standard module: ker V on cotangent is max(0, f(i) - f(i-1)) exhaustively") {
    for (int d = 1; d <= 6; ++d)
        for (int size = 1; size <= 3; ++size)
            for (const auto& f : signatures(d, size)) {
                const OrbitDatum orbit{OrbitKind::Split, size};
                auto n = build_standard(gf2(), {d, f}, orbit);
                for (int i = 0; i < size; ++i) {
                    CAPTURE(d);
                    CAPTURE(i);
                    CHECK(dim_ker_V_on_cotangent(n, i) == std::max(0, f[i] - f[orbit.prev(i)]));
                }
            }
}

TEST_CASE("shuffle module: identity shuffles") {
    const OrbitDatum orbit{OrbitKind::Split, 2};
    auto n = build_from_shuffle(gf2(), {2, {1, 1}}, orbit, {Shuffle::identity(1, 2), Shuffle::identity(1, 2)});
    CHECK(dim_ker_V_on_cotangent(n, 0) == 1);
    for (int d = 1; d <= 5; ++d)
        for (const auto& f : signatures(d, 3)) {
            std::vector<Shuffle> w;
            for (int fi : f) w.push_back(Shuffle::identity(fi, d));
            auto m = build_from_shuffle(gf2(), {d, f}, OrbitDatum{OrbitKind::Split, 3}, w);
            for (int i = 0; i < 3; ++i) CHECK(dim_ker_V_on_cotangent(m, i) == std::min(f[i], d - f[(i + 2) % 3]));
        }
}

TEST_CASE("shuffle module: U(2,1) foliation label") {
    const OrbitDatum orbit{OrbitKind::Inert, 2};
    Shuffle w0(2, {1, 3, 2});
    auto n = build_from_shuffle(gf2(), {3, {2, 1}}, orbit, {w0, eo::check_involution(w0)});
    CHECK(dim_ker_V_on_cotangent(n, 0) == 1);
}

TEST_CASE("shuffle module: cotangent space is spanned by e_j with w(j) <= f(i)") {
    const OrbitDatum orbit{OrbitKind::Split, 2};
    for (const auto& w : shuffle_tuples(4, {2, 1})) {
        auto n = build_from_shuffle(gf2(), {4, {2, 1}}, orbit, w);
        for (int i = 0; i < 2; ++i) {
            auto basis = cotangent_component(n, i);
            CHECK(static_cast<int>(basis.size()) == w[i].first_block());
            for (int j = 1; j <= 4; ++j) {
                if (w[i](j) > w[i].first_block()) continue;
                auto cols = basis;
                cols.push_back(unit(gf2(), 4, j));
                CHECK(gf::rank(gf::Matrix::from_columns(gf2(), 4, cols)) == static_cast<int>(basis.size()));
            }
        }
    }
}

TEST_CASE("shuffle module for w^ord has the word ranks of the standard module") {
    const std::vector<std::string> words{"F", "V", "FF", "FV", "VF", "VV"};
    for (int d = 1; d <= 5; ++d)
        for (int size = 1; size <= 3; ++size)
            for (const auto& f : signatures(d, size)) {
                const OrbitDatum orbit{OrbitKind::Split, size};
                std::vector<Shuffle> w;
                for (int fi : f) w.push_back(eo::ordinary_shuffle(fi, d - fi));
                auto std_mod = build_standard(gf2(), {d, f}, orbit);
                auto ord_mod = build_from_shuffle(gf2(), {d, f}, orbit, w);
                for (const auto& word : words)
                    for (int i = 0; i < size; ++i)
                        CHECK(rank_of(compose_word(std_mod, word, i)) == rank_of(compose_word(ord_mod, word, i)));
            }
}

TEST_CASE("shuffle module rejects wrong block sizes") {
    const OrbitDatum orbit{OrbitKind::Split, 2};
    CHECK_THROWS_AS(build_from_shuffle(gf2(), {3, {2, 1}}, orbit, {Shuffle::identity(1, 3), Shuffle::identity(1, 3)}),
                    InputError);
    CHECK_THROWS_AS(build_standard(gf2(), {3, {4, 1}}, orbit), InputError);
    CHECK_THROWS_AS(compose_word(build_standard(gf2(), {3, {2, 1}}, orbit), "FX", 0), InputError);
}

TEST_CASE("F and V compose to zero and cotangent dims match f on every label") {
    for (int d = 1; d <= 5; ++d)
        for (int size = 1; size <= 3; ++size)
            for (const auto& f : signatures(d, size)) {
                const OrbitDatum orbit{OrbitKind::Split, size};
                CHECK(fv_vanish(build_standard(gf2(), {d, f}, orbit)));
                for (const auto& w : shuffle_tuples(d, f)) {
                    auto n = build_from_shuffle(gf2(), {d, f}, orbit, w);
                    CHECK(fv_vanish(n));
                    for (int i = 0; i < size; ++i) CHECK(static_cast<int>(cotangent_component(n, i).size()) == f[i]);
                }
            }
}

TEST_CASE("kernel dimensions agree with the GF(2) oracle, also over GF(4)") {
    const auto gf4 = gf::build_field(2, 2);
    for (int d = 1; d <= 4; ++d)
        for (int size = 1; size <= 3; ++size)
            for (const auto& f : signatures(d, size))
                for (const auto& w : shuffle_tuples(d, f)) {
                    std::vector<oracle::Perm> imgs;
                    for (const auto& s : w) imgs.push_back(s.image());
                    auto ref = oracle::shuffle_module(d, f, imgs);
                    const OrbitDatum orbit{OrbitKind::Split, size};
                    auto n2 = build_from_shuffle(gf2(), {d, f}, orbit, w);
                    auto n4 = build_from_shuffle(gf4, {d, f}, orbit, w);
                    for (int i = 0; i < size; ++i) {
                        CHECK(dim_ker_V_on_cotangent(n2, i) == oracle::ker_V_on_ker_F(ref, i));
                        CHECK(dim_ker_V_on_cotangent(n4, i) == oracle::ker_V_on_ker_F(ref, i));
                        CHECK(oracle::ker_F(ref, i) == f[i]);
                    }
                }
}

TEST_CASE("slope decomposition examples") {
    auto a = slope_decomposition({2, {1, 2}}, OrbitDatum{OrbitKind::Split, 2});
    REQUIRE(a.parts.size() == 2);
    CHECK(a.parts[0].slope == boost::rational<int>(1, 2));
    CHECK(a.parts[0].multiplicity == 1);
    CHECK(a.parts[0].g == std::vector<int>{0, 1});
    CHECK(a.parts[1].slope == boost::rational<int>(1));
    CHECK(a.parts[1].g == std::vector<int>{1, 1});

    auto b = slope_decomposition({3, {1, 2}}, OrbitDatum{OrbitKind::Split, 2});
    REQUIRE(b.parts.size() == 3);
    CHECK(b.parts[0].slope == boost::rational<int>(0));
    CHECK(b.parts[1].slope == boost::rational<int>(1, 2));
    CHECK(b.parts[2].slope == boost::rational<int>(1));
    for (const auto& part : b.parts) CHECK(part.multiplicity == 1);
    CHECK(b.parts[0].g == std::vector<int>{0, 0});
    CHECK(b.parts[1].g == std::vector<int>{0, 1});
    CHECK(b.parts[2].g == std::vector<int>{1, 1});

    auto c = slope_decomposition({4, {0, 0, 0}}, OrbitDatum{OrbitKind::Split, 3});
    REQUIRE(c.parts.size() == 1);
    CHECK(c.parts[0].slope == boost::rational<int>(0));
    CHECK(c.parts[0].multiplicity == 4);
}

TEST_CASE("slope decomposition against the per-j slope oracle") {
    for (int d = 1; d <= 6; ++d)
        for (int size = 1; size <= 4; ++size)
            for (const auto& f : signatures(d, size)) {
                auto prof = slope_decomposition({d, f}, OrbitDatum{OrbitKind::Split, size});
                // Expand the profile back into one slope per j and compare.
                std::vector<boost::rational<int>> expanded;
                for (const auto& part : prof.parts)
                    for (int k = 0; k < part.multiplicity; ++k) expanded.push_back(part.slope);
                REQUIRE(static_cast<int>(expanded.size()) == d);
                for (int j = 1; j <= d; ++j) {
                    int count = 0;
                    for (int i = 0; i < size; ++i) count += j > d - f[i];
                    CHECK(expanded[j - 1] == boost::rational<int>(count, size));
                }
                for (std::size_t nu = 1; nu < prof.parts.size(); ++nu) CHECK(prof.parts[nu - 1].slope < prof.parts[nu].slope);
            }
}

TEST_CASE("duality check examples") {
    CHECK(duality_check(3, {2, 1}, 1).pass);
    CHECK(duality_check(2, {1, 1}, 1).pass);
    auto bad = duality_check(2, {2, 1}, 1);
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail.find("!= d=2") != std::string::npos);
    CHECK(duality_check(4, {3, 0, 1, 4}, 2).pass);
    CHECK_FALSE(duality_check(3, {2, 1, 0}, 1).pass);
}
