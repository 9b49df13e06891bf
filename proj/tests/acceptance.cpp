// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "shimfol/eo.hpp"
#include "shimfol/foliation.hpp"
#include "shimfol/hilbert.hpp"
#include "shimfol/verify.hpp"

using namespace shimfol;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
    void absorb(const verify::SuiteResult& r) {
        require(r.pass, r.name + ": " + r.counterexample);
        if (pass) detail += (detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.cases) + " cases";
    }
};

std::vector<oracle::Perm> images(const std::vector<eo::Shuffle>& ws) {
    std::vector<oracle::Perm> out;
    for (const auto& w : ws) out.push_back(w.image());
    return out;
}

/// (a, b) per pair from the 0/1 oracle modules over GF(2).
std::vector<std::pair<int, int>> oracle_counts(const CMTypeDatum& datum, const eo::EOLabel& label) {
    const auto& os = datum.orbits[0];
    auto ex = eo::expand_label(datum, label, 0);
    auto side = oracle::shuffle_module(datum.d, os.f, images(ex.side));
    auto mirror = side;
    if (os.orbit.kind == OrbitKind::Split) {
        std::vector<int> g;
        for (int v : os.f) g.push_back(datum.d - v);
        mirror = oracle::shuffle_module(datum.d, g, images(ex.mirror));
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& ref : all_pairs(datum)) {
        auto lp = local_pair(datum, ref);
        auto k = [&](const Embedding& e) { return oracle::ker_V_on_ker_F(e.mirror ? mirror : side, e.index); };
        out.push_back({k(lp.rep), k(lp.conj)});
    }
    return out;
}

Outcome criterion1() {
    Outcome o;
    const CMTypeDatum u21{3, {{{OrbitKind::Inert, 2}, {2, 1}}}};
    const eo::PairSet sigma{{0, 0}};
    auto scan = eo::scan_strata(u21, sigma);
    o.require(scan.rows.size() == 3, "expected 3 labels");
    std::multiset<int> dims, rv, in_dims;
    int zero_dim = -1;
    for (std::size_t l = 0; l < scan.rows.size(); ++l) {
        const auto& row = scan.rows[l];
        dims.insert(row.dim);
        rv.insert(row.r_V.at(0));
        if (row.in_sigma) in_dims.insert(row.dim);
        if (row.dim == 0) zero_dim = static_cast<int>(l);
    }
    o.require(dims == std::multiset<int>{0, 1, 2}, "dims != {2,1,0}");
    o.require(rv == std::multiset<int>{1, 1, 2}, "r_V != {1,1,2}");
    o.require(in_dims == std::multiset<int>{1, 2}, "M_Sigma != {dim 2, dim 1}");
    auto rep = foliation::foliation_report(u21, sigma);
    o.require(rep.rank == 1, "rank != 1 = m^2");
    o.require(rep.dim_M_fol == 1, "dim M_fol != 1");
    o.require(zero_dim >= 0 && foliation::blowup_fiber_dim(u21, scan.rows[zero_dim].label, sigma) == 1,
              "blow-up fiber over the 0-dim label != 1");
    auto oc = oracle_counts(u21, scan.rows[zero_dim].label);
    o.require(oc[0].first == 2, "oracle a on the 0-dim label != 2");
    verify::Options opt;
    o.absorb(verify::suite_u21(opt));
    return o;
}

Outcome criterion2() {
    Outcome o;
    verify::Options opt;
    o.absorb(verify::suite_formula_vs_kernel(opt));
    std::uint64_t cases = 0;
    for (const auto& datum : verify::unitary_cases(opt.max_d, opt.orbit_max)) {
        const auto pairs = all_pairs(datum);
        for (const auto& label : eo::enumerate_labels(datum)) {
            auto oc = oracle_counts(datum, label);
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                ++cases;
                auto lp = local_pair(datum, pairs[k]);
                auto c = eo::v_counts(lp, label.at_pair[k]);
                const auto [a, b] = oc[k];
                const int rv = a * (datum.d - lp.r) + lp.r * b - a * b;
                o.require(c.a == a && c.b == b && eo::r_V_at(datum, label, pairs[k]) == rv,
                          "oracle mismatch at " + verify::describe(datum) + " " + eo::to_string(label));
            }
        }
    }
    if (o.pass) o.detail += ", oracle " + std::to_string(cases) + " pairs";
    return o;
}

Outcome criterion3() {
    Outcome o;
    verify::Options opt;
    o.absorb(verify::suite_minimal_stratum(opt));
    // Independent minimum by inversion count, and domination by the rank-matrix-free Bruhat closure.
    std::map<int, oracle::Bruhat> bruhat;
    for (int d = 1; d <= opt.max_d; ++d) bruhat.emplace(d, oracle::Bruhat(d));
    std::uint64_t cases = 0;
    for (const auto& datum : verify::unitary_cases(opt.max_d, opt.orbit_max)) {
        const auto labels = eo::enumerate_labels(datum);
        const auto pairs = all_pairs(datum);
        std::vector<std::vector<std::pair<int, int>>> counts;
        for (const auto& label : labels) counts.push_back(oracle_counts(datum, label));
        for (const auto& sigma : verify::all_sigmas(datum)) {
            ++cases;
            std::vector<std::size_t> members;
            for (std::size_t l = 0; l < labels.size(); ++l) {
                bool in = true;
                for (const auto& ref : sigma) {
                    const auto k = static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), ref) - pairs.begin());
                    auto lp = local_pair(datum, ref);
                    in = in && counts[l][k].first == lp.r - lp.r_prev;
                }
                if (in) members.push_back(l);
            }
            int best = -1, at_best = 0;
            std::size_t arg = 0;
            for (std::size_t l : members) {
                int dim = 0;
                for (const auto& w : labels[l].at_pair) dim += oracle::inversions(w.image());
                if (best < 0 || dim < best) {
                    best = dim;
                    at_best = 1;
                    arg = l;
                } else if (dim == best) {
                    ++at_best;
                }
            }
            const std::string tag = verify::describe(datum);
            o.require(at_best == 1, tag + ": minimum not unique");
            o.require(labels[arg] == eo::label_fol(datum, sigma), tag + ": minimum != label_fol");
            for (std::size_t l : members)
                for (std::size_t k = 0; k < pairs.size(); ++k)
                    o.require(bruhat.at(datum.d).leq(labels[arg].at_pair[k].image(), labels[l].at_pair[k].image()),
                              tag + ": member does not dominate label_fol");
        }
    }
    if (o.pass) o.detail += ", oracle " + std::to_string(cases) + " (datum, Sigma)";
    return o;
}

Outcome criterion4() {
    Outcome o;
    o.absorb(verify::suite_slope_duality(verify::Options{}));
    return o;
}

Outcome criterion5() {
    Outcome o;
    verify::Options opt;
    o.absorb(verify::suite_cascade(opt));
    // Basis-level count: (#{j : j <= d - f(i)}) * (#{j : j > d - f(i-1)}) must equal the slope-level sum.
    for (int d = 1; d <= opt.cascade_max_d; ++d)
        for (int size = 1; size <= opt.cascade_orbit_max; ++size) {
            std::vector<int> f(size, 0);
            while (true) {
                OrbitDatum orbit{OrbitKind::Split, size};
                for (int i = 0; i < size; ++i) {
                    if (f[orbit.prev(i)] > f[i]) continue;
                    auto c = foliation::cascade_identity_check({d, f}, orbit, i);
                    o.require(c.cascade_sum == (d - f[i]) * f[orbit.prev(i)], "oracle cascade sum mismatch");
                }
                int pos = size - 1;
                while (pos >= 0 && f[pos] == d) f[pos--] = 0;
                if (pos < 0) break;
                ++f[pos];
            }
        }
    return o;
}

Outcome criterion6() {
    Outcome o;
    o.absorb(verify::suite_hilbert_dichotomies(verify::Options{}));
    for (std::int64_t p : {2, 3, 5})
        for (int f = 1; f <= 4; ++f) {
            hilbert::SplittingDatum datum{static_cast<std::uint32_t>(p), {f}};
            for (int s = 0; s < f; ++s)
                for (int t = 0; t < f; ++t) {
                    if (s == t) continue;
                    auto k = hilbert::obstruction_weight(datum, s, t);
                    std::int64_t total = 0;
                    for (auto v : k) total += v;
                    auto ref = oracle::feasibility_box(p, k, std::max<std::int64_t>(0, total) / (p - 1));
                    o.require(ref.has_value() == (t == datum.phi(s)), "oracle feasibility disagrees with tau = phi sigma");
                }
        }
    return o;
}

Outcome criterion7() {
    Outcome o;
    o.absorb(verify::suite_cone_chain(verify::Options{}));
    return o;
}

Outcome criterion8() {
    Outcome o;
    o.absorb(verify::suite_operator_identities(verify::Options{}));
    return o;
}

struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
    double limit_seconds;  // 0: no limit
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "U(2,1) inert suite", criterion1, 1.0},
        {2, "formula vs kernel oracle", criterion2, 60.0},
        {3, "minimal stratum equals label_fol and is Bruhat-dominated", criterion3, 0.0},
        {4, "slope and duality invariants", criterion4, 0.0},
        {5, "cascade identity", criterion5, 0.0},
        {6, "Hilbert dichotomies", criterion6, 10.0},
        {7, "cone chain C^min in C^std in C^hasse", criterion7, 0.0},
        {8, "operator identities", criterion8, 0.0},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            std::ostringstream why;
            why << "runtime " << secs << " s over the " << c.limit_seconds << " s limit";
            o.require(false, why.str());
        }
        all = all && o.pass;
        std::printf("[%s] criterion %d: %s (%.3f s) %s\n", o.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                    o.detail.c_str());
    }
    return all ? 0 : 1;
}
