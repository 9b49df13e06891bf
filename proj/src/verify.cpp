#include "shimfol/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <numeric>
#include <random>
#include <sstream>

#include "shimfol/dieudonne.hpp"
#include "shimfol/foliation.hpp"
#include "shimfol/hilbert.hpp"
#include "shimfol/qexp.hpp"
#include "shimfol/tensor.hpp"

namespace shimfol::verify {

namespace {

class Timer {
public:
    explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    SuiteResult& r_;
    std::chrono::steady_clock::time_point start_;
};

void fail(SuiteResult& r, const std::string& why) {
    if (r.pass) r.counterexample = why;
    r.pass = false;
}

/// Every f : {0..size-1} -> [0, d], odometer order.
std::vector<std::vector<int>> all_signatures(int d, int size) {
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

/// Partitions of g into positive parts, nonincreasing.
void partitions(int g, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (g == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(g, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions(g - part, part, cur, out);
        cur.pop_back();
    }
}

std::string label_with(const CMTypeDatum& datum, const eo::EOLabel& label) {
    return describe(datum) + " label=" + eo::to_string(label);
}

}  // namespace

std::vector<CMTypeDatum> unitary_cases(int max_d, int orbit_max) {
    std::vector<CMTypeDatum> out;
    for (int d = 1; d <= max_d; ++d) {
        for (int size = 1; size <= orbit_max; ++size) {
            for (const auto& f : all_signatures(d, size)) {
                out.push_back({d, {{{OrbitKind::Split, size}, f}}});
            }
            if (size % 2 == 0) {
                const int m = size / 2;
                for (const auto& f : all_signatures(d, size)) {
                    bool ok = true;
                    for (int i = 0; i < m; ++i) ok = ok && f[i] + f[i + m] == d;
                    if (ok) out.push_back({d, {{{OrbitKind::Inert, size}, f}}});
                }
            }
        }
    }
    return out;
}

std::vector<eo::PairSet> all_sigmas(const CMTypeDatum& datum) {
    auto pairs = all_pairs(datum);
    std::vector<eo::PairSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        eo::PairSet s;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) s.push_back(pairs[k]);
        out.push_back(std::move(s));
    }
    return out;
}

std::string describe(const CMTypeDatum& datum) {
    std::ostringstream os;
    os << "d=" << datum.d;
    for (const auto& o : datum.orbits) {
        os << " " << to_string(o.orbit.kind) << o.orbit.size << " f=(";
        for (std::size_t i = 0; i < o.f.size(); ++i) os << (i ? "," : "") << o.f[i];
        os << ")";
    }
    return os.str();
}

SuiteResult suite_u21(const Options&) {
    SuiteResult r;
    r.name = "u21_inert";
    Timer t(r);
    CMTypeDatum datum{3, {{{OrbitKind::Inert, 2}, {2, 1}}}};
    const eo::PairSet sigma{{0, 0}};
    auto scan = eo::scan_strata(datum, sigma);
    r.cases = scan.rows.size();
    if (scan.rows.size() != 3) fail(r, "expected 3 labels, got " + std::to_string(scan.rows.size()));
    std::vector<int> dims, rv, member_dims;
    int zero_dim_fiber = -1;
    for (const auto& row : scan.rows) {
        dims.push_back(row.dim);
        rv.push_back(row.r_V.at(0));
        if (row.in_sigma) member_dims.push_back(row.dim);
        if (row.dim == 0) zero_dim_fiber = foliation::blowup_fiber_dim(datum, row.label, sigma);
    }
    std::sort(dims.begin(), dims.end());
    std::sort(rv.begin(), rv.end());
    std::sort(member_dims.begin(), member_dims.end());
    if (dims != std::vector<int>{0, 1, 2}) fail(r, "dims differ from {0,1,2}");
    if (rv != std::vector<int>{1, 1, 2}) fail(r, "r_V values differ from {1,1,2}");
    if (member_dims != std::vector<int>{1, 2}) fail(r, "M_Sigma dims differ from {1,2}");
    auto rep = foliation::foliation_report(datum, sigma);
    if (rep.rank != 1) fail(r, "rank " + std::to_string(rep.rank) + " != 1");
    if (rep.dim_M_fol != 1) fail(r, "dim M_fol " + std::to_string(rep.dim_M_fol) + " != 1");
    if (zero_dim_fiber != 1) fail(r, "blow-up fiber over the 0-dimensional stratum is " + std::to_string(zero_dim_fiber));
    return r;
}

SuiteResult suite_formula_vs_kernel(const Options& opt) {
    SuiteResult r;
    r.name = "formula_vs_kernel";
    Timer t(r);
    const auto field = gf::build_field(2, 1);
    for (const auto& datum : unitary_cases(opt.max_d, opt.orbit_max)) {
        const auto pairs = all_pairs(datum);
        for (const auto& label : eo::enumerate_labels(datum, opt.cap)) {
            const auto side = eo::module_for_label(field, datum, label, 0, false);
            std::optional<dieudonne::ModPDieudonneModule> mirror;
            if (datum.orbits[0].orbit.kind == OrbitKind::Split) mirror = eo::module_for_label(field, datum, label, 0, true);
            auto module_at = [&](const Embedding& e) -> const dieudonne::ModPDieudonneModule& {
                return e.mirror ? *mirror : side;
            };
            for (int i = 0; i < datum.orbits[0].orbit.size; ++i) {
                if (static_cast<int>(dieudonne::cotangent_component(side, i).size()) != datum.orbits[0].f[i])
                    fail(r, label_with(datum, label) + ": dim ker F at " + std::to_string(i) + " != f(i)");
            }
            if (!dieudonne::fv_vanish(side) || (mirror && !dieudonne::fv_vanish(*mirror)))
                fail(r, label_with(datum, label) + ": FV or VF nonzero");
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                ++r.cases;
                LocalPair lp = local_pair(datum, pairs[k]);
                const auto counts = eo::v_counts(lp, label.at_pair[k]);
                const int ka = dieudonne::dim_ker_V_on_cotangent(module_at(lp.rep), lp.rep.index);
                const int kb = dieudonne::dim_ker_V_on_cotangent(module_at(lp.conj), lp.conj.index);
                const int formula = opt.r_V_formula ? opt.r_V_formula(datum, label, pairs[k])
                                                    : eo::r_V_at(datum, label, pairs[k]);
                const int expected = ka * (datum.d - lp.r) + lp.r * kb - ka * kb;
                std::ostringstream why;
                if (counts.a != ka) why << "a=" << counts.a << " but kernel gives " << ka;
                else if (counts.b != kb) why << "b=" << counts.b << " but kernel gives " << kb;
                else if (formula != expected) why << "r_V=" << formula << " but kernel gives " << expected;
                if (!why.str().empty())
                    fail(r, label_with(datum, label) + " pair " + std::to_string(pairs[k].index) + ": " + why.str());
            }
            if (!r.pass) return r;
        }
    }
    return r;
}

SuiteResult suite_minimal_stratum(const Options& opt) {
    SuiteResult r;
    r.name = "minimal_stratum";
    Timer t(r);
    for (const auto& datum : unitary_cases(opt.max_d, opt.orbit_max)) {
        for (const auto& sigma : all_sigmas(datum)) {
            ++r.cases;
            auto scan = eo::scan_strata(datum, sigma, opt.cap);
            std::ostringstream tag;
            tag << describe(datum) << " |Sigma|=" << sigma.size();
            if (!scan.minimum_is_fol) fail(r, tag.str() + ": minimal member of M_Sigma is not unique or not w^fol");
            if (!scan.members_dominate_fol) fail(r, tag.str() + ": a member of M_Sigma does not dominate w^fol");
            if (!r.pass) return r;
        }
    }
    return r;
}

SuiteResult suite_slope_duality(const Options& opt) {
    SuiteResult r;
    r.name = "slope_duality";
    Timer t(r);
    for (int d = 1; d <= opt.slope_max_d; ++d) {
        for (int size = 1; size <= opt.slope_orbit_max; ++size) {
            for (const auto& f : all_signatures(d, size)) {
                ++r.cases;
                OrbitDatum orbit{OrbitKind::Split, size};
                SignatureFn sig{d, f};
                auto prof = dieudonne::slope_decomposition(sig, orbit);
                std::ostringstream tag;
                tag << describe({d, {{orbit, f}}});
                int total = 0;
                for (std::size_t nu = 0; nu < prof.parts.size(); ++nu) {
                    total += prof.parts[nu].multiplicity;
                    if (nu > 0) {
                        if (!(prof.parts[nu - 1].slope < prof.parts[nu].slope)) fail(r, tag.str() + ": slopes not increasing");
                        for (int i = 0; i < size; ++i)
                            if (prof.parts[nu].g[i] < prof.parts[nu - 1].g[i]) fail(r, tag.str() + ": g not monotone");
                    }
                }
                if (total != d) fail(r, tag.str() + ": multiplicities do not sum to d");
                for (int i = 0; i < size; ++i) {
                    int s = 0;
                    for (const auto& part : prof.parts) s += part.multiplicity * part.g[i];
                    if (s != f[i]) fail(r, tag.str() + ": f(i) != sum d_nu g_nu(i) at i=" + std::to_string(i));
                }
                if (size % 2 == 0) {
                    const int m = size / 2;
                    bool dual = true;
                    for (int i = 0; i < m; ++i) dual = dual && f[i] + f[i + m] == d;
                    if (dual) {
                        auto rep = dieudonne::duality_check(d, f, m);
                        if (!rep.pass) fail(r, tag.str() + ": duality " + rep.detail);
                    }
                }
                if (!r.pass) return r;
            }
        }
    }
    return r;
}

SuiteResult suite_cascade(const Options& opt) {
    SuiteResult r;
    r.name = "cascade";
    Timer t(r);
    for (int d = 1; d <= opt.cascade_max_d; ++d) {
        for (int size = 1; size <= opt.cascade_orbit_max; ++size) {
            for (const auto& f : all_signatures(d, size)) {
                OrbitDatum orbit{OrbitKind::Split, size};
                SignatureFn sig{d, f};
                for (int i = 0; i < size; ++i) {
                    if (f[orbit.prev(i)] > f[i]) continue;
                    ++r.cases;
                    auto c = foliation::cascade_identity_check(sig, orbit, i);
                    if (!c.pass) {
                        fail(r, describe({d, {{orbit, f}}}) + " i=" + std::to_string(i) + ": " + c.detail);
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

SuiteResult suite_hilbert_dichotomies(const Options&) {
    SuiteResult r;
    r.name = "hilbert_dichotomies";
    Timer t(r);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int f = 1; f <= 4; ++f) {
            hilbert::SplittingDatum datum{p, {f}};
            std::ostringstream tag;
            tag << "p=" << p << " f=" << f;
            auto ledger = hilbert::hasse_weights(datum);
            if (!ledger.consistent) fail(r, tag.str() + ": obstruction weight != 2 x Hasse weight at phi sigma");
            for (int s = 0; s < f; ++s) {
                ++r.cases;
                if (hilbert::is_p_closed(datum, {s}) != (f == 1))
                    fail(r, tag.str() + ": p-closedness of {" + std::to_string(s) + "} disagrees with orbit size");
                for (int tau = 0; tau < f; ++tau) {
                    if (tau == s) continue;
                    ++r.cases;
                    auto k = hilbert::obstruction_weight(datum, s, tau);
                    auto w = hilbert::weight_feasibility(datum, k);
                    const bool expect = tau == datum.phi(s);
                    if (w.has_value() != expect)
                        fail(r, tag.str() + ": feasibility of " + hilbert::weight_to_string(k) + " is " +
                                    (w ? "true" : "false"));
                    else if (w && std::any_of(w->residue.begin(), w->residue.end(), [](auto v) { return v != 0; }))
                        fail(r, tag.str() + ": residue of " + hilbert::weight_to_string(k) + " is " +
                                    hilbert::weight_to_string(w->residue));
                }
            }
            if (!r.pass) return r;
        }
    }
    return r;
}

SuiteResult suite_cone_chain(const Options& opt) {
    SuiteResult r;
    r.name = "cone_chain";
    Timer t(r);
    std::mt19937_64 rng(opt.seed);
    for (int g = 1; g <= 4; ++g) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(g, g, cur, parts);
        for (const auto& sizes : parts) {
            for (std::uint32_t p : {2u, 3u, 5u}) {
                hilbert::SplittingDatum datum{p, sizes};
                // Half the samples are drawn from a box around 0, half from the positive orthant,
                // so that all three cones are actually populated.
                std::uniform_int_distribution<std::int64_t> any(-10, 10), pos(0, 12);
                for (int n = 0; n < opt.random_weights; ++n) {
                    ++r.cases;
                    hilbert::Weight k(g);
                    for (auto& v : k) v = n % 2 ? pos(rng) : any(rng);
                    const bool in_min = hilbert::cone_membership(datum, k, hilbert::Cone::Min);
                    const bool in_std = hilbert::cone_membership(datum, k, hilbert::Cone::Std);
                    const bool in_hasse = hilbert::cone_membership(datum, k, hilbert::Cone::Hasse);
                    if ((in_min && !in_std) || (in_std && !in_hasse)) {
                        std::ostringstream why;
                        why << "p=" << p << " g=" << g << " k=" << hilbert::weight_to_string(k) << ": min=" << in_min
                            << " std=" << in_std << " hasse=" << in_hasse;
                        fail(r, why.str());
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

SuiteResult suite_operator_identities(const Options& opt) {
    SuiteResult r;
    r.name = "operator_identities";
    Timer t(r);
    std::mt19937_64 rng(opt.seed);
    const std::vector<std::vector<int>> configs{{1}, {2}, {3}, {1, 2}, {2, 2}, {1, 3}, {6}, {2, 3}, {1, 2, 3}};
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (const auto& sizes : configs) {
            int l = 1;
            for (int f : sizes) l = std::lcm(l, f);
            hilbert::SplittingDatum datum{p, sizes};
            const auto kappa = gf::build_field(p, l);
            qexp::ExponentLattice lattice(datum, kappa, 2, 2, rng);
            const int per_config = std::max(1, opt.random_expansions / static_cast<int>(configs.size()));
            for (int n = 0; n < per_config; ++n) {
                auto f = lattice.random_expansion(opt.max_terms, 6, rng);
                auto h = lattice.random_expansion(opt.max_terms, 6, rng);
                for (int s = 0; s < datum.g(); ++s) {
                    ++r.cases;
                    auto powered = f;
                    for (std::uint32_t k = 0; k < p; ++k) powered = qexp::xi_derivation(powered, s);
                    if (!(powered == qexp::xi_derivation(f, datum.phi(s))))
                        fail(r, "p=" + std::to_string(p) + ": xi_sigma^p != xi_{phi sigma} at sigma=" + std::to_string(s));
                    auto lhs = qexp::xi_derivation(f * h, s);
                    auto rhs = qexp::xi_derivation(f, s) * h + f * qexp::xi_derivation(h, s);
                    if (!(lhs == rhs)) fail(r, "Leibniz rule fails for xi_" + std::to_string(s));
                }
                for (int gamma = 0; gamma < 2; ++gamma) {
                    auto lhs = qexp::katz_derivation(f * h, gamma);
                    auto rhs = qexp::katz_derivation(f, gamma) * h + f * qexp::katz_derivation(h, gamma);
                    if (!(lhs == rhs)) fail(r, "Leibniz rule fails for D(gamma_" + std::to_string(gamma) + ")");
                }
                if (!r.pass) return r;
            }
        }
        for (int n = 1; n <= 6; ++n) {
            const auto kappa = gf::build_field(p, n);
            for (int f = 1; f <= n; ++f) {
                if (n % f) continue;
                ++r.cases;
                hilbert::SplittingDatum datum{p, {f}};
                for (const auto& c : hilbert::idempotent_frobenius_check(datum, kappa))
                    if (!c.pass())
                        fail(r, "idempotents fail for p=" + std::to_string(p) + " f=" + std::to_string(f) +
                                    " [kappa:F_p]=" + std::to_string(n));
            }
        }
        if (!r.pass) return r;
    }
    return r;
}

std::vector<SuiteResult> run_all(const Options& opt) {
    return {suite_u21(opt),           suite_formula_vs_kernel(opt),  suite_minimal_stratum(opt),
            suite_slope_duality(opt), suite_cascade(opt),            suite_hilbert_dichotomies(opt),
            suite_cone_chain(opt),    suite_operator_identities(opt)};
}

}  // namespace shimfol::verify
