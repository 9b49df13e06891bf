#include "shimfol/foliation.hpp"

#include <algorithm>
#include <sstream>

namespace shimfol::foliation {

int r_V_ord_pair(const CMTypeDatum& datum, PairRef pair) {
    LocalPair lp = local_pair(datum, pair);
    const int d = datum.d;
    return std::max(0, lp.r - lp.r_prev) * (d - lp.r) + lp.r * std::max(0, lp.r_prev - lp.r);
}

FoliationReport foliation_report(const CMTypeDatum& datum, const eo::PairSet& sigma) {
    validate(datum);
    eo::PairSet s = eo::normalize_pairs(datum, sigma);
    const int d = datum.d;
    FoliationReport rep;
    for (const auto& ref : all_pairs(datum)) {
        LocalPair lp = local_pair(datum, ref);
        rep.dim_M += lp.r * (d - lp.r);
        if (std::binary_search(s.begin(), s.end(), ref)) {
            const int mm = std::min(lp.r, lp.r_prev) * std::min(d - lp.r, d - lp.r_prev);
            rep.rank += mm;
            rep.dim_M_fol += eo::shuffle_length(eo::foliation_shuffle(d, lp.r, lp.r_prev));
            const int v = r_V_ord_pair(datum, ref);
            rep.corank += v;
            rep.r_V_ord.push_back({ref, v});
        } else {
            rep.rank += lp.r * (d - lp.r);
        }
    }
    return rep;
}

int blowup_fiber_dim(const CMTypeDatum& datum, const eo::EOLabel& label, const eo::PairSet& sigma) {
    eo::validate(datum, label);
    const auto pairs = all_pairs(datum);
    int total = 0;
    for (const auto& ref : eo::normalize_pairs(datum, sigma)) {
        LocalPair lp = local_pair(datum, ref);
        if (lp.r_prev > lp.r) throw InputError("blow-up fiber needs r_prev <= r at the representative");
        const auto pos = std::find(pairs.begin(), pairs.end(), ref) - pairs.begin();
        const int a = eo::v_counts(lp, label.at_pair[static_cast<std::size_t>(pos)]).a;
        total += (lp.r - lp.r_prev) * (a - lp.r + lp.r_prev);
    }
    return total;
}

std::pair<int, int> cascade_pq(const SignatureFn& sig, const dieudonne::SlopeProfile& profile, const OrbitDatum& orbit,
                               int i) {
    if (i < 0 || i >= orbit.size) throw InputError("cascade: index out of range");
    const int prev = orbit.prev(i);
    if (sig.at(prev) > sig.at(i))
        throw InputError("cascade: index " + std::to_string(i) + " is not normalised, f(i-1)=" +
                         std::to_string(sig.at(prev)) + " > f(i)=" + std::to_string(sig.at(i)));
    int p = 0, q = 0;
    for (const auto& part : profile.parts) {
        if (part.g[i] == 0) ++p;
        if (part.g[prev] == 0) ++q;
    }
    return {p, q};
}

int dim_ext_group(const dieudonne::SlopeProfile& profile, int a, int b) {
    const int r = static_cast<int>(profile.parts.size());
    if (a < 1 || b > r || a >= b) throw InputError("dim_ext_group: need 1 <= a < b <= number of slopes");
    const auto& pa = profile.parts[a - 1];
    const auto& pb = profile.parts[b - 1];
    int sum = 0;
    for (std::size_t i = 0; i < pa.g.size(); ++i) sum += pb.g[i] - pa.g[i];
    return pa.multiplicity * pb.multiplicity * sum;
}

CascadeCheck cascade_identity_check(const SignatureFn& sig, const OrbitDatum& orbit, int i) {
    auto profile = dieudonne::slope_decomposition(sig, orbit);
    auto [p, q] = cascade_pq(sig, profile, orbit, i);
    const int d = sig.d;
    const int r = sig.at(i);
    const int r_prev = sig.at(orbit.prev(i));

    CascadeCheck c;
    c.p = p;
    c.q = q;
    std::ostringstream why;
    const int slopes = static_cast<int>(profile.parts.size());
    for (int a = 1; a <= p; ++a) {
        for (int b = q + 1; b <= slopes; ++b) {
            const auto& pa = profile.parts[a - 1];
            const auto& pb = profile.parts[b - 1];
            if (pb.g[i] - pa.g[i] != 1 && why.str().empty())
                why << "g_" << b << "(" << i << ") - g_" << a << "(" << i << ") != 1";
            c.cascade_sum += pa.multiplicity * pb.multiplicity;
        }
    }
    c.expected = r_prev * (d - r);
    c.rank_E = std::min(r, r_prev) * std::min(d - r, d - r_prev);
    if (why.str().empty() && c.cascade_sum != c.expected)
        why << "cascade sum " << c.cascade_sum << " != r_prev (d - r) = " << c.expected;
    if (why.str().empty() && c.expected != c.rank_E)
        why << "r_prev (d - r) = " << c.expected << " != rk E = " << c.rank_E;
    c.detail = why.str().empty() ? "ok" : why.str();
    c.pass = why.str().empty();
    return c;
}

}  // namespace shimfol::foliation
