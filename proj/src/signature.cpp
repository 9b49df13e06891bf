#include "shimfol/signature.hpp"

namespace shimfol {

std::string to_string(OrbitKind kind) { return kind == OrbitKind::Inert ? "inert" : "split"; }

OrbitKind orbit_kind_from_string(const std::string& s) {
    if (s == "inert") return OrbitKind::Inert;
    if (s == "split") return OrbitKind::Split;
    throw InputError("orbit kind must be \"split\" or \"inert\", got \"" + s + "\"");
}

void validate(const SignatureFn& sig, const OrbitDatum& orbit) {
    if (sig.d < 0) throw InputError("rank d must be nonnegative");
    if (orbit.size < 1) throw InputError("orbit size must be positive");
    if (static_cast<int>(sig.f.size()) != orbit.size)
        throw InputError("signature has " + std::to_string(sig.f.size()) + " values for an orbit of size " +
                         std::to_string(orbit.size));
    for (int i = 0; i < orbit.size; ++i) {
        if (sig.at(i) < 0 || sig.at(i) > sig.d)
            throw InputError("signature value f(" + std::to_string(i) + ")=" + std::to_string(sig.at(i)) +
                             " outside [0," + std::to_string(sig.d) + "]");
    }
    if (orbit.kind == OrbitKind::Inert) {
        if (orbit.size % 2 != 0) throw InputError("inert orbit must have even size");
        const int m = orbit.half_shift();
        for (int i = 0; i < m; ++i) {
            if (sig.at(i) + sig.at(i + m) != sig.d)
                throw InputError("inert orbit requires f(i)+f(i+m)=d, violated at i=" + std::to_string(i));
        }
    }
}

void validate(const CMTypeDatum& datum) {
    if (datum.orbits.empty()) throw InputError("datum has no orbits");
    for (std::size_t k = 0; k < datum.orbits.size(); ++k) validate(datum.signature(static_cast<int>(k)), datum.orbits[k].orbit);
}

std::vector<PairRef> all_pairs(const CMTypeDatum& datum) {
    std::vector<PairRef> out;
    for (int k = 0; k < static_cast<int>(datum.orbits.size()); ++k)
        for (int j = 0; j < datum.orbits[k].orbit.pair_count(); ++j) out.push_back({k, j});
    return out;
}

PairRef canonical(const CMTypeDatum& datum, PairRef ref) {
    if (ref.orbit < 0 || ref.orbit >= static_cast<int>(datum.orbits.size()))
        throw InputError("pair reference: orbit " + std::to_string(ref.orbit) + " out of range");
    const OrbitDatum& o = datum.orbits[ref.orbit].orbit;
    if (ref.index < 0 || ref.index >= o.size)
        throw InputError("pair reference: index " + std::to_string(ref.index) + " out of range");
    if (o.kind == OrbitKind::Inert) ref.index %= o.half_shift();
    return ref;
}

int signature_at(const CMTypeDatum& datum, const Embedding& e) {
    int v = datum.orbits[e.orbit].f[e.index];
    return e.mirror ? datum.d - v : v;
}

LocalPair local_pair(const CMTypeDatum& datum, PairRef ref) {
    ref = canonical(datum, ref);
    const OrbitSignature& os = datum.orbits[ref.orbit];
    const OrbitDatum& o = os.orbit;
    const int j = ref.index;
    const bool normalized_here = os.f[o.prev(j)] <= os.f[j];

    LocalPair lp;
    lp.pair = ref;
    lp.d = datum.d;
    if (o.kind == OrbitKind::Inert) {
        const int m = o.half_shift();
        Embedding a{ref.orbit, j, false};
        Embedding b{ref.orbit, j + m, false};
        lp.rep = normalized_here ? a : b;
        lp.conj = normalized_here ? b : a;
    } else {
        Embedding a{ref.orbit, j, false};
        Embedding b{ref.orbit, j, true};
        lp.rep = normalized_here ? a : b;
        lp.conj = normalized_here ? b : a;
    }
    lp.r = signature_at(datum, lp.rep);
    Embedding prev = lp.rep;
    prev.index = o.prev(prev.index);
    lp.r_prev = signature_at(datum, prev);
    return lp;
}

int dim_shimura(const CMTypeDatum& datum) {
    int total = 0;
    for (const auto& ref : all_pairs(datum)) {
        LocalPair lp = local_pair(datum, ref);
        total += lp.r * (datum.d - lp.r);
    }
    return total;
}

}  // namespace shimfol
