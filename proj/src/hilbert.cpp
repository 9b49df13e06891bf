#include "shimfol/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "shimfol/tensor.hpp"

namespace shimfol::hilbert {

using Rational = boost::rational<std::int64_t>;

int SplittingDatum::g() const { return std::accumulate(orbit_sizes.begin(), orbit_sizes.end(), 0); }

int SplittingDatum::orbit_of(int sigma) const {
    int start = 0;
    for (int k = 0; k < static_cast<int>(orbit_sizes.size()); ++k) {
        if (sigma < start + orbit_sizes[k]) return k;
        start += orbit_sizes[k];
    }
    throw InputError("embedding " + std::to_string(sigma) + " out of range");
}

int SplittingDatum::orbit_start(int orbit) const {
    int start = 0;
    for (int k = 0; k < orbit; ++k) start += orbit_sizes[k];
    return start;
}

int SplittingDatum::phi(int sigma) const {
    const int k = orbit_of(sigma);
    const int s = orbit_start(k);
    return s + (sigma - s + 1) % orbit_sizes[k];
}

int SplittingDatum::phi_inv(int sigma) const {
    const int k = orbit_of(sigma);
    const int s = orbit_start(k);
    const int f = orbit_sizes[k];
    return s + (sigma - s + f - 1) % f;
}

void validate(const SplittingDatum& datum) {
    if (!gf::is_prime(datum.p)) throw InputError("p=" + std::to_string(datum.p) + " is not prime");
    if (datum.orbit_sizes.empty()) throw InputError("splitting datum has no orbits");
    for (int f : datum.orbit_sizes)
        if (f < 1) throw InputError("orbit sizes must be positive");
}

namespace {

void check_weight(const SplittingDatum& datum, const Weight& k) {
    if (static_cast<int>(k.size()) != datum.g())
        throw InputError("weight has " + std::to_string(k.size()) + " entries, expected g=" + std::to_string(datum.g()));
}

void check_sigma(const SplittingDatum& datum, const SigmaSet& sigma) {
    for (int s : sigma)
        if (s < 0 || s >= datum.g()) throw InputError("embedding " + std::to_string(s) + " out of range");
}

}  // namespace

std::string weight_to_string(const Weight& k) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t s = 0; s < k.size(); ++s) {
        if (k[s] == 0) continue;
        std::int64_t c = k[s];
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1) os << mag;
        os << "[" << s << "]";
        first = false;
    }
    return first ? "0" : os.str();
}

bool is_p_closed(const SplittingDatum& datum, const SigmaSet& sigma) {
    check_sigma(datum, sigma);
    std::vector<bool> in(datum.g(), false);
    for (int s : sigma) in[s] = true;
    for (int s : sigma)
        if (!in[datum.phi(s)]) return false;
    return true;
}

Weight hasse_weight(const SplittingDatum& datum, int sigma) {
    Weight k(datum.g(), 0);
    k[datum.phi_inv(sigma)] += static_cast<std::int64_t>(datum.p);
    k[sigma] -= 1;
    return k;
}

Weight obstruction_weight(const SplittingDatum& datum, int sigma, int tau) {
    Weight k(datum.g(), 0);
    k[sigma] += 2 * static_cast<std::int64_t>(datum.p);
    k[tau] -= 2;
    return k;
}

HasseLedger hasse_weights(const SplittingDatum& datum) {
    validate(datum);
    const int g = datum.g();
    HasseLedger ledger;
    ledger.consistent = true;
    for (int s = 0; s < g; ++s) ledger.hasse.push_back(hasse_weight(datum, s));
    ledger.obstruction.assign(g, {});
    for (int s = 0; s < g; ++s)
        for (int t = 0; t < g; ++t) ledger.obstruction[s].push_back(obstruction_weight(datum, s, t));
    for (int s = 0; s < g; ++s) {
        Weight twice = ledger.hasse[datum.phi(s)];
        for (auto& v : twice) v *= 2;
        if (ledger.obstruction[s][datum.phi(s)] != twice) ledger.consistent = false;
    }
    return ledger;
}

std::string to_string(Cone c) {
    switch (c) {
        case Cone::Min: return "min";
        case Cone::Std: return "std";
        case Cone::Hasse: return "hasse";
    }
    return "?";
}

std::vector<Rational> hasse_coordinates(const SplittingDatum& datum, const Weight& k) {
    validate(datum);
    check_weight(datum, k);
    const int g = datum.g();
    // Column sigma holds the generator p[phi^-1 sigma] - [sigma].
    std::vector<std::vector<Rational>> a(g, std::vector<Rational>(g + 1, 0));
    for (int s = 0; s < g; ++s) {
        a[datum.phi_inv(s)][s] += static_cast<std::int64_t>(datum.p);
        a[s][s] -= 1;
    }
    for (int t = 0; t < g; ++t) a[t][g] = k[t];
    for (int col = 0; col < g; ++col) {
        int piv = col;
        while (piv < g && a[piv][col] == Rational(0)) ++piv;
        if (piv == g) throw std::logic_error("hasse generators are linearly dependent");
        std::swap(a[piv], a[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (auto& v : a[col]) v *= inv;
        for (int r = 0; r < g; ++r) {
            if (r == col || a[r][col] == Rational(0)) continue;
            const Rational m = a[r][col];
            for (int c = col; c <= g; ++c) a[r][c] -= m * a[col][c];
        }
    }
    std::vector<Rational> out(g);
    for (int s = 0; s < g; ++s) out[s] = a[s][g];
    return out;
}

bool cone_membership(const SplittingDatum& datum, const Weight& k, Cone cone) {
    validate(datum);
    check_weight(datum, k);
    const int g = datum.g();
    switch (cone) {
        case Cone::Std:
            return std::all_of(k.begin(), k.end(), [](std::int64_t v) { return v >= 0; });
        case Cone::Min:
            for (int s = 0; s < g; ++s)
                if (static_cast<std::int64_t>(datum.p) * k[s] < k[datum.phi_inv(s)]) return false;
            return true;
        case Cone::Hasse: {
            auto a = hasse_coordinates(datum, k);
            return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v >= Rational(0); });
        }
    }
    return false;
}

std::optional<Feasibility> weight_feasibility(const SplittingDatum& datum, const Weight& k, std::uint64_t cap) {
    validate(datum);
    check_weight(datum, k);
    const std::int64_t p = datum.p;
    Feasibility out;
    out.a.assign(datum.g(), 0);
    out.residue = k;
    std::uint64_t visited = 0;

    // Generators stay inside an orbit and C^std is coordinatewise, so orbits are independent.
    for (int orb = 0; orb < static_cast<int>(datum.orbit_sizes.size()); ++orb) {
        const int s0 = datum.orbit_start(orb);
        const int f = datum.orbit_sizes[orb];
        std::int64_t total = 0;
        for (int j = 0; j < f; ++j) total += k[s0 + j];
        if (total < 0) return std::nullopt;
        const std::int64_t bound = p == 1 ? 0 : total / (p - 1);

        std::vector<std::int64_t> a(f, 0);
        std::function<bool(int, std::int64_t)> search = [&](int pos, std::int64_t left) -> bool {
            if (pos == f) {
                if (++visited > cap) throw CapExceeded("weight feasibility search exceeded " + std::to_string(cap) + " vectors");
                for (int j = 0; j < f; ++j) {
                    // beta contributes +p at beta and -1 at phi beta.
                    const std::int64_t r = k[s0 + j] - p * a[j] + a[(j + f - 1) % f];
                    if (r < 0) return false;
                }
                return true;
            }
            for (std::int64_t v = 0; v <= left; ++v) {
                a[pos] = v;
                if (search(pos + 1, left - v)) return true;
            }
            a[pos] = 0;
            return false;
        };
        if (!search(0, bound)) return std::nullopt;
        for (int j = 0; j < f; ++j) {
            out.a[s0 + j] = a[j];
            out.residue[s0 + j] = k[s0 + j] - p * a[j] + a[(j + f - 1) % f];
        }
    }
    return out;
}

GOReport go_stratum_report(const SplittingDatum& datum, const SigmaSet& sigma) {
    validate(datum);
    if (!is_p_closed(datum, sigma)) throw InputError("Goren-Oort stratum needs a phi-invariant Sigma");
    SigmaSet s = sigma;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const int g = datum.g();

    GOReport rep;
    rep.dim = g - static_cast<int>(s.size());
    // F_{Sigma^c} is the direct sum of the line bundles L_sigma^{-2} for sigma outside Sigma.
    for (int orb = 0; orb < static_cast<int>(datum.orbit_sizes.size()); ++orb) {
        const int s0 = datum.orbit_start(orb);
        for (int j = 0; j < datum.orbit_sizes[orb]; ++j)
            if (!std::binary_search(s.begin(), s.end(), s0 + j)) ++rep.rank;
        rep.theta_degree_exponents.push_back(g - datum.orbit_sizes[orb]);
    }
    rep.equal = rep.dim == rep.rank;
    rep.quotient_degree_exponent = rep.rank;
    return rep;
}

std::vector<IdempotentOrbitCheck> idempotent_frobenius_check(const SplittingDatum& datum, const gf::FiniteField& kappa) {
    validate(datum);
    if (kappa.characteristic() != datum.p) throw InputError("kappa has the wrong characteristic");
    std::vector<IdempotentOrbitCheck> out;
    for (int orb = 0; orb < static_cast<int>(datum.orbit_sizes.size()); ++orb) {
        const int f = datum.orbit_sizes[orb];
        if (kappa.degree() % f != 0)
            throw InputError("orbit size " + std::to_string(f) + " does not divide [kappa:F_p]=" +
                             std::to_string(kappa.degree()));
        auto ti = gf::tensor_idempotents(f, kappa);
        const auto& alg = ti.algebra;
        const auto& e = ti.idempotents;

        IdempotentOrbitCheck c;
        c.orbit = orb;
        c.size = f;
        auto sum = alg.zero();
        for (const auto& x : e) sum = alg.add(sum, x);
        c.complete = sum == alg.one();

        c.orthogonal = true;
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) {
                auto prod = alg.mul(e[i], e[j]);
                if (prod != (i == j ? e[i] : alg.zero())) c.orthogonal = false;
            }

        c.eigen = true;
        for (const auto& a : gf::subfield_basis(alg.small(), f)) {
            for (int i = 0; i < f; ++i) {
                auto lhs = alg.mul(alg.from_small(a), e[i]);
                auto rhs = alg.mul(alg.from_big(alg.embed(i, a)), e[i]);
                if (lhs != rhs) c.eigen = false;
            }
        }

        c.frobenius_permutes = true;
        for (int i = 0; i < f; ++i)
            if (alg.frobenius(e[i]) != e[(i + 1) % f]) c.frobenius_permutes = false;
        out.push_back(c);
    }
    return out;
}

}  // namespace shimfol::hilbert
