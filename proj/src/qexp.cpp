#include "shimfol/qexp.hpp"

namespace shimfol::qexp {

Exponent Exponent::operator+(const Exponent& o) const {
    if (key.size() != o.key.size() || emb.size() != o.emb.size() || trace.size() != o.trace.size())
        throw InputError("exponents with different shapes");
    Exponent r = *this;
    for (std::size_t i = 0; i < key.size(); ++i) r.key[i] += o.key[i];
    for (std::size_t i = 0; i < emb.size(); ++i) r.emb[i] += o.emb[i];
    for (std::size_t i = 0; i < trace.size(); ++i) r.trace[i] += o.trace[i];
    return r;
}

bool Exponent::same_metadata(const Exponent& o) const { return emb == o.emb && trace == o.trace; }

void QExp::add_term(const Exponent& alpha, const gf::FieldElement& c) {
    if (!(c.field() == field_)) throw InputError("coefficient from another field");
    auto it = terms_.find(alpha.key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(alpha.key, Term{alpha, c});
        return;
    }
    if (!it->second.alpha.same_metadata(alpha)) throw InputError("exponent key reused with different metadata");
    it->second.coeff += c;
    if (it->second.coeff.is_zero()) terms_.erase(it);
}

gf::FieldElement QExp::coefficient(const std::vector<std::int64_t>& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? field_.zero() : it->second.coeff;
}

QExp QExp::operator+(const QExp& o) const {
    QExp r = *this;
    for (const auto& [key, t] : o.terms_) r.add_term(t.alpha, t.coeff);
    return r;
}

QExp QExp::operator*(const QExp& o) const {
    QExp r(field_);
    for (const auto& [k1, t1] : terms_)
        for (const auto& [k2, t2] : o.terms_) r.add_term(t1.alpha + t2.alpha, t1.coeff * t2.coeff);
    return r;
}

bool QExp::operator==(const QExp& o) const {
    if (!(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
    for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b) {
        if (a->first != b->first || !(a->second.coeff == b->second.coeff)) return false;
        if (!a->second.alpha.same_metadata(b->second.alpha)) return false;
    }
    return true;
}

QExp xi_derivation(const QExp& f, int sigma) {
    QExp r(f.field());
    for (const auto& [key, t] : f.terms()) {
        if (sigma < 0 || sigma >= static_cast<int>(t.alpha.emb.size()))
            throw InputError("exponent has no embedding value for sigma=" + std::to_string(sigma));
        r.add_term(t.alpha, t.coeff * t.alpha.emb[sigma]);
    }
    return r;
}

QExp katz_derivation(const QExp& f, int gamma) {
    QExp r(f.field());
    for (const auto& [key, t] : f.terms()) {
        if (gamma < 0 || gamma >= static_cast<int>(t.alpha.trace.size()))
            throw InputError("exponent has no trace value for gamma=" + std::to_string(gamma));
        r.add_term(t.alpha, t.coeff * f.field().from_int(t.alpha.trace[gamma]));
    }
    return r;
}

ExponentLattice::ExponentLattice(const hilbert::SplittingDatum& datum, gf::FiniteField kappa, int rank, int traces,
                                 std::mt19937_64& rng)
    : datum_(datum), kappa_(kappa) {
    hilbert::validate(datum_);
    if (kappa_.characteristic() != datum_.p) throw InputError("kappa has the wrong characteristic");
    for (int f : datum_.orbit_sizes)
        if (kappa_.degree() % f != 0) throw InputError("orbit size does not divide [kappa:F_p]");
    std::uniform_int_distribution<std::int64_t> small(-5, 5);
    const int g = datum_.g();
    for (int c = 0; c < rank; ++c) {
        std::vector<gf::FieldElement> emb(g);
        for (int orb = 0; orb < static_cast<int>(datum_.orbit_sizes.size()); ++orb) {
            const int f = datum_.orbit_sizes[orb];
            auto pool = gf::subfield_elements(kappa_, f);
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            gf::FieldElement x = pool[pick(rng)];
            const int s0 = datum_.orbit_start(orb);
            for (int j = 0; j < f; ++j) {
                emb[s0 + j] = x;
                x = gf::frobenius(x);
            }
        }
        emb_basis_.push_back(std::move(emb));
        std::vector<std::int64_t> tr(traces);
        for (auto& v : tr) v = small(rng);
        trace_basis_.push_back(std::move(tr));
    }
}

Exponent ExponentLattice::exponent(const std::vector<std::int64_t>& key) const {
    if (key.size() != emb_basis_.size()) throw InputError("key has the wrong rank");
    Exponent e;
    e.key = key;
    e.emb.assign(datum_.g(), kappa_.zero());
    e.trace.assign(trace_basis_.empty() ? 0 : trace_basis_[0].size(), 0);
    for (std::size_t c = 0; c < key.size(); ++c) {
        const gf::FieldElement kc = kappa_.from_int(key[c]);
        for (std::size_t s = 0; s < e.emb.size(); ++s) e.emb[s] += kc * emb_basis_[c][s];
        for (std::size_t j = 0; j < e.trace.size(); ++j) e.trace[j] += key[c] * trace_basis_[c][j];
    }
    return e;
}

QExp ExponentLattice::random_expansion(int max_terms, std::int64_t key_bound, std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<std::int64_t> coord(-key_bound, key_bound);
    const auto order = kappa_.order();
    std::uniform_int_distribution<std::uint64_t> coeff(1, *order - 1);
    QExp q(kappa_);
    const int n = count(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<std::int64_t> key(emb_basis_.size());
        for (auto& v : key) v = coord(rng);
        q.add_term(exponent(key), kappa_.from_index(coeff(rng)));
    }
    return q;
}

}  // namespace shimfol::qexp
