#pragma once

// Truncated q-expansions sum a_alpha q^alpha with coefficients in kappa.
//
// An exponent alpha is abstract: it is named by an integer key and carries
// its embedding vector (sigma(alpha))_sigma in kappa^g and, optionally, the
// integers Tr(alpha gamma_j). Both are additive in alpha, so products of
// expansions add keys, embedding vectors and traces.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "shimfol/gfpn.hpp"
#include "shimfol/hilbert.hpp"

namespace shimfol::qexp {

struct Exponent {
    std::vector<std::int64_t> key;
    std::vector<gf::FieldElement> emb;  // sigma(alpha), indexed by sigma
    std::vector<std::int64_t> trace;    // Tr(alpha gamma_j); may be empty

    Exponent operator+(const Exponent& o) const;
    bool same_metadata(const Exponent& o) const;
};

class QExp {
public:
    explicit QExp(gf::FiniteField field) : field_(field) {}

    const gf::FiniteField& field() const { return field_; }

    /// Adds c q^alpha; throws InputError if alpha's key is present with other metadata.
    void add_term(const Exponent& alpha, const gf::FieldElement& c);

    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    /// Coefficient of q^key, zero when absent.
    gf::FieldElement coefficient(const std::vector<std::int64_t>& key) const;

    struct Term {
        Exponent alpha;
        gf::FieldElement coeff;
    };
    const std::map<std::vector<std::int64_t>, Term>& terms() const { return terms_; }

    QExp operator+(const QExp& o) const;
    QExp operator*(const QExp& o) const;
    bool operator==(const QExp& o) const;

private:
    gf::FiniteField field_;
    std::map<std::vector<std::int64_t>, Term> terms_;  // no zero coefficients
};

/// xi_sigma: a_alpha -> sigma(alpha) a_alpha.
QExp xi_derivation(const QExp& f, int sigma);

/// D(gamma_j): a_alpha -> Tr(alpha gamma_j) a_alpha, the trace reduced into kappa.
QExp katz_derivation(const QExp& f, int gamma);

/// Random exponent generator compatible with Frobenius: keys in Z^rank,
/// embeddings linear in the key with emb[phi sigma] = emb[sigma]^p, traces linear in the key.
class ExponentLattice {
public:
    ExponentLattice(const hilbert::SplittingDatum& datum, gf::FiniteField kappa, int rank, int traces,
                    std::mt19937_64& rng);

    Exponent exponent(const std::vector<std::int64_t>& key) const;
    QExp random_expansion(int max_terms, std::int64_t key_bound, std::mt19937_64& rng) const;

private:
    hilbert::SplittingDatum datum_;
    gf::FiniteField kappa_;
    std::vector<std::vector<gf::FieldElement>> emb_basis_;    // [key coordinate][sigma]
    std::vector<std::vector<std::int64_t>> trace_basis_;      // [key coordinate][gamma]
};

}  // namespace shimfol::qexp
