#pragma once

// CM-type data for the unitary case: per prime above p, a Frobenius orbit
// of embeddings with a signature function f, and the pairing {tau, tau-bar}.
//
// Indices inside an orbit are 0..size-1, with i+1 standing for phi o tau.
// An inert orbit has even size 2m and tau-bar = tau + m. A split orbit is
// stored once; its mirror orbit carries the signature d - f and is never
// materialised.

#include <string>
#include <vector>

#include "shimfol/error.hpp"

namespace shimfol {

enum class OrbitKind { Split, Inert };

std::string to_string(OrbitKind kind);
OrbitKind orbit_kind_from_string(const std::string& s);

struct OrbitDatum {
    OrbitKind kind = OrbitKind::Split;
    int size = 1;

    int half_shift() const { return size / 2; }
    int pair_count() const { return kind == OrbitKind::Inert ? size / 2 : size; }
    int next(int i) const { return (i + 1) % size; }
    int prev(int i) const { return (i + size - 1) % size; }
};

struct SignatureFn {
    int d = 0;
    std::vector<int> f;

    int at(int i) const { return f[static_cast<std::size_t>(i)]; }
};

/// Throws InputError unless 0 <= f(i) <= d, the size matches and (inert) f(i) + f(i+m) = d.
void validate(const SignatureFn& sig, const OrbitDatum& orbit);

/// One prime above p: its orbit together with f on the P-side.
struct OrbitSignature {
    OrbitDatum orbit;
    std::vector<int> f;
};

struct CMTypeDatum {
    int d = 0;
    std::vector<OrbitSignature> orbits;

    SignatureFn signature(int orbit) const { return {d, orbits[static_cast<std::size_t>(orbit)].f}; }
};

void validate(const CMTypeDatum& datum);

/// A pair {tau, tau-bar}, named by an orbit and an index whose pair it is.
struct PairRef {
    int orbit = 0;
    int index = 0;
    auto operator<=>(const PairRef&) const = default;
};

/// An embedding: orbit, index, and (split orbits only) whether it lives on the mirror side.
struct Embedding {
    int orbit = 0;
    int index = 0;
    bool mirror = false;
    auto operator<=>(const Embedding&) const = default;
};

/// The pair data seen from the chosen representative tau:
/// r = r_tau, r_prev = r_{phi^-1 o tau}.
struct LocalPair {
    PairRef pair;
    Embedding rep;
    Embedding conj;
    int d = 0;
    int r = 0;
    int r_prev = 0;
};

/// All pairs of the datum in canonical order (orbit, then index 0..pair_count-1).
std::vector<PairRef> all_pairs(const CMTypeDatum& datum);

/// Canonical name of the pair containing `ref.index` (inert indices are reduced mod m).
PairRef canonical(const CMTypeDatum& datum, PairRef ref);

/// Signature r at an embedding.
int signature_at(const CMTypeDatum& datum, const Embedding& e);

/// Representative choice: the member tau of the pair with r_{phi^-1 tau} <= r_tau,
/// ties broken by the smaller orbit index (P-side first for split pairs).
LocalPair local_pair(const CMTypeDatum& datum, PairRef ref);

/// Sum over all pairs of r_tau * r_tau-bar.
int dim_shimura(const CMTypeDatum& datum);

}  // namespace shimfol
