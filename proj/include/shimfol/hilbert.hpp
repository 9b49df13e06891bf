#pragma once

// Hilbert modular varieties at p: the embeddings B split into Frobenius
// orbits B_P, weights in Z[B], the three weight cones, partial Hasse and
// obstruction weights, and Goren-Oort bookkeeping.
//
// Embeddings are numbered 0..g-1 orbit after orbit; inside an orbit of
// size f starting at s, phi sends s+j to s+(j+1 mod f).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "shimfol/error.hpp"
#include "shimfol/gfpn.hpp"

namespace shimfol::hilbert {

struct SplittingDatum {
    std::uint32_t p = 2;
    std::vector<int> orbit_sizes;

    int g() const;
    int orbit_of(int sigma) const;
    int orbit_start(int orbit) const;
    int phi(int sigma) const;
    int phi_inv(int sigma) const;
};

/// Throws InputError unless p is prime and every orbit size is positive.
void validate(const SplittingDatum& datum);

using Weight = std::vector<std::int64_t>;
using SigmaSet = std::vector<int>;

std::string weight_to_string(const Weight& k);

/// phi(Sigma) = Sigma.
bool is_p_closed(const SplittingDatum& datum, const SigmaSet& sigma);

/// p[phi^-1 sigma] - [sigma].
Weight hasse_weight(const SplittingDatum& datum, int sigma);
/// 2p[sigma] - 2[tau], the weight of Hom(L_sigma^{-p}, L_tau^{-1})^{(x)2}.
Weight obstruction_weight(const SplittingDatum& datum, int sigma, int tau);

struct HasseLedger {
    std::vector<Weight> hasse;                    // per sigma
    std::vector<std::vector<Weight>> obstruction; // [sigma][tau]
    bool consistent = false;  // obstruction(sigma, phi sigma) == 2 hasse(phi sigma) for all sigma
};
HasseLedger hasse_weights(const SplittingDatum& datum);

enum class Cone { Min, Std, Hasse };
std::string to_string(Cone c);

/// The unique rational a with k = sum_sigma a_sigma (p[phi^-1 sigma] - [sigma]).
std::vector<boost::rational<std::int64_t>> hasse_coordinates(const SplittingDatum& datum, const Weight& k);

bool cone_membership(const SplittingDatum& datum, const Weight& k, Cone cone);

struct Feasibility {
    std::vector<std::int64_t> a;  // indexed by beta
    Weight residue;               // k - sum a_beta (p[beta] - [phi beta])
};

inline constexpr std::uint64_t kDefaultSearchCap = 50'000'000;

/// First a >= 0 in lexicographic order with k - sum a_beta (p[beta] - [phi beta])
/// in C^std, or nullopt. Throws CapExceeded if the search visits more than `cap` vectors.
std::optional<Feasibility> weight_feasibility(const SplittingDatum& datum, const Weight& k,
                                              std::uint64_t cap = kDefaultSearchCap);

struct GOReport {
    int dim = 0;            // g - |Sigma|
    int rank = 0;           // rank of F_{Sigma^c}, summed orbit by orbit
    bool equal = false;
    int quotient_degree_exponent = 0;          // deg = p^rank
    std::vector<int> theta_degree_exponents;   // per orbit: g - f
};

/// Throws InputError unless Sigma is phi-invariant.
GOReport go_stratum_report(const SplittingDatum& datum, const SigmaSet& sigma);

struct IdempotentOrbitCheck {
    int orbit = 0;
    int size = 0;
    bool complete = false;
    bool orthogonal = false;
    bool eigen = false;
    bool frobenius_permutes = false;
    bool pass() const { return complete && orthogonal && eigen && frobenius_permutes; }
};

/// For each orbit, the idempotents of GF(p^f) (x) kappa, checked for
/// completeness, orthogonality, the eigen-property and phi(e_i) = e_{i+1}.
/// Throws InputError unless every orbit size divides the degree of kappa.
std::vector<IdempotentOrbitCheck> idempotent_frobenius_check(const SplittingDatum& datum, const gf::FiniteField& kappa);

}  // namespace shimfol::hilbert
