#pragma once

// Ekedahl-Oort labels for a unitary CM-type datum and the V-kernel
// invariants that decide membership in M_Sigma.
//
// A label stores one shuffle per pair {tau, tau-bar}, at the representative
// tau chosen by local_pair(); the partner carries the check involution.

#include <cstdint>
#include <vector>

#include "shimfol/dieudonne.hpp"
#include "shimfol/shuffle.hpp"
#include "shimfol/signature.hpp"

namespace shimfol::eo {

inline constexpr std::uint64_t kDefaultLabelCap = 1'000'000;

struct EOLabel {
    std::vector<Shuffle> at_pair;  // parallel to all_pairs(datum)

    auto operator<=>(const EOLabel&) const = default;
    bool operator==(const EOLabel&) const = default;
};

using PairSet = std::vector<PairRef>;

/// Canonicalises, sorts and deduplicates pair references; throws on bad references.
PairSet normalize_pairs(const CMTypeDatum& datum, const PairSet& sigma);

EOLabel label_ord(const CMTypeDatum& datum);
EOLabel label_identity(const CMTypeDatum& datum);
/// w^fol at the pairs of sigma, identity elsewhere.
EOLabel label_fol(const CMTypeDatum& datum, const PairSet& sigma);

/// Throws InputError unless each shuffle lies in Pi_{r_tau, d - r_tau} at its representative.
void validate(const CMTypeDatum& datum, const EOLabel& label);

/// Sum over pairs of the shuffle lengths.
int dim_stratum(const EOLabel& label);

/// a = dim P_tau[V] and b = dim P_tau-bar[V] read off the shuffle at tau:
/// a = #{j <= d - r_prev : w(j) <= r},  b = #{j >= d - r_prev + 1 : w(j) >= r + 1}.
struct VCounts {
    int a = 0;
    int b = 0;
};
VCounts v_counts(const LocalPair& lp, const Shuffle& w);

/// r_V{tau, tau-bar} on the stratum: a * r_tau-bar + r_tau * b - a * b.
int r_V_at(const CMTypeDatum& datum, const EOLabel& label, PairRef pair);

/// The M_Sigma conditions: a = r - r_prev when r_prev <= r, b = r_prev - r otherwise.
bool in_M_sigma(const CMTypeDatum& datum, const EOLabel& label, const PairSet& sigma);

/// Number of labels, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> label_count(const CMTypeDatum& datum);

/// Every label in lexicographic order. Throws CapExceeded above `cap`.
std::vector<EOLabel> enumerate_labels(const CMTypeDatum& datum, std::uint64_t cap = kDefaultLabelCap);

/// Per-index shuffles on one orbit (and on its mirror for split orbits),
/// expanded from the representatives with the check involution.
struct ExpandedLabel {
    std::vector<Shuffle> side;
    std::vector<Shuffle> mirror;  // empty for inert orbits
};
ExpandedLabel expand_label(const CMTypeDatum& datum, const EOLabel& label, int orbit);

/// N_w on one orbit (or on its mirror when `mirror` is set).
dieudonne::ModPDieudonneModule module_for_label(const gf::FiniteField& field, const CMTypeDatum& datum,
                                                const EOLabel& label, int orbit, bool mirror);

struct StratumRow {
    EOLabel label;
    int dim = 0;
    std::vector<int> r_V;  // one value per pair of sigma
    bool in_sigma = false;
    bool bruhat_over_fol = false;  // each component Bruhat-dominates w^fol
};

struct StrataReport {
    PairSet sigma;
    EOLabel fol;
    std::vector<StratumRow> rows;  // lexicographic in the label
    /// The members of M_Sigma have a unique element of minimal dimension and it is fol.
    bool minimum_is_fol = false;
    /// Every member of M_Sigma Bruhat-dominates fol componentwise.
    bool members_dominate_fol = false;
};

StrataReport scan_strata(const CMTypeDatum& datum, const PairSet& sigma, std::uint64_t cap = kDefaultLabelCap);

std::string to_string(const EOLabel& label);

}  // namespace shimfol::eo
