#pragma once

// Closed-form rank and dimension calculators for the V-foliations F_Sigma
// on a unitary Shimura variety, and the dimension ledger of the cascade at
// a mu-ordinary point.

#include <string>
#include <utility>
#include <vector>

#include "shimfol/dieudonne.hpp"
#include "shimfol/eo.hpp"
#include "shimfol/signature.hpp"

namespace shimfol::foliation {

/// max{0, r - r_prev} (d - r) + r max{0, r_prev - r} for the pair; symmetric in tau, tau-bar.
int r_V_ord_pair(const CMTypeDatum& datum, PairRef pair);

struct PairValue {
    PairRef pair;
    int value = 0;
};

struct FoliationReport {
    int dim_M = 0;
    int rank = 0;
    int corank = 0;
    int dim_M_fol = 0;
    std::vector<PairValue> r_V_ord;  // one entry per pair of sigma
};

/// rank = sum_{not in Sigma} r r-bar + sum_{in Sigma} min{r, r_prev} min{r-bar, r-bar_prev},
/// corank = sum_{in Sigma} r_V^ord, dim_M_fol = sum_{in Sigma} ell(w^fol).
FoliationReport foliation_report(const CMTypeDatum& datum, const eo::PairSet& sigma);

/// Relative dimension of the blow-up over the stratum of `label`:
/// sum_{in Sigma} (r - r_prev)(a(w) - r + r_prev) at normalised representatives.
int blowup_fiber_dim(const CMTypeDatum& datum, const eo::EOLabel& label, const eo::PairSet& sigma);

/// p = #{nu : g_nu(i) = 0}, q = #{nu : g_nu(i-1) = 0}. Throws InputError
/// unless f(i-1) <= f(i).
std::pair<int, int> cascade_pq(const SignatureFn& sig, const dieudonne::SlopeProfile& profile, const OrbitDatum& orbit,
                               int i);

/// d^a d^b sum_i (g_b(i) - g_a(i)) for slope indices 1 <= a < b <= #slopes.
int dim_ext_group(const dieudonne::SlopeProfile& profile, int a, int b);

struct CascadeCheck {
    bool pass = false;
    int p = 0;
    int q = 0;
    int cascade_sum = 0;   // sum_{a <= p, b >= q+1} d^a d^b
    int expected = 0;      // r_prev (d - r)
    int rank_E = 0;        // min{r, r_prev} min{d - r, d - r_prev}
    std::string detail;
};

/// Compares the cascade contribution at index i with r_prev (d - r) and the
/// rank of E_{tau, tau-bar}. Throws InputError unless f(i-1) <= f(i).
CascadeCheck cascade_identity_check(const SignatureFn& sig, const OrbitDatum& orbit, int i);

}  // namespace shimfol::foliation
