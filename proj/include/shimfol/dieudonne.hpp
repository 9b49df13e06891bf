#pragma once

// Mod-p Dieudonne modules with O-action, graded over an orbit of embeddings.
//
// Component i has basis e_{i,1..d}. F is phi-semilinear from component i
// to i+1 and V is phi^-1-semilinear from component i to i-1; both are
// stored as plain matrices whose column j is the image of e_{i,j}.

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "shimfol/linalg.hpp"
#include "shimfol/shuffle.hpp"
#include "shimfol/signature.hpp"

namespace shimfol::dieudonne {

struct ModPDieudonneModule {
    gf::FiniteField field;
    OrbitDatum orbit;
    SignatureFn signature;
    std::vector<gf::Matrix> F;  // F[i]: component i -> i+1
    std::vector<gf::Matrix> V;  // V[i]: component i -> i-1

    int rank() const { return signature.d; }
};

/// The standard module N(d, f) = M(d, f) / p:
/// F(e_{i,j}) = e_{i+1,j} for j <= d - f(i), else 0;
/// V(e_{i+1,j}) = 0 for j <= d - f(i), else e_{i,j}.
ModPDieudonneModule build_standard(const gf::FiniteField& field, const SignatureFn& sig, const OrbitDatum& orbit);

/// The module N_w attached to per-index shuffles w_i in Pi_{f(i), d-f(i)}.
ModPDieudonneModule build_from_shuffle(const gf::FiniteField& field, const SignatureFn& sig, const OrbitDatum& orbit,
                                       const std::vector<eo::Shuffle>& w);

/// Basis of ker F on component i (the i-isotypic part of the cotangent space).
std::vector<gf::Vector> cotangent_component(const ModPDieudonneModule& n, int i);

/// dim (ker V restricted to cotangent_component(n, i)).
int dim_ker_V_on_cotangent(const ModPDieudonneModule& n, int i);

/// A composite of F and V written left to right as composition, so "FV"
/// means F after V. Starting at component `start`, returns the matrix A and
/// twist t of the composite x -> A phi^t(x), and the component it lands in.
struct SemilinearMap {
    gf::Matrix matrix;
    int twist = 0;
    int target = 0;
};
SemilinearMap compose_word(const ModPDieudonneModule& n, const std::string& word, int start);

/// F o V and V o F vanish on every component.
bool fv_vanish(const ModPDieudonneModule& n);

struct SlopePart {
    boost::rational<int> slope;
    int multiplicity = 0;
    std::vector<int> g;  // g(i) in {0, 1}
};

struct SlopeProfile {
    std::vector<SlopePart> parts;  // slopes strictly increasing
};

/// Slope of M^j is #{i : j > d - f(i)} / |orbit|; equal slopes are grouped.
SlopeProfile slope_decomposition(const SignatureFn& sig, const OrbitDatum& orbit);

struct DualityReport {
    bool pass = false;
    std::string detail;  // first counterexample on failure
};

/// Checks f(i) + f(i+m) = d and the adjunction <Fx, y> = <x, Vy>^phi on all
/// basis pairs of the standard lift M(d, f), with the symmetric pairing
/// <e_{i,j}, e_{i+m,j'}> = delta_{j', d+1-j}. The orbit has size f.size() = 2m.
/// `p` is the prime used for the lift.
DualityReport duality_check(int d, const std::vector<int>& f, int m, int p = 2);

}  // namespace shimfol::dieudonne
