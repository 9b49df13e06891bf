#pragma once

// The algebra GF(p^f) (x) K for a field K = GF(p^n) with f | n, and its
// decomposition into f copies of K via orthogonal idempotents.

#include <vector>

#include "shimfol/gfpn.hpp"

namespace shimfol::gf {

/// GF(p^f) (x) K represented as K[y]/(m(y)), m the modulus of GF(p^f).
/// An element is a length-f vector (c_0..c_{f-1}) meaning sum_k y^k (x) c_k.
class TensorAlgebra {
public:
    using Element = std::vector<FieldElement>;

    TensorAlgebra(const FiniteField& small, const FiniteField& big);

    const FiniteField& small() const { return small_; }
    const FiniteField& big() const { return big_; }
    int rank() const { return small_.degree(); }

    Element zero() const;
    Element one() const;
    Element from_small(const FieldElement& a) const;  // a (x) 1
    Element from_big(const FieldElement& r) const;    // 1 (x) r

    Element add(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    /// a (x) r -> a (x) r^p, i.e. Frobenius on the K coordinates.
    Element frobenius(const Element& a) const;

    /// Images of y under the f embeddings GF(p^f) -> K, in Frobenius-cyclic
    /// order: root(0) is the lexicographically smallest root of m, and
    /// root(i+1) = root(i)^p.
    const std::vector<FieldElement>& roots() const { return roots_; }
    /// sigma_i(a) for a in GF(p^f).
    FieldElement embed(int i, const FieldElement& a) const;

private:
    FiniteField small_;
    FiniteField big_;
    std::vector<FieldElement> modulus_in_big_;
    std::vector<FieldElement> roots_;
};

struct TensorIdempotents {
    TensorAlgebra algebra;
    /// e_i, with (a (x) 1) e_i = (1 (x) sigma_i(a)) e_i.
    std::vector<TensorAlgebra::Element> idempotents;
};

/// Throws InputError unless f divides the degree of K.
TensorIdempotents tensor_idempotents(int f, const FiniteField& big);

}  // namespace shimfol::gf
