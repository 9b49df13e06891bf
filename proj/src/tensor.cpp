#include "shimfol/tensor.hpp"

#include <algorithm>

#include "shimfol/linalg.hpp"

namespace shimfol::gf {

std::vector<FieldElement> subfield_basis(const FiniteField& field, int f) {
    const int n = field.degree();
    if (f < 1 || n % f != 0)
        throw InputError("subfield degree " + std::to_string(f) + " does not divide " + std::to_string(n));
    // Kernel of x -> x^(p^f) - x as a GF(p)-linear map on coordinates.
    FiniteField prime = build_field(field.characteristic(), 1);
    Matrix m(prime, n, n);
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint32_t> unit(n, 0);
        unit[k] = 1;
        FieldElement x = field.from_coeffs(unit);
        FieldElement image = frobenius(x, f) - x;
        for (int r = 0; r < n; ++r) m.at(r, k) = prime.from_int(image.coeff(r));
    }
    std::vector<FieldElement> basis;
    for (const auto& v : kernel_basis(m).basis) {
        std::vector<std::uint32_t> coeffs;
        for (const auto& c : v) coeffs.push_back(c.coeff(0));
        basis.push_back(field.from_coeffs(coeffs));
    }
    return basis;
}

std::vector<FieldElement> subfield_elements(const FiniteField& field, int f) {
    auto basis = subfield_basis(field, f);
    const std::uint32_t p = field.characteristic();
    std::vector<FieldElement> out{field.zero()};
    for (const auto& b : basis) {
        std::vector<FieldElement> next;
        next.reserve(out.size() * p);
        for (const auto& x : out) {
            FieldElement acc = x;
            for (std::uint32_t c = 0; c < p; ++c) {
                next.push_back(acc);
                acc += b;
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TensorAlgebra::TensorAlgebra(const FiniteField& small, const FiniteField& big) : small_(small), big_(big) {
    if (small.characteristic() != big.characteristic()) throw InputError("tensor algebra: characteristics differ");
    const int f = small.degree();
    if (big.degree() % f != 0) throw InputError("tensor algebra: subfield degree must divide field degree");
    for (auto c : small.modulus()) modulus_in_big_.push_back(big.from_int(c));

    FieldElement first;
    bool found = false;
    for (const auto& x : subfield_elements(big, f)) {
        if (evaluate(small.modulus(), x).is_zero()) {
            first = x;  // elements are sorted, so this is the smallest root
            found = true;
            break;
        }
    }
    if (!found) throw InputError("tensor algebra: modulus has no root in the field");
    roots_.push_back(first);
    for (int i = 1; i < f; ++i) roots_.push_back(gf::frobenius(roots_.back(), 1));
}

TensorAlgebra::Element TensorAlgebra::zero() const { return Element(rank(), big_.zero()); }

TensorAlgebra::Element TensorAlgebra::one() const {
    Element e = zero();
    e[0] = big_.one();
    return e;
}

TensorAlgebra::Element TensorAlgebra::from_small(const FieldElement& a) const {
    if (!(a.field() == small_)) throw InputError("tensor algebra: element not in the small field");
    Element e = zero();
    for (int k = 0; k < rank(); ++k) e[k] = big_.from_int(a.coeff(k));
    return e;
}

TensorAlgebra::Element TensorAlgebra::from_big(const FieldElement& r) const {
    Element e = zero();
    e[0] = r;
    return e;
}

TensorAlgebra::Element TensorAlgebra::add(const Element& a, const Element& b) const {
    Element r = a;
    for (int k = 0; k < rank(); ++k) r[k] += b[k];
    return r;
}

TensorAlgebra::Element TensorAlgebra::mul(const Element& a, const Element& b) const {
    const int f = rank();
    std::vector<FieldElement> prod(2 * f - 1, big_.zero());
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) prod[i + j] += a[i] * b[j];
    for (int k = 2 * f - 2; k >= f; --k) {
        FieldElement c = prod[k];
        if (c.is_zero()) continue;
        for (int j = 0; j < f; ++j) prod[k - f + j] -= c * modulus_in_big_[j];
        prod[k] = big_.zero();
    }
    prod.resize(f);
    return prod;
}

TensorAlgebra::Element TensorAlgebra::frobenius(const Element& a) const {
    Element r = a;
    for (auto& x : r) x = gf::frobenius(x, 1);
    return r;
}

FieldElement TensorAlgebra::embed(int i, const FieldElement& a) const {
    FieldElement acc = big_.zero();
    FieldElement power = big_.one();
    for (int k = 0; k < rank(); ++k) {
        acc += big_.from_int(a.coeff(k)) * power;
        power *= roots_[i];
    }
    return acc;
}

TensorIdempotents tensor_idempotents(int f, const FiniteField& big) {
    if (f < 1 || big.degree() % f != 0)
        throw InputError("idempotents: " + std::to_string(f) + " does not divide " + std::to_string(big.degree()));
    TensorAlgebra alg(build_field(big.characteristic(), f), big);
    const auto& roots = alg.roots();
    std::vector<TensorAlgebra::Element> out;
    // Lagrange basis: e_i = prod_{j != i} (y - rho_j) / (rho_i - rho_j).
    for (int i = 0; i < f; ++i) {
        TensorAlgebra::Element e = alg.one();
        for (int j = 0; j < f; ++j) {
            if (j == i) continue;
            FieldElement scale = (roots[i] - roots[j]).inverse();
            TensorAlgebra::Element factor = alg.zero();
            factor[0] = -roots[j] * scale;
            if (f > 1) factor[1] = scale;
            e = alg.mul(e, factor);
        }
        out.push_back(std::move(e));
    }
    return {std::move(alg), std::move(out)};
}

}  // namespace shimfol::gf
