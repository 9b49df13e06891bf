#pragma once

// Exact arithmetic in GF(p) and GF(p^n), n <= 12.
//
// A FiniteField is a cheap handle to interned, immutable field data, so
// elements can refer to their field by pointer and compare fields by
// identity. Interning is keyed on (p, modulus); building the same field
// twice yields the same handle.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shimfol/error.hpp"

namespace shimfol::gf {

inline constexpr int kMaxDegree = 12;

/// Coefficients c_0 + c_1 x + ... of a polynomial over GF(p), lowest degree first.
using Poly = std::vector<std::uint32_t>;

struct FieldData {
    std::uint32_t p;
    int n;
    Poly modulus;  // monic, degree n, modulus[n] == 1
};

class FieldElement;

class FiniteField {
public:
    FiniteField() = default;

    std::uint32_t characteristic() const { return data_->p; }
    int degree() const { return data_->n; }
    const Poly& modulus() const { return data_->modulus; }
    /// p^n, or nullopt when it does not fit in 64 bits.
    std::optional<std::uint64_t> order() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// Residue class of the integer v (reduced mod p).
    FieldElement from_int(std::int64_t v) const;
    /// Element with the given coefficients in the power basis 1, x, ..., x^{n-1}.
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    /// The class of x, a root of the modulus (for n = 1 the root of the linear modulus).
    FieldElement generator() const;
    /// Bijection 0..p^n-1 -> field, base-p digits as coefficients (c_0 least significant).
    FieldElement from_index(std::uint64_t index) const;

    bool operator==(const FiniteField& o) const { return data_ == o.data_; }
    bool valid() const { return data_ != nullptr; }
    const FieldData* data() const { return data_; }

    std::string describe() const;

private:
    friend FiniteField build_field(std::uint32_t, int, std::optional<Poly>);
    friend class FieldElement;
    explicit FiniteField(const FieldData* d) : data_(d) {}
    const FieldData* data_ = nullptr;
};

class FieldElement {
public:
    FieldElement() = default;

    FiniteField field() const;
    std::span<const std::uint32_t> coeffs() const { return {c_.data(), static_cast<std::size_t>(deg())}; }
    std::uint32_t coeff(int k) const { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const;
    /// Lexicographic on the coefficient vector (c_0 first).
    bool operator<(const FieldElement& o) const;

    std::string to_string() const;

private:
    friend class FiniteField;
    int deg() const { return f_ ? f_->n : 0; }
    void check_same(const FieldElement& o) const;

    const FieldData* f_ = nullptr;
    std::array<std::uint32_t, kMaxDegree> c_{};
};

/// Builds (or returns the interned) GF(p^n). Without a modulus, the
/// irreducible monic polynomial of degree n with smallest integer code
/// sum_k c_k p^k is used.
FiniteField build_field(std::uint32_t p, int n, std::optional<Poly> modulus = std::nullopt);

bool is_prime(std::uint64_t v);

/// Trial division by every monic polynomial of degree 1..n/2.
bool is_irreducible(const Poly& monic, std::uint32_t p);

/// x^(p^t).
FieldElement frobenius(const FieldElement& x, int t = 1);

/// All elements of the unique subfield of degree f (f | n), sorted.
std::vector<FieldElement> subfield_elements(const FiniteField& field, int f);

/// Basis over GF(p) of the degree-f subfield.
std::vector<FieldElement> subfield_basis(const FiniteField& field, int f);

/// Evaluates a polynomial with GF(p) coefficients at x.
FieldElement evaluate(const Poly& poly, const FieldElement& x);

std::string poly_to_string(const Poly& poly);

}  // namespace shimfol::gf
