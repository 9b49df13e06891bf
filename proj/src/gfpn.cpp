#include "shimfol/gfpn.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace shimfol::gf {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u32 mod_inverse(u32 a, u32 p) {
    // p prime, a != 0
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<u32>(t);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u32>((r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, u32 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = static_cast<u32>((x + p - y) % p);
    }
    trim(r);
    return r;
}

// a = q*b + r with deg r < deg b. b must be nonzero after trimming.
void poly_divmod(Poly a, const Poly& b, u32 p, Poly& q, Poly& r) {
    trim(a);
    q.clear();
    if (a.size() < b.size()) {
        r = a;
        return;
    }
    q.assign(a.size() - b.size() + 1, 0);
    u32 lead_inv = mod_inverse(b.back(), p);
    const long bdeg = static_cast<long>(b.size()) - 1;
    for (long k = static_cast<long>(a.size()) - 1; k >= bdeg; --k) {
        u32 coef = static_cast<u32>(static_cast<u64>(a[k]) * lead_inv % p);
        std::size_t shift = static_cast<std::size_t>(k - bdeg);
        q[shift] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u64 sub = static_cast<u64>(coef) * b[j] % p;
            a[shift + j] = static_cast<u32>((a[shift + j] + p - sub) % p);
        }
    }
    trim(a);
    trim(q);
    r = a;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::pair<u32, Poly>, std::unique_ptr<FieldData>>& registry() {
    static std::map<std::pair<u32, Poly>, std::unique_ptr<FieldData>> r;
    return r;
}

Poly poly_from_code(u64 code, int n, u32 p) {
    Poly m(n + 1, 0);
    for (int k = 0; k < n; ++k) {
        m[k] = static_cast<u32>(code % p);
        code /= p;
    }
    m[n] = 1;
    return m;
}

std::optional<u64> checked_pow(u64 base, int e) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
        r *= base;
    }
    return r;
}

}  // namespace

bool is_prime(u64 v) {
    if (v < 2) return false;
    for (u64 d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool is_irreducible(const Poly& monic, u32 p) {
    Poly f = monic;
    trim(f);
    int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    for (int deg = 1; deg <= n / 2; ++deg) {
        auto count = checked_pow(p, deg);
        if (!count) throw CapExceeded("irreducibility test: too many trial divisors");
        for (u64 code = 0; code < *count; ++code) {
            Poly q, r;
            poly_divmod(f, poly_from_code(code, deg, p), p, q, r);
            if (r.empty()) return false;
        }
    }
    return true;
}

FiniteField build_field(u32 p, int n, std::optional<Poly> modulus) {
    if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw InputError("characteristic too large");
    if (n < 1 || n > kMaxDegree)
        throw InputError("extension degree must lie in [1, " + std::to_string(kMaxDegree) + "]");

    Poly m;
    if (modulus) {
        m = *modulus;
        for (auto& c : m) {
            if (c >= p) throw InputError("modulus coefficient not reduced mod p");
        }
        trim(m);
        if (static_cast<int>(m.size()) != n + 1 || m.back() != 1)
            throw InputError("modulus must be monic of degree " + std::to_string(n));
        if (!is_irreducible(m, p)) throw InputError("modulus " + poly_to_string(m) + " is reducible");
    } else if (n == 1) {
        m = {0, 1};
    } else {
        auto count = checked_pow(p, n);
        if (!count) throw InputError("field too large");
        bool found = false;
        for (u64 code = 0; code < *count; ++code) {
            Poly cand = poly_from_code(code, n, p);
            if (cand[0] == 0) continue;  // divisible by x
            if (is_irreducible(cand, p)) {
                m = std::move(cand);
                found = true;
                break;
            }
        }
        if (!found) throw InputError("no irreducible polynomial found");  // unreachable for finite fields
    }

    std::lock_guard lock(registry_mutex());
    auto key = std::make_pair(p, m);
    auto& slot = registry()[key];
    if (!slot) slot = std::make_unique<FieldData>(FieldData{p, n, m});
    return FiniteField(slot.get());
}

std::optional<u64> FiniteField::order() const { return checked_pow(data_->p, data_->n); }

FieldElement FiniteField::zero() const {
    FieldElement e;
    e.f_ = data_;
    return e;
}

FieldElement FiniteField::one() const { return from_int(1); }

FieldElement FiniteField::from_int(std::int64_t v) const {
    FieldElement e = zero();
    std::int64_t p = data_->p;
    e.c_[0] = static_cast<u32>(((v % p) + p) % p);
    return e;
}

FieldElement FiniteField::from_coeffs(std::span<const u32> coeffs) const {
    if (static_cast<int>(coeffs.size()) > data_->n) throw InputError("too many coefficients for field element");
    FieldElement e = zero();
    for (std::size_t k = 0; k < coeffs.size(); ++k) e.c_[k] = coeffs[k] % data_->p;
    return e;
}

FieldElement FiniteField::generator() const {
    if (data_->n == 1) return from_int((data_->p - data_->modulus[0]) % data_->p);
    FieldElement e = zero();
    e.c_[1] = 1;
    return e;
}

FieldElement FiniteField::from_index(u64 index) const {
    FieldElement e = zero();
    for (int k = 0; k < data_->n; ++k) {
        e.c_[k] = static_cast<u32>(index % data_->p);
        index /= data_->p;
    }
    return e;
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "GF(" << data_->p;
    if (data_->n > 1) os << "^" << data_->n << ") mod " << poly_to_string(data_->modulus);
    else os << ")";
    return os.str();
}

FiniteField FieldElement::field() const {
    return FiniteField(f_);
}

void FieldElement::check_same(const FieldElement& o) const {
    if (f_ != o.f_) throw InputError("field element arithmetic across different fields");
}

bool FieldElement::is_zero() const {
    for (int k = 0; k < deg(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (deg() == 0 || c_[0] != 1) return false;
    for (int k = 1; k < deg(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement r = *this;
    for (int k = 0; k < deg(); ++k) {
        u32 s = c_[k] + o.c_[k];
        r.c_[k] = s >= f_->p ? s - f_->p : s;
    }
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement r = *this;
    for (int k = 0; k < deg(); ++k) r.c_[k] = c_[k] >= o.c_[k] ? c_[k] - o.c_[k] : c_[k] + f_->p - o.c_[k];
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (int k = 0; k < deg(); ++k) r.c_[k] = c_[k] == 0 ? 0 : f_->p - c_[k];
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    const int n = deg();
    const u64 p = f_->p;
    FieldElement r = *this;
    if (n == 1) {
        r.c_[0] = static_cast<u32>(static_cast<u64>(c_[0]) * o.c_[0] % p);
        return r;
    }
    std::array<u64, 2 * kMaxDegree> prod{};
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + static_cast<u64>(c_[i]) * o.c_[j]) % p;
    }
    const Poly& m = f_->modulus;
    for (int k = 2 * n - 2; k >= n; --k) {
        u64 coef = prod[k];
        if (coef == 0) continue;
        prod[k] = 0;
        for (int j = 0; j < n; ++j) prod[k - n + j] = (prod[k - n + j] + (p - m[j]) * coef) % p;
    }
    for (int k = 0; k < n; ++k) r.c_[k] = static_cast<u32>(prod[k]);
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    const u32 p = f_->p;
    if (deg() == 1) {
        FieldElement r = *this;
        r.c_[0] = mod_inverse(c_[0], p);
        return r;
    }
    // Extended Euclid: s*a + t*m = gcd (a unit).
    Poly a(c_.begin(), c_.begin() + deg());
    trim(a);
    Poly r0 = f_->modulus, r1 = a;
    Poly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        Poly q, r;
        poly_divmod(r0, r1, p, q, r);
        Poly s = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant
    u32 scale = mod_inverse(r0[0], p);
    FieldElement res;
    res.f_ = f_;
    for (std::size_t k = 0; k < s0.size(); ++k) res.c_[k] = static_cast<u32>(static_cast<u64>(s0[k]) * scale % p);
    return res;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(u64 e) const {
    FieldElement result = FiniteField(f_).one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (f_ != o.f_) return false;
    for (int k = 0; k < deg(); ++k)
        if (c_[k] != o.c_[k]) return false;
    return true;
}

bool FieldElement::operator<(const FieldElement& o) const {
    return std::lexicographical_compare(c_.begin(), c_.begin() + deg(), o.c_.begin(), o.c_.begin() + o.deg());
}

std::string FieldElement::to_string() const {
    if (deg() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (int k = deg() - 1; k >= 0; --k) {
        if (c_[k] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0 || c_[k] != 1) os << c_[k];
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

FieldElement frobenius(const FieldElement& x, int t) {
    FieldElement r = x;
    const u64 p = x.field().characteristic();
    for (int i = 0; i < t; ++i) r = r.pow(p);
    return r;
}

FieldElement evaluate(const Poly& poly, const FieldElement& x) {
    FiniteField k = x.field();
    FieldElement acc = k.zero();
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + k.from_int(poly[i]);
    return acc;
}

std::string poly_to_string(const Poly& poly) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = poly.size(); k-- > 0;) {
        if (poly[k] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0 || poly[k] != 1) os << poly[k];
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace shimfol::gf
