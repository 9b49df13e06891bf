#include "shimfol/dieudonne.hpp"

#include <map>
#include <sstream>

namespace shimfol::dieudonne {

namespace {

void check_shape(const SignatureFn& sig, const OrbitDatum& orbit) {
    if (orbit.size < 1) throw InputError("orbit size must be positive");
    if (static_cast<int>(sig.f.size()) != orbit.size) throw InputError("signature length differs from orbit size");
    for (int i = 0; i < orbit.size; ++i)
        if (sig.at(i) < 0 || sig.at(i) > sig.d)
            throw InputError("f(" + std::to_string(i) + ")=" + std::to_string(sig.at(i)) + " outside [0," +
                             std::to_string(sig.d) + "]");
}

}  // namespace

ModPDieudonneModule build_standard(const gf::FiniteField& field, const SignatureFn& sig, const OrbitDatum& orbit) {
    check_shape(sig, orbit);
    const int d = sig.d;
    ModPDieudonneModule n{field, orbit, sig, {}, {}};
    n.F.assign(orbit.size, gf::Matrix(field, d, d));
    n.V.assign(orbit.size, gf::Matrix(field, d, d));
    for (int i = 0; i < orbit.size; ++i) {
        const int cut = d - sig.at(i);
        for (int j = 1; j <= d; ++j) {
            if (j <= cut) n.F[i].at(j - 1, j - 1) = field.one();
            else n.V[orbit.next(i)].at(j - 1, j - 1) = field.one();
        }
    }
    return n;
}

ModPDieudonneModule build_from_shuffle(const gf::FiniteField& field, const SignatureFn& sig, const OrbitDatum& orbit,
                                       const std::vector<eo::Shuffle>& w) {
    check_shape(sig, orbit);
    const int d = sig.d;
    if (static_cast<int>(w.size()) != orbit.size) throw InputError("need one shuffle per orbit index");
    for (int i = 0; i < orbit.size; ++i) {
        if (w[i].degree() != d || w[i].first_block() != sig.at(i))
            throw InputError("shuffle at index " + std::to_string(i) + " is not in Pi_{" + std::to_string(sig.at(i)) +
                             "," + std::to_string(d - sig.at(i)) + "}");
    }
    ModPDieudonneModule n{field, orbit, sig, {}, {}};
    n.F.assign(orbit.size, gf::Matrix(field, d, d));
    n.V.assign(orbit.size, gf::Matrix(field, d, d));
    for (int i = 0; i < orbit.size; ++i) {
        const int fi = sig.at(i);
        for (int j = 1; j <= d; ++j) {
            // F(e_{i,j}) = e_{i+1, w_i(j) - f(i)} when w_i(j) > f(i)
            if (w[i](j) > fi) n.F[i].at(w[i](j) - fi - 1, j - 1) = field.one();
            // V(e_{i+1,j}) = e_{i, w_i^-1(j - d + f(i))} when j > d - f(i)
            if (j > d - fi) n.V[orbit.next(i)].at(w[i].preimage(j - d + fi) - 1, j - 1) = field.one();
        }
    }
    return n;
}

std::vector<gf::Vector> cotangent_component(const ModPDieudonneModule& n, int i) {
    return gf::kernel_basis(n.F.at(i)).basis;
}

int dim_ker_V_on_cotangent(const ModPDieudonneModule& n, int i) {
    auto basis = cotangent_component(n, i);
    if (basis.empty()) return 0;
    gf::Matrix k = gf::Matrix::from_columns(n.field, n.rank(), basis);
    // V(K c) = A phi^-1(K) phi^-1(c)
    gf::Matrix restricted = n.V.at(i) * k.frobenius_twist(-1);
    return gf::semilinear_kernel_dim(restricted, -1);
}

SemilinearMap compose_word(const ModPDieudonneModule& n, const std::string& word, int start) {
    SemilinearMap m{gf::Matrix::identity(n.field, n.rank()), 0, start};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const gf::Matrix* a = nullptr;
        int shift = 0;
        int next = 0;
        if (*it == 'F') {
            a = &n.F.at(m.target);
            shift = 1;
            next = n.orbit.next(m.target);
        } else if (*it == 'V') {
            a = &n.V.at(m.target);
            shift = -1;
            next = n.orbit.prev(m.target);
        } else {
            throw InputError(std::string("word letters must be F or V, got ") + *it);
        }
        m.matrix = *a * m.matrix.frobenius_twist(shift);
        m.twist += shift;
        m.target = next;
    }
    return m;
}

bool fv_vanish(const ModPDieudonneModule& n) {
    for (int i = 0; i < n.orbit.size; ++i) {
        if (!compose_word(n, "FV", i).matrix.is_zero()) return false;
        if (!compose_word(n, "VF", i).matrix.is_zero()) return false;
    }
    return true;
}

SlopeProfile slope_decomposition(const SignatureFn& sig, const OrbitDatum& orbit) {
    check_shape(sig, orbit);
    const int d = sig.d;
    SlopeProfile profile;
    for (int j = 1; j <= d; ++j) {
        std::vector<int> g(orbit.size, 0);
        int count = 0;
        for (int i = 0; i < orbit.size; ++i) {
            if (j > d - sig.at(i)) {
                g[i] = 1;
                ++count;
            }
        }
        boost::rational<int> slope(count, orbit.size);
        if (!profile.parts.empty() && profile.parts.back().slope == slope) {
            ++profile.parts.back().multiplicity;
        } else {
            profile.parts.push_back({slope, 1, std::move(g)});
        }
    }
    return profile;
}

DualityReport duality_check(int d, const std::vector<int>& f, int m, int p) {
    const int size = static_cast<int>(f.size());
    std::ostringstream why;
    if (m < 1 || size != 2 * m) {
        why << "orbit size " << size << " is not 2m for m=" << m;
        return {false, why.str()};
    }
    for (int i = 0; i < size; ++i) {
        if (f[i] < 0 || f[i] > d) {
            why << "f(" << i << ")=" << f[i] << " outside [0," << d << "]";
            return {false, why.str()};
        }
    }
    for (int i = 0; i < m; ++i) {
        if (f[i] + f[i + m] != d) {
            why << "f(" << i << ")+f(" << i + m << ")=" << f[i] + f[i + m] << " != d=" << d;
            return {false, why.str()};
        }
    }
    auto idx = [size](int i) { return ((i % size) + size) % size; };
    // Integral lift: F(e_{i,j}) = c e_{i+1,j}, V(e_{i+1,j}) = c' e_{i,j} with c, c' in {1, p}.
    auto f_coef = [&](int i, int j) { return j <= d - f[idx(i)] ? 1 : p; };
    auto v_coef = [&](int i_plus_1, int j) { return j <= d - f[idx(i_plus_1 - 1)] ? p : 1; };
    auto pairing = [&](int i, int j, int i2, int j2) { return (idx(i2) == idx(i + m) && j2 == d + 1 - j) ? 1 : 0; };
    for (int i = 0; i < size; ++i)
        for (int j = 1; j <= d; ++j)
            for (int i2 = 0; i2 < size; ++i2)
                for (int j2 = 1; j2 <= d; ++j2) {
                    if (pairing(i, j, i2, j2) != pairing(i2, j2, i, j)) {
                        why << "pairing not symmetric at e_{" << i << "," << j << "}, e_{" << i2 << "," << j2 << "}";
                        return {false, why.str()};
                    }
                    // <F e_{i,j}, e_{i2,j2}> versus <e_{i,j}, V e_{i2,j2}>; phi acts trivially on Z.
                    long lhs = static_cast<long>(f_coef(i, j)) * pairing(i + 1, j, i2, j2);
                    long rhs = static_cast<long>(v_coef(i2, j2)) * pairing(i, j, i2 - 1, j2);
                    if (lhs != rhs) {
                        why << "<Fx,y> != <x,Vy> for x=e_{" << i << "," << j << "}, y=e_{" << i2 << "," << j2
                            << "}: " << lhs << " vs " << rhs;
                        return {false, why.str()};
                    }
                }
    return {true, "ok"};
}

}  // namespace shimfol::dieudonne
