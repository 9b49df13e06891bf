#pragma once

// (e, d-e)-shuffles in one-line notation, 1-based: w = [w(1), ..., w(d)].
// A permutation is an (e, d-e)-shuffle when the values 1..e appear in
// increasing order and so do the values e+1..d, i.e.
// w^-1(1) < ... < w^-1(e) and w^-1(e+1) < ... < w^-1(d).

#include <compare>
#include <string>
#include <vector>

#include "shimfol/error.hpp"

namespace shimfol::eo {

using Permutation = std::vector<int>;  // one-line, 1-based values

bool is_permutation(const Permutation& w);
Permutation inverse(const Permutation& w);
int inversion_count(const Permutation& w);

class Shuffle {
public:
    Shuffle() = default;
    /// Throws InputError unless `image` is an (e, d-e)-shuffle.
    Shuffle(int e, Permutation image);

    static Shuffle identity(int e, int d);
    static bool is_shuffle(int e, const Permutation& image);

    int degree() const { return static_cast<int>(image_.size()); }
    int first_block() const { return e_; }
    const Permutation& image() const { return image_; }
    /// w(j) for 1 <= j <= d.
    int operator()(int j) const { return image_[static_cast<std::size_t>(j - 1)]; }
    /// w^-1(v) for 1 <= v <= d.
    int preimage(int v) const;

    std::string to_string() const;  // e.g. "[3,1,2]"

    bool operator==(const Shuffle& o) const { return e_ == o.e_ && image_ == o.image_; }
    auto operator<=>(const Shuffle& o) const { return image_ <=> o.image_; }

private:
    int e_ = 0;
    Permutation image_;
};

/// All (e, d-e)-shuffles, lexicographic in one-line notation. There are binomial(d, e).
std::vector<Shuffle> enumerate_shuffles(int e, int d);

/// sum_{i=1..e} (w^-1(i) - i).
int shuffle_length(const Shuffle& w);

/// w0 o w o w0 with w0(v) = d+1-v; an (d-e, e)-shuffle.
Shuffle check_involution(const Shuffle& w);

/// Bruhat order via the rank-matrix criterion:
/// u <= v iff #{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j} for all i, j.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// The mu-ordinary (n, m)-shuffle: 1..m -> n+1..n+m, m+1..n+m -> 1..n.
Shuffle ordinary_shuffle(int n, int m);

/// The (r, d-r)-shuffle of smallest length satisfying the M_Sigma condition at
/// an index with f(i) = r and f(i-1) = r_prev. Both orientations are handled.
Shuffle foliation_shuffle(int d, int r, int r_prev);

}  // namespace shimfol::eo
