#include "shimfol/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace shimfol::eo {

bool is_permutation(const Permutation& w) {
    const int d = static_cast<int>(w.size());
    std::vector<bool> seen(d + 1, false);
    for (int v : w) {
        if (v < 1 || v > d || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation inverse(const Permutation& w) {
    Permutation inv(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) inv[w[j] - 1] = static_cast<int>(j) + 1;
    return inv;
}

int inversion_count(const Permutation& w) {
    int count = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++count;
    return count;
}

bool Shuffle::is_shuffle(int e, const Permutation& image) {
    const int d = static_cast<int>(image.size());
    if (e < 0 || e > d || !is_permutation(image)) return false;
    int last_low = 0, last_high = e;
    for (int v : image) {
        if (v <= e) {
            if (v != last_low + 1) return false;
            last_low = v;
        } else {
            if (v != last_high + 1) return false;
            last_high = v;
        }
    }
    return true;
}

Shuffle::Shuffle(int e, Permutation image) : e_(e), image_(std::move(image)) {
    if (!is_shuffle(e_, image_)) {
        std::ostringstream os;
        os << "not an (" << e_ << "," << static_cast<int>(image_.size()) - e_ << ")-shuffle: " << to_string();
        throw InputError(os.str());
    }
}

Shuffle Shuffle::identity(int e, int d) {
    Permutation id(d);
    for (int j = 0; j < d; ++j) id[j] = j + 1;
    return Shuffle(e, std::move(id));
}

int Shuffle::preimage(int v) const {
    auto it = std::find(image_.begin(), image_.end(), v);
    return static_cast<int>(it - image_.begin()) + 1;
}

std::string Shuffle::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t j = 0; j < image_.size(); ++j) os << (j ? "," : "") << image_[j];
    os << "]";
    return os.str();
}

std::vector<Shuffle> enumerate_shuffles(int e, int d) {
    if (e < 0 || e > d) throw InputError("enumerate_shuffles: need 0 <= e <= d");
    std::vector<Shuffle> out;
    Permutation img(d);
    // Choose which positions receive the low block 1..e, filling both blocks in order.
    std::function<void(int, int, int)> rec = [&](int pos, int low, int high) {
        if (pos == d) {
            out.emplace_back(e, img);
            return;
        }
        if (low < e) {
            img[pos] = low + 1;
            rec(pos + 1, low + 1, high);
        }
        if (high < d - e) {
            img[pos] = e + high + 1;
            rec(pos + 1, low, high + 1);
        }
    };
    rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int shuffle_length(const Shuffle& w) {
    int total = 0;
    for (int i = 1; i <= w.first_block(); ++i) total += w.preimage(i) - i;
    return total;
}

Shuffle check_involution(const Shuffle& w) {
    const int d = w.degree();
    Permutation img(d);
    for (int j = 1; j <= d; ++j) img[j - 1] = d + 1 - w(d + 1 - j);
    return Shuffle(d - w.first_block(), std::move(img));
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw InputError("bruhat_leq: permutations of different degree");
    const int d = static_cast<int>(u.size());
    for (int j = 1; j <= d; ++j) {
        int cu = 0, cv = 0;
        for (int i = 1; i <= d; ++i) {
            if (u[i - 1] >= j) ++cu;
            if (v[i - 1] >= j) ++cv;
            if (cu > cv) return false;
        }
    }
    return true;
}

Shuffle ordinary_shuffle(int n, int m) {
    if (n < 0 || m < 0) throw InputError("ordinary_shuffle: negative block");
    Permutation img(n + m);
    for (int j = 1; j <= m; ++j) img[j - 1] = n + j;
    for (int j = m + 1; j <= n + m; ++j) img[j - 1] = j - m;
    return Shuffle(n, std::move(img));
}

Shuffle foliation_shuffle(int d, int r, int r_prev) {
    if (r < 0 || r > d || r_prev < 0 || r_prev > d) throw InputError("foliation_shuffle: signature out of range");
    Permutation img(d);
    if (r_prev <= r) {
        const int k = r - r_prev;
        for (int j = 1; j <= k; ++j) img[j - 1] = j;
        for (int j = k + 1; j <= d - r_prev; ++j) img[j - 1] = r + (j - k);
        for (int j = d - r_prev + 1; j <= d; ++j) img[j - 1] = k + (j - (d - r_prev));
    } else {
        const int g = d - r_prev;
        for (int j = 1; j <= g; ++j) img[j - 1] = r + j;
        for (int j = g + 1; j <= g + r; ++j) img[j - 1] = j - g;
        for (int j = g + r + 1; j <= d; ++j) img[j - 1] = j;
    }
    return Shuffle(r, std::move(img));
}

}  // namespace shimfol::eo
