#include "shimfol/eo.hpp"

#include <algorithm>
#include <sstream>

namespace shimfol::eo {

namespace {

std::size_t pair_position(const CMTypeDatum& datum, PairRef ref) {
    ref = canonical(datum, ref);
    std::size_t pos = 0;
    for (int k = 0; k < ref.orbit; ++k) pos += static_cast<std::size_t>(datum.orbits[k].orbit.pair_count());
    return pos + static_cast<std::size_t>(ref.index);
}

}  // namespace

PairSet normalize_pairs(const CMTypeDatum& datum, const PairSet& sigma) {
    PairSet out;
    for (const auto& ref : sigma) out.push_back(canonical(datum, ref));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EOLabel label_ord(const CMTypeDatum& datum) {
    EOLabel label;
    for (const auto& ref : all_pairs(datum)) {
        LocalPair lp = local_pair(datum, ref);
        label.at_pair.push_back(ordinary_shuffle(lp.r, datum.d - lp.r));
    }
    return label;
}

EOLabel label_identity(const CMTypeDatum& datum) {
    EOLabel label;
    for (const auto& ref : all_pairs(datum)) {
        LocalPair lp = local_pair(datum, ref);
        label.at_pair.push_back(Shuffle::identity(lp.r, datum.d));
    }
    return label;
}

EOLabel label_fol(const CMTypeDatum& datum, const PairSet& sigma) {
    PairSet s = normalize_pairs(datum, sigma);
    EOLabel label;
    for (const auto& ref : all_pairs(datum)) {
        LocalPair lp = local_pair(datum, ref);
        if (std::binary_search(s.begin(), s.end(), ref)) label.at_pair.push_back(foliation_shuffle(datum.d, lp.r, lp.r_prev));
        else label.at_pair.push_back(Shuffle::identity(lp.r, datum.d));
    }
    return label;
}

void validate(const CMTypeDatum& datum, const EOLabel& label) {
    auto pairs = all_pairs(datum);
    if (label.at_pair.size() != pairs.size())
        throw InputError("label has " + std::to_string(label.at_pair.size()) + " shuffles for " +
                         std::to_string(pairs.size()) + " pairs");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        LocalPair lp = local_pair(datum, pairs[k]);
        const Shuffle& w = label.at_pair[k];
        if (w.degree() != datum.d || w.first_block() != lp.r)
            throw InputError("label component " + std::to_string(k) + " is not in Pi_{" + std::to_string(lp.r) + "," +
                             std::to_string(datum.d - lp.r) + "}");
    }
}

int dim_stratum(const EOLabel& label) {
    int total = 0;
    for (const auto& w : label.at_pair) total += shuffle_length(w);
    return total;
}

VCounts v_counts(const LocalPair& lp, const Shuffle& w) {
    VCounts c;
    const int cut = lp.d - lp.r_prev;
    for (int j = 1; j <= lp.d; ++j) {
        if (j <= cut && w(j) <= lp.r) ++c.a;
        if (j > cut && w(j) > lp.r) ++c.b;
    }
    return c;
}

int r_V_at(const CMTypeDatum& datum, const EOLabel& label, PairRef pair) {
    LocalPair lp = local_pair(datum, pair);
    VCounts c = v_counts(lp, label.at_pair.at(pair_position(datum, pair)));
    return c.a * (datum.d - lp.r) + lp.r * c.b - c.a * c.b;
}

bool in_M_sigma(const CMTypeDatum& datum, const EOLabel& label, const PairSet& sigma) {
    for (const auto& ref : normalize_pairs(datum, sigma)) {
        LocalPair lp = local_pair(datum, ref);
        VCounts c = v_counts(lp, label.at_pair.at(pair_position(datum, ref)));
        bool ok = lp.r_prev <= lp.r ? c.a == lp.r - lp.r_prev : c.b == lp.r_prev - lp.r;
        if (!ok) return false;
    }
    return true;
}

std::optional<std::uint64_t> label_count(const CMTypeDatum& datum) {
    std::uint64_t total = 1;
    for (const auto& ref : all_pairs(datum)) {
        LocalPair lp = local_pair(datum, ref);
        std::uint64_t c = 1;
        for (int k = 1; k <= lp.r; ++k) c = c * static_cast<std::uint64_t>(datum.d - lp.r + k) / static_cast<std::uint64_t>(k);
        if (c != 0 && total > UINT64_MAX / c) return std::nullopt;
        total *= c;
    }
    return total;
}

std::vector<EOLabel> enumerate_labels(const CMTypeDatum& datum, std::uint64_t cap) {
    auto count = label_count(datum);
    if (!count || *count > cap) {
        std::ostringstream os;
        os << "label enumeration needs " << (count ? std::to_string(*count) : std::string("> 2^64")) << " labels, cap is "
           << cap;
        throw CapExceeded(os.str());
    }
    std::vector<std::vector<Shuffle>> factors;
    for (const auto& ref : all_pairs(datum)) {
        LocalPair lp = local_pair(datum, ref);
        factors.push_back(enumerate_shuffles(lp.r, datum.d));
    }
    std::vector<EOLabel> out;
    out.reserve(*count);
    std::vector<std::size_t> odometer(factors.size(), 0);
    while (true) {
        EOLabel label;
        for (std::size_t k = 0; k < factors.size(); ++k) label.at_pair.push_back(factors[k][odometer[k]]);
        out.push_back(std::move(label));
        std::size_t k = factors.size();
        while (k > 0) {
            --k;
            if (++odometer[k] < factors[k].size()) break;
            odometer[k] = 0;
            if (k == 0) return out;
        }
        if (factors.empty()) return out;
    }
}

ExpandedLabel expand_label(const CMTypeDatum& datum, const EOLabel& label, int orbit) {
    const OrbitSignature& os = datum.orbits.at(orbit);
    ExpandedLabel ex;
    ex.side.resize(os.orbit.size);
    if (os.orbit.kind == OrbitKind::Split) ex.mirror.resize(os.orbit.size);
    for (const auto& ref : all_pairs(datum)) {
        if (ref.orbit != orbit) continue;
        LocalPair lp = local_pair(datum, ref);
        const Shuffle& w = label.at_pair.at(pair_position(datum, ref));
        auto place = [&](const Embedding& e, const Shuffle& s) { (e.mirror ? ex.mirror : ex.side)[e.index] = s; };
        place(lp.rep, w);
        place(lp.conj, check_involution(w));
    }
    return ex;
}

dieudonne::ModPDieudonneModule module_for_label(const gf::FiniteField& field, const CMTypeDatum& datum,
                                                const EOLabel& label, int orbit, bool mirror) {
    const OrbitSignature& os = datum.orbits.at(orbit);
    ExpandedLabel ex = expand_label(datum, label, orbit);
    SignatureFn sig{datum.d, os.f};
    if (mirror) {
        if (os.orbit.kind != OrbitKind::Split) throw InputError("only split orbits have a mirror");
        for (auto& v : sig.f) v = datum.d - v;
        return dieudonne::build_from_shuffle(field, sig, os.orbit, ex.mirror);
    }
    return dieudonne::build_from_shuffle(field, sig, os.orbit, ex.side);
}

StrataReport scan_strata(const CMTypeDatum& datum, const PairSet& sigma, std::uint64_t cap) {
    StrataReport report;
    report.sigma = normalize_pairs(datum, sigma);
    report.fol = label_fol(datum, report.sigma);
    for (auto& label : enumerate_labels(datum, cap)) {
        StratumRow row;
        row.dim = dim_stratum(label);
        for (const auto& ref : report.sigma) row.r_V.push_back(r_V_at(datum, label, ref));
        row.in_sigma = in_M_sigma(datum, label, report.sigma);
        row.bruhat_over_fol = true;
        for (std::size_t k = 0; k < label.at_pair.size(); ++k) {
            if (!bruhat_leq(report.fol.at_pair[k].image(), label.at_pair[k].image())) {
                row.bruhat_over_fol = false;
                break;
            }
        }
        row.label = std::move(label);
        report.rows.push_back(std::move(row));
    }

    int min_dim = -1;
    int at_min = 0;
    const EOLabel* min_label = nullptr;
    report.members_dominate_fol = true;
    for (const auto& row : report.rows) {
        if (!row.in_sigma) continue;
        if (!row.bruhat_over_fol) report.members_dominate_fol = false;
        if (min_dim < 0 || row.dim < min_dim) {
            min_dim = row.dim;
            at_min = 1;
            min_label = &row.label;
        } else if (row.dim == min_dim) {
            ++at_min;
        }
    }
    report.minimum_is_fol = at_min == 1 && min_label && *min_label == report.fol;
    return report;
}

std::string to_string(const EOLabel& label) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < label.at_pair.size(); ++k) os << (k ? " " : "") << label.at_pair[k].to_string();
    os << ")";
    return os.str();
}

}  // namespace shimfol::eo
