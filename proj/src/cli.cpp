#include "shimfol/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "shimfol/dieudonne.hpp"
#include "shimfol/foliation.hpp"
#include "shimfol/gfpn.hpp"

namespace shimfol::cli {

using nlohmann::json;

namespace {

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("field \"") + key + "\" has the wrong type");
    }
}

/// Plain aligned table: header row, then rows.
class Table {
public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& out) const {
        std::vector<std::size_t> w(rows_[0].size(), 0);
        for (const auto& r : rows_)
            for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
        for (const auto& r : rows_) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                out << std::left << std::setw(static_cast<int>(w[c])) << r[c];
                out << (c + 1 < r.size() ? "  " : "\n");
            }
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

void print_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
        out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

std::string join(const std::vector<int>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? sep : "") << v[k];
    return os.str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

json label_json(const eo::EOLabel& label) {
    json arr = json::array();
    for (const auto& w : label.at_pair) arr.push_back(w.image());
    return arr;
}

json pair_json(const PairRef& p) { return {{"orbit", p.orbit}, {"index", p.index}}; }

std::string pair_string(const PairRef& p) { return std::to_string(p.orbit) + ":" + std::to_string(p.index); }

std::string rational_string(const boost::rational<int>& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string rational_string(const boost::rational<std::int64_t>& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw InputError("format must be table, json or csv, got \"" + s + "\"");
}

UnitaryCase parse_unitary(const json& j) {
    if (get<std::string>(j, "kind") != "unitary") throw InputError("case kind is not \"unitary\"");
    UnitaryCase c;
    c.p = get<std::uint32_t>(j, "p");
    if (!gf::is_prime(c.p)) throw InputError("p=" + std::to_string(c.p) + " is not prime");
    c.datum.d = get<int>(j, "d");
    if (c.datum.d < 1) throw InputError("d must be positive");
    const json orbits = get<json>(j, "orbits");
    if (!orbits.is_array() || orbits.empty()) throw InputError("\"orbits\" must be a nonempty array");
    for (const auto& o : orbits) {
        OrbitSignature os;
        os.orbit.kind = orbit_kind_from_string(get<std::string>(o, "kind"));
        os.orbit.size = get<int>(o, "size");
        os.f = get<std::vector<int>>(o, "f");
        c.datum.orbits.push_back(std::move(os));
    }
    validate(c.datum);
    const json sigma = j.contains("sigma") ? j.at("sigma") : json::array();
    if (sigma.is_string()) {
        if (sigma.get<std::string>() != "all") throw InputError("\"sigma\" must be \"all\" or a list of pairs");
        c.sigma = all_pairs(c.datum);
    } else if (sigma.is_array()) {
        for (const auto& ref : sigma) c.sigma.push_back({get<int>(ref, "orbit"), get<int>(ref, "index")});
        c.sigma = eo::normalize_pairs(c.datum, c.sigma);
    } else {
        throw InputError("\"sigma\" must be \"all\" or a list of pairs");
    }
    return c;
}

json to_json(const UnitaryCase& c) {
    json orbits = json::array();
    for (const auto& o : c.datum.orbits) orbits.push_back({{"kind", to_string(o.orbit.kind)}, {"size", o.orbit.size}, {"f", o.f}});
    json sigma = json::array();
    for (const auto& p : c.sigma) sigma.push_back(pair_json(p));
    return {{"kind", "unitary"}, {"p", c.p}, {"d", c.datum.d}, {"orbits", orbits}, {"sigma", sigma}};
}

HilbertCase parse_hilbert(const json& j) {
    if (get<std::string>(j, "kind") != "hilbert") throw InputError("case kind is not \"hilbert\"");
    HilbertCase c;
    c.datum.p = get<std::uint32_t>(j, "p");
    c.datum.orbit_sizes = get<std::vector<int>>(j, "orbit_sizes");
    hilbert::validate(c.datum);
    const int g = c.datum.g();
    if (j.contains("g") && get<int>(j, "g") != g)
        throw InputError("\"g\" differs from the sum of the orbit sizes (" + std::to_string(g) + ")");
    if (j.contains("sigmas")) c.sigmas = get<std::vector<hilbert::SigmaSet>>(j, "sigmas");
    for (auto& s : c.sigmas) {
        for (int v : s)
            if (v < 0 || v >= g) throw InputError("embedding " + std::to_string(v) + " out of range in \"sigmas\"");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    if (j.contains("weights")) c.weights = get<std::vector<hilbert::Weight>>(j, "weights");
    for (const auto& k : c.weights)
        if (static_cast<int>(k.size()) != g) throw InputError("every weight needs g=" + std::to_string(g) + " entries");
    if (j.contains("kappa_degree")) {
        c.kappa_degree = get<int>(j, "kappa_degree");
        if (c.kappa_degree < 0 || c.kappa_degree > gf::kMaxDegree)
            throw InputError("\"kappa_degree\" must lie in [0," + std::to_string(gf::kMaxDegree) + "]");
        for (int f : c.datum.orbit_sizes)
            if (c.kappa_degree > 0 && c.kappa_degree % f != 0)
                throw InputError("orbit size " + std::to_string(f) + " does not divide \"kappa_degree\"");
    }
    return c;
}

json to_json(const HilbertCase& c) {
    return {{"kind", "hilbert"},
            {"p", c.datum.p},
            {"g", c.datum.g()},
            {"orbit_sizes", c.datum.orbit_sizes},
            {"sigmas", c.sigmas},
            {"weights", c.weights},
            {"kappa_degree", c.kappa_degree}};
}

json read_case_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open case file " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("case file " + path + " is not valid JSON: " + e.what());
    }
}

std::string encode_label(const eo::EOLabel& label) {
    std::vector<std::string> parts;
    for (const auto& w : label.at_pair) parts.push_back(join(w.image(), "."));
    std::ostringstream os;
    for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? ";" : "") << parts[k];
    return os.str();
}

int cmd_strata(const UnitaryCase& c, Format fmt, std::uint64_t cap, std::ostream& out) {
    const auto scan = eo::scan_strata(c.datum, c.sigma, cap);
    if (fmt == Format::Json) {
        json rows = json::array();
        for (const auto& row : scan.rows)
            rows.push_back({{"label", label_json(row.label)},
                            {"dim", row.dim},
                            {"rV", row.r_V},
                            {"inSigma", row.in_sigma},
                            {"bruhatOverFol", row.bruhat_over_fol}});
        json doc{{"command", "strata"},
                 {"case", to_json(c)},
                 {"fol", label_json(scan.fol)},
                 {"minimumIsFol", scan.minimum_is_fol},
                 {"membersDominateFol", scan.members_dominate_fol},
                 {"strata", rows}};
        out << doc.dump(2) << "\n";
        return kOk;
    }
    std::vector<std::string> header{"label", "dim", "rV", "inSigma", "bruhatOverFol"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : scan.rows)
        rows.push_back({fmt == Format::Csv ? encode_label(row.label) : eo::to_string(row.label), std::to_string(row.dim),
                        join(row.r_V, ";"), yes(row.in_sigma), yes(row.bruhat_over_fol)});
    if (fmt == Format::Csv) {
        print_csv(out, header, rows);
        return kOk;
    }
    out << "strata: " << scan.rows.size() << " labels, Sigma = {";
    for (std::size_t k = 0; k < scan.sigma.size(); ++k) out << (k ? ", " : "") << pair_string(scan.sigma[k]);
    out << "}\n";
    Table t(header);
    for (auto& r : rows) t.add(r);
    t.print(out);
    out << "w^fol = " << eo::to_string(scan.fol) << "\n";
    out << "unique minimal member of M_Sigma is w^fol: " << yes(scan.minimum_is_fol) << "\n";
    out << "every member Bruhat-dominates w^fol: " << yes(scan.members_dominate_fol) << "\n";
    return kOk;
}

int cmd_foliation(const UnitaryCase& c, Format fmt, std::ostream& out) {
    const auto rep = foliation::foliation_report(c.datum, c.sigma);
    const int d = c.datum.d;

    struct SideSlopes {
        int orbit;
        bool mirror;
        dieudonne::SlopeProfile profile;
        std::vector<foliation::CascadeCheck> checks;
        std::vector<int> indices;
    };
    std::vector<SideSlopes> sides;
    for (int k = 0; k < static_cast<int>(c.datum.orbits.size()); ++k) {
        const auto& os = c.datum.orbits[k];
        for (bool mirror : {false, true}) {
            if (mirror && os.orbit.kind != OrbitKind::Split) continue;
            SignatureFn sig{d, os.f};
            if (mirror)
                for (auto& v : sig.f) v = d - v;
            SideSlopes s{k, mirror, dieudonne::slope_decomposition(sig, os.orbit), {}, {}};
            for (int i = 0; i < os.orbit.size; ++i) {
                if (sig.at(os.orbit.prev(i)) > sig.at(i)) continue;
                s.indices.push_back(i);
                s.checks.push_back(foliation::cascade_identity_check(sig, os.orbit, i));
            }
            sides.push_back(std::move(s));
        }
    }
    bool cascade_ok = true;
    for (const auto& s : sides)
        for (const auto& ch : s.checks) cascade_ok = cascade_ok && ch.pass;

    if (fmt == Format::Json) {
        json rv = json::array();
        for (const auto& pv : rep.r_V_ord) rv.push_back({{"pair", pair_json(pv.pair)}, {"rVord", pv.value}});
        json slopes = json::array();
        for (const auto& s : sides) {
            json parts = json::array();
            for (const auto& part : s.profile.parts)
                parts.push_back({{"slope", rational_string(part.slope)}, {"multiplicity", part.multiplicity}, {"g", part.g}});
            json cascade = json::array();
            for (std::size_t k = 0; k < s.checks.size(); ++k) {
                const auto& ch = s.checks[k];
                cascade.push_back({{"index", s.indices[k]},
                                   {"p", ch.p},
                                   {"q", ch.q},
                                   {"cascadeSum", ch.cascade_sum},
                                   {"expected", ch.expected},
                                   {"rankE", ch.rank_E},
                                   {"pass", ch.pass}});
            }
            slopes.push_back({{"orbit", s.orbit}, {"mirror", s.mirror}, {"slopes", parts}, {"cascade", cascade}});
        }
        json doc{{"command", "foliation"},
                 {"case", to_json(c)},
                 {"dimM", rep.dim_M},
                 {"rank", rep.rank},
                 {"corank", rep.corank},
                 {"dimMfol", rep.dim_M_fol},
                 {"rVord", rv},
                 {"orbits", slopes},
                 {"cascadePass", cascade_ok}};
        out << doc.dump(2) << "\n";
        return cascade_ok ? kOk : kVerifyFailed;
    }
    if (fmt == Format::Csv) {
        print_csv(out, {"quantity", "value"},
                  {{"dimM", std::to_string(rep.dim_M)},
                   {"rank", std::to_string(rep.rank)},
                   {"corank", std::to_string(rep.corank)},
                   {"dimMfol", std::to_string(rep.dim_M_fol)},
                   {"cascadePass", yes(cascade_ok)}});
        return cascade_ok ? kOk : kVerifyFailed;
    }
    out << "dim M       " << rep.dim_M << "\n";
    out << "rank F      " << rep.rank << "\n";
    out << "corank F    " << rep.corank << "\n";
    out << "dim M_fol   " << rep.dim_M_fol << "\n";
    for (const auto& pv : rep.r_V_ord) out << "r_V^ord(" << pair_string(pv.pair) << ") = " << pv.value << "\n";
    for (const auto& s : sides) {
        out << "orbit " << s.orbit << (s.mirror ? " (mirror)" : "") << " slopes:";
        for (const auto& part : s.profile.parts)
            out << " " << rational_string(part.slope) << "^" << part.multiplicity << " g=(" << join(part.g, ",") << ")";
        out << "\n";
        for (std::size_t k = 0; k < s.checks.size(); ++k) {
            const auto& ch = s.checks[k];
            out << "  cascade i=" << s.indices[k] << ": p=" << ch.p << " q=" << ch.q << " sum=" << ch.cascade_sum
                << " r_prev(d-r)=" << ch.expected << " rkE=" << ch.rank_E << " " << (ch.pass ? "pass" : "FAIL: " + ch.detail)
                << "\n";
        }
    }
    return cascade_ok ? kOk : kVerifyFailed;
}

int cmd_hilbert(const HilbertCase& c, Format fmt, std::ostream& out) {
    const auto& datum = c.datum;
    const int g = datum.g();
    const auto ledger = hilbert::hasse_weights(datum);
    const bool split_completely =
        std::all_of(datum.orbit_sizes.begin(), datum.orbit_sizes.end(), [](int f) { return f == 1; });

    json sig_rows = json::array();
    std::vector<std::vector<std::string>> sig_csv;
    for (const auto& s : c.sigmas) {
        const bool closed = hilbert::is_p_closed(datum, s);
        json row{{"sigma", s}, {"pClosed", closed}};
        json obstructions = json::array();
        std::string obs_text;
        for (int sg : s) {
            const int next = datum.phi(sg);
            if (std::binary_search(s.begin(), s.end(), next)) continue;
            const auto w = hilbert::obstruction_weight(datum, sg, next);
            obstructions.push_back({{"sigma", sg}, {"tau", next}, {"weight", w}});
            obs_text += (obs_text.empty() ? "" : " ") + hilbert::weight_to_string(w);
        }
        row["obstructions"] = obstructions;
        std::string go_text;
        if (closed) {
            const auto go = hilbert::go_stratum_report(datum, s);
            row["go"] = {{"dim", go.dim},
                         {"rank", go.rank},
                         {"equal", go.equal},
                         {"quotientDegreeExponent", go.quotient_degree_exponent},
                         {"thetaDegreeExponents", go.theta_degree_exponents}};
            go_text = "dim=" + std::to_string(go.dim) + " rank=" + std::to_string(go.rank) + " deg=p^" +
                      std::to_string(go.quotient_degree_exponent);
        }
        sig_rows.push_back(row);
        std::vector<int> sv(s.begin(), s.end());
        sig_csv.push_back({"{" + join(sv, ";") + "}", yes(closed), obs_text.empty() ? "-" : obs_text,
                           go_text.empty() ? "-" : go_text});
    }

    json weight_rows = json::array();
    std::vector<std::vector<std::string>> weight_csv;
    for (const auto& k : c.weights) {
        const bool in_min = hilbert::cone_membership(datum, k, hilbert::Cone::Min);
        const bool in_std = hilbert::cone_membership(datum, k, hilbert::Cone::Std);
        const bool in_hasse = hilbert::cone_membership(datum, k, hilbert::Cone::Hasse);
        std::vector<std::string> coords;
        for (const auto& a : hilbert::hasse_coordinates(datum, k)) coords.push_back(rational_string(a));
        const auto feas = hilbert::weight_feasibility(datum, k);
        json row{{"weight", k},
                 {"cmin", in_min},
                 {"cstd", in_std},
                 {"chasse", in_hasse},
                 {"hasseCoordinates", coords},
                 {"witness", feas ? json(feas->a) : json(nullptr)},
                 {"residue", feas ? json(feas->residue) : json(nullptr)}};
        weight_rows.push_back(row);
        std::string coord_text;
        for (std::size_t i = 0; i < coords.size(); ++i) coord_text += (i ? ";" : "") + coords[i];
        std::string wit;
        if (feas) {
            std::vector<int> av(feas->a.begin(), feas->a.end());
            wit = "(" + join(av, ";") + ")";
        }
        weight_csv.push_back({hilbert::weight_to_string(k), yes(in_min), yes(in_std), yes(in_hasse), coord_text,
                              feas ? wit : "none"});
    }

    std::vector<hilbert::IdempotentOrbitCheck> idem;
    if (c.kappa_degree > 0) idem = hilbert::idempotent_frobenius_check(datum, gf::build_field(datum.p, c.kappa_degree));
    bool idem_ok = std::all_of(idem.begin(), idem.end(), [](const auto& x) { return x.pass(); });
    const int code = ledger.consistent && idem_ok ? kOk : kVerifyFailed;

    if (fmt == Format::Json) {
        json idem_rows = json::array();
        for (const auto& x : idem)
            idem_rows.push_back({{"orbit", x.orbit},
                                 {"size", x.size},
                                 {"complete", x.complete},
                                 {"orthogonal", x.orthogonal},
                                 {"eigen", x.eigen},
                                 {"frobeniusPermutes", x.frobenius_permutes}});
        json doc{{"command", "hilbert"},
                 {"case", to_json(c)},
                 {"hasseWeights", ledger.hasse},
                 {"obstructionConsistent", ledger.consistent},
                 {"allSigmaPClosed", split_completely},
                 {"sigmas", sig_rows},
                 {"weights", weight_rows},
                 {"idempotents", idem_rows}};
        out << doc.dump(2) << "\n";
        return code;
    }
    if (fmt == Format::Csv) {
        print_csv(out, {"sigma", "pClosed", "obstruction", "go"}, sig_csv);
        out << "\n";
        print_csv(out, {"weight", "cmin", "cstd", "chasse", "hasseCoordinates", "witness"}, weight_csv);
        return code;
    }
    out << "p=" << datum.p << " g=" << g << " orbits=(" << join(datum.orbit_sizes, ",") << ")\n";
    for (int s = 0; s < g; ++s) out << "hasse weight at " << s << ": " << hilbert::weight_to_string(ledger.hasse[s]) << "\n";
    out << "obstruction(sigma, phi sigma) = 2 hasse(phi sigma): " << yes(ledger.consistent) << "\n";
    if (split_completely) out << "p split completely: p-closed for all Sigma\n";
    for (std::size_t k = 0; k < c.sigmas.size(); ++k) {
        const auto& r = sig_csv[k];
        if (r[1] == "true") out << "Sigma " << r[0] << ": p-closed; GO " << r[3] << "\n";
        else out << "Sigma " << r[0] << ": not p-closed; obstruction weight " << r[2] << "\n";
    }
    if (!weight_csv.empty()) {
        Table t({"weight", "cmin", "cstd", "chasse", "hasseCoordinates", "witness"});
        for (auto& r : weight_csv) t.add(r);
        t.print(out);
    }
    for (const auto& x : idem)
        out << "idempotents orbit " << x.orbit << " (size " << x.size << "): " << (x.pass() ? "pass" : "FAIL") << "\n";
    return code;
}

int cmd_verify(const verify::Options& opt, Format fmt, std::ostream& out) {
    const auto results = verify::run_all(opt);
    bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    if (fmt == Format::Json) {
        json rows = json::array();
        for (const auto& r : results)
            rows.push_back({{"suite", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"counterexample", r.counterexample}});
        json doc{{"command", "verify"},
                 {"seed", opt.seed},
                 {"maxD", opt.max_d},
                 {"orbitMax", opt.orbit_max},
                 {"suites", rows},
                 {"pass", ok}};
        out << doc.dump(2) << "\n";
    } else if (fmt == Format::Csv) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) rows.push_back({r.name, yes(r.pass), std::to_string(r.cases)});
        print_csv(out, {"suite", "pass", "cases"}, rows);
    } else {
        out << "seed=" << opt.seed << " max-d=" << opt.max_d << " orbit-max=" << opt.orbit_max << "\n";
        for (const auto& r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(22) << r.name << std::right << std::setw(9)
                << r.cases << " cases  " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
            if (!r.pass) out << "  counterexample: " << r.counterexample << "\n";
        }
    }
    return ok ? kOk : kVerifyFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Foliation, Ekedahl-Oort and Hilbert-modular calculators"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string case_path;
    std::uint64_t cap = eo::kDefaultLabelCap;
    verify::Options vopt;

    auto add_common = [&](CLI::App* sub) { sub->add_option("--format", format, "table, json or csv"); };
    auto* strata = app.add_subcommand("strata", "Scan every EO label of a unitary case");
    strata->add_option("case", case_path, "case file (JSON)")->required();
    strata->add_option("--cap", cap, "label enumeration cap");
    add_common(strata);
    auto* fol = app.add_subcommand("foliation", "Rank, corank, slopes and cascade of a unitary case");
    fol->add_option("case", case_path, "case file (JSON)")->required();
    add_common(fol);
    auto* hil = app.add_subcommand("hilbert", "Cones, p-closedness and GO strata of a Hilbert case");
    hil->add_option("case", case_path, "case file (JSON)")->required();
    add_common(hil);
    auto* ver = app.add_subcommand("verify", "Run the cross-module verification suites");
    ver->add_option("--max-d", vopt.max_d, "rank bound for the strata suites");
    ver->add_option("--orbit-max", vopt.orbit_max, "orbit size bound for the strata suites");
    ver->add_option("--seed", vopt.seed, "seed for the randomized suites");
    ver->add_option("--cap", vopt.cap, "label enumeration cap");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        const Format fmt = parse_format(format);
        if (*strata) return cmd_strata(parse_unitary(read_case_file(case_path)), fmt, cap, out);
        if (*fol) return cmd_foliation(parse_unitary(read_case_file(case_path)), fmt, out);
        if (*hil) return cmd_hilbert(parse_hilbert(read_case_file(case_path)), fmt, out);
        if (vopt.max_d < 1 || vopt.orbit_max < 1) throw InputError("--max-d and --orbit-max must be positive");
        return cmd_verify(vopt, fmt, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    }
}

}  // namespace shimfol::cli
