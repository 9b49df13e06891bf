#pragma once

// Command-line front end. Case files are JSON; see docs/case_format.md.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 cap exceeded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "shimfol/eo.hpp"
#include "shimfol/hilbert.hpp"
#include "shimfol/signature.hpp"
#include "shimfol/verify.hpp"

namespace shimfol::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kCapExceeded = 3 };

enum class Format { Table, Json, Csv };
Format parse_format(const std::string& s);

struct UnitaryCase {
    std::uint32_t p = 2;
    CMTypeDatum datum;
    eo::PairSet sigma;
};

struct HilbertCase {
    hilbert::SplittingDatum datum;
    std::vector<hilbert::SigmaSet> sigmas;
    std::vector<hilbert::Weight> weights;
    int kappa_degree = 0;  // 0: no idempotent check
};

/// Parses and validates; throws InputError on any schema or constraint violation.
UnitaryCase parse_unitary(const nlohmann::json& j);
HilbertCase parse_hilbert(const nlohmann::json& j);
nlohmann::json to_json(const UnitaryCase& c);
nlohmann::json to_json(const HilbertCase& c);

/// Reads a case file; throws InputError on I/O or JSON syntax errors.
nlohmann::json read_case_file(const std::string& path);

/// "3.1.2;1.2" style encoding of a label (components separated by ';').
std::string encode_label(const eo::EOLabel& label);

int cmd_strata(const UnitaryCase& c, Format fmt, std::uint64_t cap, std::ostream& out);
int cmd_foliation(const UnitaryCase& c, Format fmt, std::ostream& out);
int cmd_hilbert(const HilbertCase& c, Format fmt, std::ostream& out);
int cmd_verify(const verify::Options& opt, Format fmt, std::ostream& out);

/// Full entry point: parses argv, dispatches, maps exceptions to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shimfol::cli
