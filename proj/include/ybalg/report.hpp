// The master cross-check: every published value for a group gets a record
// with the value computed from first principles next to it. Mismatches are
// data, not failures; the report is deterministic byte-for-byte.
#pragma once

#include <string>
#include <vector>

#include "ybalg/catalog.hpp"
#include "ybalg/envelope.hpp"

namespace ybalg {

struct CheckRecord {
    std::string id;
    std::string anchor;
    std::string computed;
    std::string printed;  // empty -> UNPRINTED
    std::string status;   // PASS | MISMATCH | UNPRINTED
};

struct VerificationReport {
    GroupSpec spec;
    std::string pairing;          // active convention for the dual data
    std::string lambda_r_square;  // "+1" or "-1"
    std::vector<std::pair<std::string, std::string>> backends;  // degree tag -> backend used
    std::vector<CheckRecord> checks;

    int passes() const;
    int mismatches() const;
    int unprinted() const;
};

struct ReportOptions {
    int max_degree = 4;          // primal degrees computed exactly
    bool extended_series = true; // push primal dims to degree 5 for published series
    Pairing pairing = Pairing::Straight;
    RSquareSign rsq = RSquareSign::CommutesWithSelf;
};

VerificationReport verification_report(const GroupSpec& spec, const ReportOptions& opt = {});

}  // namespace ybalg
