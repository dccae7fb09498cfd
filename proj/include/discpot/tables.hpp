#pragma once

#include "discpot/geometries.hpp"

namespace discpot {

// One expected-vs-computed comparison inside a verification case.
struct TableCheck {
    std::string label;                 // which object the entry belongs to
    std::map<std::string, int> coords;
    Rational expected;
    Rational computed;
    // Cross-check entries are reported but do not fail the case; they
    // cover published values whose conventions could not be pinned down
    // exactly (see README).
    bool crosscheck = false;

    bool ok() const { return expected == computed; }
};

struct VerificationReport {
    std::string case_name;
    std::vector<TableCheck> checks;
    bool residual_verified = false;

    int matched() const;
    int failed() const;
    int crosscheck_failed() const;
    bool passed() const;  // every non-crosscheck entry matches
};

std::vector<std::string> corpus_case_names();
VerificationReport verify_case(const std::string& name);
std::vector<VerificationReport> verify_all();

}  // namespace discpot
