#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pfe {

struct SuiteResult {
    std::vector<std::pair<std::string, bool>> lines;

    bool ok() const;
    void add(std::string name, bool pass) { lines.emplace_back(std::move(name), pass); }
    void merge(const SuiteResult& other);
};

// Orthogonality of the S2-type and S1-type triangles (both orders), for
// all built-in models and lambda in {0, 1/4, 1}.
SuiteResult suite_orthogonality(unsigned nmax);

// Expansion/reconstruction round-trips for all theorems and formula
// variants, plus inverse-relation round-trips on random sequences.
SuiteResult suite_roundtrip(unsigned nmax);

// Dual-path S1 tables (reversion vs inversion vs model closed forms) and
// the closed-form expansions of (x)_n and x^n vs the generic engine.
SuiteResult suite_closedforms(unsigned nmax);

// Boundary identity, x = 0 specialization, order reduction, Sheffer
// recurrence, and Sheffer orthonormality pairings.
SuiteResult suite_identities(unsigned nmax);

SuiteResult suite_all(unsigned nmax);

}  // namespace pfe
