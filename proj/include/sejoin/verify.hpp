#pragma once

#include "sejoin/catalog.hpp"

#include <string>
#include <vector>

namespace sejoin {

struct VerifyCheck {
    std::string name;
    bool passed;
    std::string detail;  // nonempty on failure
};

// Regression gate over a catalog: validator pass on every entry, the
// integral tables against the rational engine, monoid laws, and the other
// classification identities.  Everything must pass for a clean exit.
std::vector<VerifyCheck> run_verify(const Catalog& catalog);

}  // namespace sejoin
