#pragma once

// Named identity checks: every machine-checkable identity in scope, packaged
// for the CLI `verify` command and the acceptance suite. Each check returns a
// VerificationReport; `quick` trims grids and Monte Carlo budgets.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vdw/couples.hpp"

namespace vdw::checks {

struct CheckConfig {
    bool quick = false;
    uint64_t seed = 0x5eedc0de5eedc0deULL;  // documented default; never time-based

    long draws() const { return quick ? 20000 : 200000; }
    long product_n() const { return quick ? 2000 : 10000; }
};

struct NamedCheck {
    std::string id;
    std::string description;
    std::function<couples::VerificationReport(const CheckConfig&)> run;
};

// stable string hash for per-check RNG stream ids
uint64_t fnv64(const std::string& s);

const std::vector<NamedCheck>& all_checks();

// nullptr if not found
const NamedCheck* find_check(const std::string& id);

}  // namespace vdw::checks
