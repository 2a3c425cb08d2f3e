#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wlax/series.hpp"

namespace wlax {

// Outcome of a verification.  Residues are the offending coefficients;
// info carries extra key/value facts for the JSON output.
struct Report {
    std::string check;
    bool pass = true;
    int floor = kExact;
    std::vector<Residue> residues;
    std::vector<std::pair<std::string, std::string>> info;

    void fail(Residue r) {
        pass = false;
        residues.push_back(std::move(r));
    }
    void note(std::string k, std::string v) { info.emplace_back(std::move(k), std::move(v)); }
};

}  // namespace wlax
