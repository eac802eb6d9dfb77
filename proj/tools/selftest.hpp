#pragma once

#include <string>
#include <vector>

namespace pcdec::cli {

struct PropResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Brute-force oracle suite behind `pcdec selftest`: exhaustive codeword
// scans and sampled guarantees with zero tolerance.  `quick` shrinks the
// sample sizes.  `inject_fault`, when >= 0, deliberately corrupts the
// expected value of that property (harness test hook).
std::vector<PropResult> run_selftest(bool quick, int inject_fault = -1);

}  // namespace pcdec::cli
