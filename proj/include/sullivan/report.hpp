#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sullivan/unravel.hpp"

namespace sullivan {

struct RunOptions {
    int max_codegree = 24;
    int max_degree = 24;  // loop-homology side
    std::vector<int> denominator;
    bool denominator_auto = true;
    std::string format = "text";  // "text" | "machine"
    std::uint64_t seed = 0;
    std::string certificate_text;  // verify: machine report of a prior run
};

// Exit status contract: 0 success, 1 mathematical refusal (a theorem about
// the input, carrying a certificate), 2 input error.
struct RunResult {
    int exit_code = 0;
    std::string text;
    std::string machine;  // JSON, byte-identical for fixed input and flags
};

// Commands: cohomology | hilbert | presentation | classify | standard-form |
// unravel | loop-homology | duality | hochschild-predict | verify.
RunResult run(const std::string& command, const std::string& model_text, const RunOptions& options);

std::string input_digest(const std::string& text);  // FNV-1a 64, hex

}  // namespace sullivan
