#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncat/kernels.hpp"

namespace ncat::cli {

enum class Format { text, json };

struct RunConfig {
    std::string command;
    std::string input;
    std::size_t level = 2;
    std::string category = "w";  // w | v | x
    std::string target = "g";    // g | f
    std::uint64_t seed = 0;
    std::size_t samples = 1000;  // cells per level
    std::uint32_t bound = 3;     // entry bound for enumerated W/V cells
    std::size_t max_checks = 0;  // tuples per axiom entry, 0 = all
    bool closure = false;
    bool emit = false;
    Execution exec = Execution::parallel;
    Format format = Format::text;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the `ncat` executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncat::cli
