#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "logsmooth/core_signal.hpp"

namespace logsmooth {

struct BuiltinFamily {
  std::string name;
  std::string usage;  // e.g. "cosine K"
  std::string description;
};

const std::vector<BuiltinFamily>& builtin_families();

// "cosine 3", "random", "lacunary 0.5" ...; random families draw from Rng(seed).
Spectrum builtin_spectrum(const std::string& text, std::uint64_t seed, int J);

// Exit codes: 0 ok, 2 usage or validation error, 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logsmooth
