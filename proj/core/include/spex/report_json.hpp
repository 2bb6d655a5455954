#pragma once

#include <string>

#include "spex/path_system.hpp"
#include "spex/spectral.hpp"
#include "spex/theorems.hpp"

namespace spex {

/// Rounds through a fixed 12-decimal representation so serialized numbers are
/// stable across runs and build modes.
double round12(double v);
std::string format12(double v);

// Deterministic JSON documents (keys sorted, numbers rounded via round12).
// Timing fields are included only when include_runtime is set, keeping the
// default output byte-identical across runs.
std::string to_json_string(const SearchReport& r, bool include_runtime = false,
                           int indent = -1);
std::string to_json_string(const StructureWitness& w, int indent = -1);
std::string to_json_string(const TheoremReport& r, bool include_runtime = false,
                           int indent = -1);
std::string to_json_string(const Lemma9Record& r, int indent = -1);
std::string to_json_string(const EigenWindowReport& r, int indent = -1);

}  // namespace spex
