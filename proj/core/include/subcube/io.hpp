#pragma once

#include <string>

#include "subcube/dist.hpp"

namespace subcube {

/// Instance JSON:
///   {"kind":"explicit","n":N,"pmf":[...]}
///   {"kind":"product","bias":[...]}
///   {"kind":"junta","n":N,"vars":[...1-based...],"innerPmf":[...]}
/// Loaders validate every invariant (pmf sums, bias ranges, var ranges).
DistributionSpec load_spec_json(const std::string& text);
DistributionSpec load_spec_file(const std::string& path);
std::string spec_to_json(const DistributionSpec& spec);
void save_spec_file(const DistributionSpec& spec, const std::string& path);

/// Deterministic float formatting shared by every CSV/JSON emitter.
std::string format_double(double v);

}  // namespace subcube
