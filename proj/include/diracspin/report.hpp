#pragma once

#include <string>

#include "diracspin/checks.hpp"

namespace ds {

/// Stable JSON schema:
/// {meta:{seed,mass,count,tolerance,conventions}, checks:[{id,pass,
///  max_residual,worst_sample,anchor}]}.  Byte-stable for fixed inputs.
std::string report_json(const SuiteReport& rep);

/// One table row per check: id, anchor, residual, pass/fail, worst sample.
std::string report_markdown(const SuiteReport& rep);

}  // namespace ds
