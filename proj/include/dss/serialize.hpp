#pragma once

#include <string>
#include <string_view>

#include "dss/codec.hpp"
#include "dss/core.hpp"
#include "dss/verifier.hpp"

namespace dss {

// {"v":..,"sets":[[..],..],"provenance":"..","claimed_index":..|null}
std::string to_json(const DifferenceSystem& d);
// Throws ParseError for malformed documents and the DifferenceSystem::create
// errors for well-formed but invalid families.
DifferenceSystem dss_from_json(std::string_view text);

std::string to_json(const VerificationReport& r);
std::string to_json(const SyncStats& s);

}  // namespace dss
