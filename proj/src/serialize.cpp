#include "dss/serialize.hpp"

#include <json.hpp>

#include "dss/error.hpp"

namespace dss {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const DifferenceSystem& d) {
  ordered_json j;
  j["v"] = d.modulus();
  j["sets"] = d.sets();
  j["provenance"] = d.provenance();
  j["claimed_index"] = d.claimed_index() ? ordered_json(*d.claimed_index()) : ordered_json(nullptr);
  return j.dump();
}

DifferenceSystem dss_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse_error, e.what());
  }
  if (!j.is_object()) fail(Errc::parse_error, "document must be a JSON object");
  if (!j.contains("v") || !j["v"].is_number_integer()) fail(Errc::parse_error, "\"v\" must be an integer");
  if (!j.contains("sets") || !j["sets"].is_array()) fail(Errc::parse_error, "\"sets\" must be an array");

  std::vector<std::vector<std::int64_t>> sets;
  for (const auto& s : j["sets"]) {
    if (!s.is_array()) fail(Errc::parse_error, "each set must be an array");
    auto& out = sets.emplace_back();
    for (const auto& x : s) {
      if (!x.is_number_integer()) fail(Errc::parse_error, "set elements must be integers");
      if (x.is_number_unsigned() && x.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        fail(Errc::element_out_of_range, "element too large");
      }
      out.push_back(x.get<std::int64_t>());
    }
  }
  if (j["v"].is_number_unsigned() && j["v"].get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    fail(Errc::invalid_parameter, "modulus exceeds 2^63 - 1");
  }

  std::string provenance;
  if (j.contains("provenance") && !j["provenance"].is_null()) {
    if (!j["provenance"].is_string()) fail(Errc::parse_error, "\"provenance\" must be a string");
    provenance = j["provenance"].get<std::string>();
  }
  std::optional<Count> claim;
  if (j.contains("claimed_index") && !j["claimed_index"].is_null()) {
    if (!j["claimed_index"].is_number_unsigned()) {
      fail(Errc::parse_error, "\"claimed_index\" must be a nonnegative integer or null");
    }
    claim = j["claimed_index"].get<Count>();
  }
  return DifferenceSystem::create(j["v"].get<std::int64_t>(), sets, std::move(provenance), claim);
}

std::string to_json(const VerificationReport& r) {
  ordered_json j;
  j["v"] = r.v;
  j["q"] = r.q;
  j["redundancy"] = r.redundancy;
  j["rate"] = r.rate.str();
  j["index"] = r.index;
  j["is_regular"] = r.is_regular;
  j["is_perfect"] = r.is_perfect;
  j["df_lambda"] = r.df_lambda ? ordered_json(*r.df_lambda) : ordered_json(nullptr);
  j["set_sizes"] = r.set_sizes;
  if (r.levenshtein_bound) {
    j["levenshtein_bound"] = r.levenshtein_bound->value();
    j["levenshtein_radicand"] = {{"numerator", r.levenshtein_bound->numerator},
                                 {"denominator", r.levenshtein_bound->denominator}};
  } else {
    j["levenshtein_bound"] = nullptr;
    j["levenshtein_radicand"] = nullptr;
  }
  j["wang_bound"] = r.wang_bound ? ordered_json(*r.wang_bound) : ordered_json(nullptr);
  j["meets_levenshtein_equality"] = r.meets_levenshtein_equality;
  return j.dump(2);
}

std::string to_json(const SyncStats& s) {
  ordered_json j;
  j["blocks"] = s.blocks;
  j["offsets_tested"] = s.offsets_tested;
  j["true_accepts"] = s.true_accepts;
  j["false_accepts"] = s.false_accepts;
  j["false_rejects"] = s.false_rejects;
  j["seed"] = s.seed;
  j["noise"] = s.noise;
  return j.dump(2);
}

}  // namespace dss
