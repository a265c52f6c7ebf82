#include "support.hpp"

#include <json.hpp>

#include "dss/constructions.hpp"
#include "dss/serialize.hpp"
#include "dss/tables.hpp"
#include "dss/verifier.hpp"

using namespace dss;
using nlohmann::json;

TEST_CASE("family json") {
  const auto d = z25().with_provenance("worked example").with_claim(3);
  const auto text = to_json(d);
  CHECK(text ==
        R"({"v":25,"sets":[[1,2,3,4,6,15],[5,9,10,14,17,24]],"provenance":"worked example","claimed_index":3})");
  CHECK(dss_from_json(text) == d);
  CHECK(to_json(z25()).find("\"claimed_index\":null") != std::string::npos);

  // sets are canonicalized on read
  const auto messy = dss_from_json(R"({"v":7,"sets":[[4,1,2]]})");
  CHECK(messy.set(0) == std::vector<Residue>{1, 2, 4});
  CHECK(messy.claimed_index() == std::nullopt);

  CHECK_ERRC(dss_from_json("{"), Errc::parse_error);
  CHECK_ERRC(dss_from_json("[]"), Errc::parse_error);
  CHECK_ERRC(dss_from_json(R"({"v":"7","sets":[]})"), Errc::parse_error);
  CHECK_ERRC(dss_from_json(R"({"v":7,"sets":[[1.5]]})"), Errc::parse_error);
  CHECK_ERRC(dss_from_json(R"({"v":7,"sets":[[1]],"claimed_index":-1})"), Errc::parse_error);
  CHECK_ERRC(dss_from_json(R"({"v":7,"sets":[[1],[1]]})"), Errc::sets_not_disjoint);
  CHECK_ERRC(dss_from_json(R"({"v":7,"sets":[]})"), Errc::empty_family);
}

TEST_CASE("property: every construction round-trips and re-verifies") {
  for (const auto& d : {quartic_pair(1), sextic_triple(3), sextic_pair(1), paley_dss(19, 3), qr_difference_set(11),
                        cyclotomic_dss(37, 3, 2)}) {
    const auto back = dss_from_json(to_json(d));
    CHECK(back == d);
    CHECK(check_claim(back));
  }
}

TEST_CASE("report json") {
  const auto j = json::parse(to_json(verify(z25())));
  // nlohmann::json sorts keys, so field order is checked on the raw text below
  for (const char* k : {"v", "q", "redundancy", "rate", "index", "is_regular", "is_perfect", "df_lambda",
                        "set_sizes", "levenshtein_bound", "wang_bound", "meets_levenshtein_equality"}) {
    CHECK(j.contains(k));
  }
  CHECK(j["rate"] == "12/25");
  CHECK(j["index"] == 3);
  CHECK(j["is_perfect"] == true);
  CHECK(j["levenshtein_bound"] == 12.0);
  CHECK(j["wang_bound"] == 12);

  const auto single = json::parse(to_json(verify(DifferenceSystem::create(5, {{0}}))));
  CHECK(single["index"] == 0);
  CHECK(single["levenshtein_bound"].is_null());
  CHECK(single["wang_bound"].is_null());

  const auto text = to_json(verify(z25()));
  CHECK(text.find("\"v\"") < text.find("\"q\""));
  CHECK(text.find("\"q\"") < text.find("\"redundancy\""));
}

TEST_CASE("sync stats json") {
  SyncStats s;
  s.blocks = 3;
  s.offsets_tested = 51;
  s.true_accepts = 3;
  s.seed = 9;
  s.noise = "exact-1";
  const auto j = json::parse(to_json(s));
  CHECK(j == json{{"blocks", 3}, {"offsets_tested", 51}, {"true_accepts", 3}, {"false_accepts", 0},
                  {"false_rejects", 0}, {"seed", 9}, {"noise", "exact-1"}});
}

TEST_CASE("tables") {
  const auto rows = table1_rows();
  REQUIRE(rows.size() == 15);
  CHECK(rows[14] == TableRow{6, 3889, 648, 2, 216, 1296, "sextic-pair"});
  CHECK(to_csv({rows[0]}) == "n,v,m,q,rho,redundancy_rate,construction\n1,17,4,2,2,8/17,quartic-pair\n");

  CHECK(paley_rows(19, 3).front() == TableRow{4, 19, 3, 3, 3, 9, "paley"});
  CHECK(paley_rows().size() == 5);
  CHECK(to_csv(paley_rows()) == to_csv(paley_rows()));
}
