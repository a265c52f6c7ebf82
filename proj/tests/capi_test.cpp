#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "dss/dss.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  dss_string_free(s);
  return out;
}

dss_family* z25() {
  const int64_t elements[] = {1, 2, 3, 4, 6, 15, 5, 9, 10, 14, 17, 24};
  const size_t sizes[] = {6, 6};
  dss_family* f = nullptr;
  REQUIRE(dss_family_create(25, elements, sizes, 2, &f) == DSS_OK);
  return f;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(dss_status_name(DSS_OK)) == "Ok");
  CHECK(std::string(dss_status_name(DSS_ERR_NOT_PRIME)) == "NotPrime");
  CHECK(std::string(dss_status_name(DSS_ERR_NULL_ARGUMENT)) == "NullArgument");

  dss_family* f = nullptr;
  CHECK(dss_quartic_pair(2, &f) == DSS_ERR_NOT_PRIME);
  CHECK(f == nullptr);
  CHECK(std::string(dss_last_error()).find("65") != std::string::npos);

  CHECK(dss_quartic_pair(1, nullptr) == DSS_ERR_NULL_ARGUMENT);
  CHECK(dss_family_create(5, nullptr, nullptr, 1, &f) == DSS_ERR_NULL_ARGUMENT);
  const int64_t overlap[] = {1, 2, 2, 3};
  const size_t sizes[] = {2, 2};
  CHECK(dss_family_create(5, overlap, sizes, 2, &f) == DSS_ERR_SETS_NOT_DISJOINT);
  CHECK(dss_family_create(5, overlap, sizes, 0, &f) == DSS_ERR_EMPTY_FAMILY);
  dss_family_free(nullptr);
}

TEST_CASE("families and verification") {
  dss_family* f = z25();
  CHECK(dss_family_modulus(f) == 25);
  CHECK(dss_family_set_count(f) == 2);
  CHECK(dss_family_redundancy(f) == 12);

  dss_report r{};
  REQUIRE(dss_verify(f, &r) == DSS_OK);
  CHECK(r.index == 3);
  CHECK(r.is_perfect);
  CHECK(r.is_regular);
  CHECK(r.rate_num == 12);
  CHECK(r.rate_den == 25);
  CHECK(r.has_bounds);
  CHECK(r.levenshtein_numerator == 144);
  CHECK(r.wang_bound == 12);
  CHECK(r.meets_levenshtein_equality);

  int matches = -1;
  CHECK(dss_check_claim(f, &matches) == DSS_ERR_NO_CLAIM);

  dss_family* claimed = nullptr;
  REQUIRE(dss_family_with_verified_claim(f, "worked example", &claimed) == DSS_OK);
  CHECK(dss_check_claim(claimed, &matches) == DSS_OK);
  CHECK(matches == 1);

  char* text = nullptr;
  REQUIRE(dss_family_to_json(claimed, &text) == DSS_OK);
  const auto json = take(text);
  CHECK(json ==
        R"({"v":25,"sets":[[1,2,3,4,6,15],[5,9,10,14,17,24]],"provenance":"worked example","claimed_index":3})");

  dss_family* back = nullptr;
  REQUIRE(dss_family_from_json(json.c_str(), &back) == DSS_OK);
  REQUIRE(dss_family_to_json(back, &text) == DSS_OK);
  CHECK(take(text) == json);

  CHECK(dss_family_from_json("{not json", &back) == DSS_ERR_PARSE);

  REQUIRE(dss_verify_json(f, &text) == DSS_OK);
  CHECK(take(text).find("\"index\": 3") != std::string::npos);

  dss_bounds b{};
  REQUIRE(dss_compute_bounds(17, 2, 2, &b) == DSS_OK);
  CHECK(b.defined);
  CHECK(b.levenshtein_ceiling == 8);
  CHECK(b.wang_bound == 8);
  REQUIRE(dss_compute_bounds(17, 1, 2, &b) == DSS_OK);
  CHECK_FALSE(b.defined);

  dss_family_free(back);
  dss_family_free(claimed);
  dss_family_free(f);
}

TEST_CASE("constructions and products") {
  dss_family *a = nullptr, *b = nullptr, *p = nullptr;
  REQUIRE(dss_paley(7, 3, &a) == DSS_OK);
  REQUIRE(dss_paley(11, 5, &b) == DSS_OK);
  REQUIRE(dss_direct_product(a, b, &p) == DSS_OK);
  dss_report r{};
  REQUIRE(dss_verify(p, &r) == DSS_OK);
  CHECK(r.v == 77);
  CHECK(r.q == 15);
  CHECK(r.index == 2);

  dss_family* same = nullptr;
  CHECK(dss_direct_product(a, a, &same) == DSS_ERR_NOT_COPRIME);

  dss_parameters params{};
  uint64_t closed = 0;
  REQUIRE(dss_predict_paley_product(7, 3, 11, 5, &params, &closed) == DSS_OK);
  CHECK(params.v == 77);
  CHECK(params.index == 2);
  CHECK(closed == 2);
  REQUIRE(dss_predict_hyperplane_product(2, 2, 3, 2, &params) == DSS_OK);
  CHECK(params.v == 3751);
  CHECK(params.index == 90);
  CHECK(dss_predict_hyperplane_product(7, 2, 3, 2, &params) == DSS_ERR_NOT_ADMISSIBLE);

  dss_sequence* x = nullptr;
  dss_family *ds = nullptr, *e = nullptr;
  REQUIRE(dss_identity_fhs(7, &x) == DSS_OK);
  CHECK(dss_sequence_period(x) == 7);
  CHECK(dss_sequence_symbols(x)[3] == 3);
  REQUIRE(dss_qr_difference_set(7, &ds) == DSS_OK);
  REQUIRE(dss_fhs_ds_product(x, ds, &e) == DSS_OK);
  REQUIRE(dss_verify(e, &r) == DSS_OK);
  CHECK(r.v == 49);
  CHECK(r.redundancy == 21);
  CHECK(r.rate_num == 3);
  CHECK(r.rate_den == 7);
  CHECK(r.index >= 7);

  dss_family* xf = nullptr;
  dss_sequence* round = nullptr;
  REQUIRE(dss_sequence_to_family(x, &xf) == DSS_OK);
  REQUIRE(dss_family_to_sequence(xf, &round) == DSS_OK);
  CHECK(std::memcmp(dss_sequence_symbols(round), dss_sequence_symbols(x), 7 * sizeof(uint32_t)) == 0);
  dss_sequence* bad = nullptr;
  CHECK(dss_family_to_sequence(a, &bad) == DSS_ERR_NOT_RATE_ONE);

  size_t count = 0;
  REQUIRE(dss_scan_prime_forms("16n2+1", 10, nullptr, 0, &count) == DSS_OK);
  CHECK(count == 6);
  std::vector<uint64_t> ns(count);
  REQUIRE(dss_scan_prime_forms("16n2+1", 10, ns.data(), ns.size(), &count) == DSS_OK);
  CHECK(ns == std::vector<uint64_t>{1, 4, 5, 6, 9, 10});
  CHECK(dss_scan_prime_forms("7n2+1", 10, nullptr, 0, &count) == DSS_ERR_INVALID_PARAMETER);

  char* csv = nullptr;
  REQUIRE(dss_paley_row_csv(19, 3, &csv) == DSS_OK);
  CHECK(take(csv) == "n,v,m,q,rho,redundancy_rate,construction\n4,19,3,3,3,9/19,paley\n");
  CHECK(dss_table_csv("table9", &csv) == DSS_ERR_INVALID_PARAMETER);

  dss_sequence_free(round);
  dss_family_free(xf);
  dss_family_free(e);
  dss_family_free(ds);
  dss_sequence_free(x);
  dss_family_free(p);
  dss_family_free(b);
  dss_family_free(a);
}

TEST_CASE("codec") {
  dss_family* f = z25();
  dss_layout* l = nullptr;
  REQUIRE(dss_layout_create(f, 2, &l) == DSS_OK);
  CHECK(dss_layout_length(l) == 25);
  CHECK(dss_layout_free_count(l) == 13);
  CHECK(dss_layout_tolerance(l) == 1);
  char* pattern = nullptr;
  REQUIRE(dss_layout_pattern(l, &pattern) == DSS_OK);
  CHECK(take(pattern) == "*000010**11***10*1******1");

  std::vector<uint32_t> payload(13), window(25), out(13);
  for (size_t i = 0; i < payload.size(); ++i) payload[i] = static_cast<uint32_t>(i % 2);
  REQUIRE(dss_encode(l, payload.data(), payload.size(), window.data(), window.size()) == DSS_OK);
  REQUIRE(dss_decode(l, window.data(), window.size(), out.data(), out.size()) == DSS_OK);
  CHECK(out == payload);
  int synced = 0;
  REQUIRE(dss_is_sync(l, window.data(), window.size(), &synced) == DSS_OK);
  CHECK(synced == 1);
  CHECK(dss_encode(l, payload.data(), 12, window.data(), window.size()) == DSS_ERR_PAYLOAD_LENGTH_MISMATCH);
  CHECK(dss_decode(l, window.data(), 24, out.data(), out.size()) == DSS_ERR_LENGTH_MISMATCH);

  dss_sync_stats s{};
  REQUIRE(dss_simulate(l, 200, "exact-1", 3, &s) == DSS_OK);
  CHECK(s.blocks == 200);
  CHECK(s.false_accepts == 0);
  CHECK(s.false_rejects == 0);
  CHECK(s.true_accepts == 200);
  CHECK(s.seed == 3);
  CHECK(dss_simulate(l, 200, "exact-2", 3, &s) == DSS_ERR_INVALID_PARAMETER);
  CHECK(dss_simulate(l, 200, "bogus", 3, &s) == DSS_ERR_INVALID_PARAMETER);

  char* json = nullptr;
  REQUIRE(dss_simulate_json(l, 20, "iid-0", 3, &json) == DSS_OK);
  CHECK(take(json).find("\"seed\": 3") != std::string::npos);

  dss_layout* small = nullptr;
  dss_family* t = nullptr;
  REQUIRE(dss_sextic_triple(1, &t) == DSS_OK);
  CHECK(dss_layout_create(t, 2, &small) == DSS_ERR_ALPHABET_TOO_SMALL);

  dss_family_free(t);
  dss_layout_free(l);
  dss_family_free(f);
}
