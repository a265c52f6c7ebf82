#include "dss/dss.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dss/codec.hpp"
#include "dss/constructions.hpp"
#include "dss/error.hpp"
#include "dss/products.hpp"
#include "dss/serialize.hpp"
#include "dss/tables.hpp"
#include "dss/verifier.hpp"

struct dss_family {
  dss::DifferenceSystem value;
};

struct dss_sequence {
  dss::FrequencyHoppingSequence value;
};

struct dss_layout {
  dss::MarkerLayout value;
};

static_assert(static_cast<int>(dss::Errc::budget_exceeded) == DSS_ERR_BUDGET_EXCEEDED);
static_assert(static_cast<int>(dss::Errc::element_out_of_range) == DSS_ERR_ELEMENT_OUT_OF_RANGE);
static_assert(static_cast<int>(dss::Errc::parse_error) == DSS_ERR_PARSE);

namespace {

thread_local std::string g_last_error;

struct NullArgument {
  const char* name;
};

template <class T>
T& need(T* p, const char* name) {
  if (p == nullptr) throw NullArgument{name};
  return *p;
}

const char* need_str(const char* p, const char* name) {
  if (p == nullptr) throw NullArgument{name};
  return p;
}

template <class F>
dss_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return DSS_OK;
  } catch (const dss::Error& e) {
    g_last_error = e.what();
    return static_cast<dss_status>(e.code());
  } catch (const NullArgument& e) {
    g_last_error = std::string("null argument: ") + e.name;
    return DSS_ERR_NULL_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DSS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DSS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return DSS_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

dss_status emit(dss_family** out, auto&& make) {
  return guarded([&] {
    auto& slot = need(out, "out");
    slot = new dss_family{make()};
  });
}

dss_status emit_sequence(dss_sequence** out, auto&& make) {
  return guarded([&] {
    auto& slot = need(out, "out");
    slot = new dss_sequence{make()};
  });
}

dss_status emit_string(char** out, auto&& make) {
  return guarded([&] {
    auto& slot = need(out, "out");
    slot = dup_string(make());
  });
}

dss::NoiseModel parse_noise(const char* text) {
  auto noise = dss::NoiseModel::parse(std::string(need_str(text, "noise")));
  if (!noise) dss::fail(dss::Errc::invalid_parameter, std::string("unrecognized noise model: ") + text);
  return *noise;
}

}  // namespace

extern "C" {

const char* dss_status_name(dss_status status) {
  switch (status) {
    case DSS_ERR_NULL_ARGUMENT: return "NullArgument";
    case DSS_ERR_INTERNAL: return "Internal";
    default: return dss::errc_name(static_cast<dss::Errc>(status)).data();
  }
}

const char* dss_last_error(void) { return g_last_error.c_str(); }

void dss_string_free(char* s) { std::free(s); }

dss_status dss_family_create(int64_t v, const int64_t* elements, const size_t* set_sizes,
                             size_t set_count, dss_family** out) {
  return emit(out, [&] {
    std::vector<std::vector<std::int64_t>> sets;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < set_count; ++i) {
      const std::size_t n = (&need(set_sizes, "set_sizes"))[i];
      if (n > 0) need(elements, "elements");
      sets.emplace_back(elements + offset, elements + offset + n);
      offset += n;
    }
    return dss::DifferenceSystem::create(v, sets);
  });
}

dss_status dss_family_from_json(const char* json, dss_family** out) {
  return emit(out, [&] { return dss::dss_from_json(need_str(json, "json")); });
}

dss_status dss_family_to_json(const dss_family* family, char** out) {
  return emit_string(out, [&] { return dss::to_json(need(family, "family").value); });
}

void dss_family_free(dss_family* family) { delete family; }

int64_t dss_family_modulus(const dss_family* family) { return family ? family->value.modulus() : 0; }

size_t dss_family_set_count(const dss_family* family) { return family ? family->value.set_count() : 0; }

uint64_t dss_family_redundancy(const dss_family* family) {
  return family ? family->value.redundancy() : 0;
}

dss_status dss_family_with_verified_claim(const dss_family* family, const char* provenance,
                                          dss_family** out) {
  return emit(out, [&] {
    const auto& d = need(family, "family").value;
    auto copy = d.with_claim(dss::verify(d).index);
    return provenance ? copy.with_provenance(provenance) : copy;
  });
}

dss_status dss_verify(const dss_family* family, dss_report* out) {
  return guarded([&] {
    const auto r = dss::verify(need(family, "family").value);
    auto& o = need(out, "out");
    o = dss_report{};
    o.v = r.v;
    o.q = r.q;
    o.redundancy = r.redundancy;
    o.rate_num = static_cast<uint64_t>(r.rate.num);
    o.rate_den = static_cast<uint64_t>(r.rate.den);
    o.index = r.index;
    o.is_regular = r.is_regular;
    o.is_perfect = r.is_perfect;
    o.has_df_lambda = r.df_lambda.has_value();
    o.df_lambda = r.df_lambda.value_or(0);
    o.has_bounds = r.levenshtein_bound.has_value();
    if (r.levenshtein_bound) {
      o.levenshtein_numerator = r.levenshtein_bound->numerator;
      o.levenshtein_denominator = r.levenshtein_bound->denominator;
      o.levenshtein_bound = r.levenshtein_bound->value();
    }
    o.wang_bound = r.wang_bound.value_or(0);
    o.meets_levenshtein_equality = r.meets_levenshtein_equality;
  });
}

dss_status dss_verify_json(const dss_family* family, char** out) {
  return emit_string(out, [&] { return dss::to_json(dss::verify(need(family, "family").value)); });
}

dss_status dss_check_claim(const dss_family* family, int* matches) {
  return guarded([&] { need(matches, "matches") = dss::check_claim(need(family, "family").value); });
}

dss_status dss_compute_bounds(int64_t v, uint64_t q, uint64_t rho, dss_bounds* out) {
  return guarded([&] {
    auto& o = need(out, "out");
    const auto lev = dss::levenshtein_bound(v, q, rho);
    const auto wang = dss::wang_bound(v, q, rho);
    o = dss_bounds{};
    o.defined = lev.has_value();
    if (lev) {
      o.levenshtein_bound = lev->value();
      o.levenshtein_ceiling = lev->ceiling();
      o.wang_bound = *wang;
    }
  });
}

dss_status dss_cyclotomic(uint64_t p, uint64_t f, uint64_t q, dss_family** out) {
  return emit(out, [&] { return dss::cyclotomic_dss(p, f, q); });
}

dss_status dss_quartic_pair(uint64_t n, dss_family** out) {
  return emit(out, [&] { return dss::quartic_pair(n); });
}

dss_status dss_sextic_triple(uint64_t n, dss_family** out) {
  return emit(out, [&] { return dss::sextic_triple(n); });
}

dss_status dss_sextic_pair(uint64_t n, dss_family** out) {
  return emit(out, [&] { return dss::sextic_pair(n); });
}

dss_status dss_paley(uint64_t p, uint64_t q, dss_family** out) {
  return emit(out, [&] { return dss::paley_dss(p, q); });
}

dss_status dss_qr_difference_set(uint64_t p, dss_family** out) {
  return emit(out, [&] { return dss::qr_difference_set(p); });
}

dss_status dss_scan_prime_forms(const char* form, uint64_t n_max, uint64_t* values, size_t capacity,
                                size_t* count) {
  return guarded([&] {
    const auto parsed = dss::parse_prime_form(need_str(form, "form"));
    if (!parsed) dss::fail(dss::Errc::invalid_parameter, std::string("unknown prime form: ") + form);
    const auto ns = dss::scan_prime_forms(*parsed, n_max);
    need(count, "count") = ns.size();
    if (capacity > 0) need(values, "values");
    for (std::size_t i = 0; i < ns.size() && i < capacity; ++i) values[i] = ns[i];
  });
}

dss_status dss_sequence_create(size_t alphabet, const uint32_t* symbols, size_t period,
                               dss_sequence** out) {
  return emit_sequence(out, [&] {
    if (period > 0) need(symbols, "symbols");
    return dss::FrequencyHoppingSequence::create(alphabet, std::vector<dss::Symbol>(symbols, symbols + period));
  });
}

dss_status dss_identity_fhs(size_t v, dss_sequence** out) {
  return emit_sequence(out, [&] { return dss::identity_fhs(v); });
}

dss_status dss_cyclotomic_fhs(uint64_t p, uint64_t q, dss_sequence** out) {
  return emit_sequence(out, [&] { return dss::cyclotomic_fhs(p, q); });
}

void dss_sequence_free(dss_sequence* seq) { delete seq; }

size_t dss_sequence_period(const dss_sequence* seq) { return seq ? seq->value.period() : 0; }

const uint32_t* dss_sequence_symbols(const dss_sequence* seq) {
  return seq ? seq->value.symbols().data() : nullptr;
}

dss_status dss_sequence_to_family(const dss_sequence* seq, dss_family** out) {
  return emit(out, [&] { return dss::to_difference_system(need(seq, "seq").value); });
}

dss_status dss_family_to_sequence(const dss_family* family, dss_sequence** out) {
  return emit_sequence(out, [&] { return dss::to_hopping_sequence(need(family, "family").value); });
}

dss_status dss_direct_product(const dss_family* a, const dss_family* b, dss_family** out) {
  return emit(out, [&] { return dss::direct_product(need(a, "a").value, need(b, "b").value); });
}

dss_status dss_fhs_embedding_product(const dss_sequence* x, const dss_family* b, dss_family** out) {
  return emit(out, [&] { return dss::fhs_embedding_product(need(x, "x").value, need(b, "b").value); });
}

dss_status dss_fhs_ds_product(const dss_sequence* x, const dss_family* d, dss_family** out) {
  return emit(out, [&] { return dss::fhs_ds_product(need(x, "x").value, need(d, "d").value); });
}

dss_status dss_predict_paley_product(uint64_t v, uint64_t q, uint64_t v2, uint64_t q2,
                                     dss_parameters* out, uint64_t* closed_form_index) {
  return guarded([&] {
    const auto pred = dss::predict_paley_product(v, q, v2, q2);
    need(out, "out") = {pred.params.v, pred.params.m, pred.params.q, pred.params.index};
    if (closed_form_index) *closed_form_index = pred.closed_form_index;
  });
}

dss_status dss_predict_hyperplane_product(uint64_t p, uint64_t s, uint64_t p2, uint64_t s2,
                                          dss_parameters* out) {
  return guarded([&] {
    const auto pred = dss::predict_hyperplane_product(p, s, p2, s2);
    need(out, "out") = {pred.params.v, pred.params.m, pred.params.q, pred.params.index};
  });
}

dss_status dss_table_csv(const char* which, char** out) {
  return emit_string(out, [&] {
    const std::string name = need_str(which, "which");
    if (name == "table1") return dss::to_csv(dss::table1_rows());
    if (name == "paley-row") return dss::to_csv(dss::paley_rows());
    dss::fail(dss::Errc::invalid_parameter, "unknown table: " + name);
  });
}

dss_status dss_paley_row_csv(uint64_t p, uint64_t q, char** out) {
  return emit_string(out, [&] { return dss::to_csv(dss::paley_rows(p, q)); });
}

dss_status dss_layout_create(const dss_family* family, size_t alphabet, dss_layout** out) {
  return guarded([&] {
    auto& slot = need(out, "out");
    slot = new dss_layout{dss::layout_from_dss(need(family, "family").value, alphabet)};
  });
}

void dss_layout_free(dss_layout* layout) { delete layout; }

size_t dss_layout_length(const dss_layout* layout) { return layout ? layout->value.length() : 0; }

size_t dss_layout_free_count(const dss_layout* layout) {
  return layout ? layout->value.free_positions().size() : 0;
}

uint64_t dss_layout_tolerance(const dss_layout* layout) { return layout ? layout->value.tolerance() : 0; }

dss_status dss_layout_pattern(const dss_layout* layout, char** out) {
  return emit_string(out, [&] { return need(layout, "layout").value.pattern(); });
}

dss_status dss_encode(const dss_layout* layout, const uint32_t* payload, size_t payload_len,
                      uint32_t* window, size_t window_len) {
  return guarded([&] {
    const auto& l = need(layout, "layout").value;
    if (payload_len > 0) need(payload, "payload");
    if (window_len != l.length()) dss::fail(dss::Errc::length_mismatch, "output window has the wrong length");
    const auto w = dss::encode(l, std::vector<dss::Symbol>(payload, payload + payload_len));
    std::copy(w.symbols.begin(), w.symbols.end(), &need(window, "window"));
  });
}

dss_status dss_decode(const dss_layout* layout, const uint32_t* window, size_t window_len,
                      uint32_t* payload, size_t payload_len) {
  return guarded([&] {
    const auto& l = need(layout, "layout").value;
    if (window_len > 0) need(window, "window");
    const auto p = dss::decode(l, dss::CodeWindow{std::vector<dss::Symbol>(window, window + window_len)});
    if (payload_len != p.size()) dss::fail(dss::Errc::payload_length_mismatch, "output payload has the wrong length");
    if (!p.empty()) std::copy(p.begin(), p.end(), &need(payload, "payload"));
  });
}

dss_status dss_is_sync(const dss_layout* layout, const uint32_t* window, size_t window_len, int* synced) {
  return guarded([&] {
    const auto& l = need(layout, "layout").value;
    if (window_len > 0) need(window, "window");
    need(synced, "synced") =
        dss::is_sync(l, dss::CodeWindow{std::vector<dss::Symbol>(window, window + window_len)});
  });
}

dss_status dss_simulate(const dss_layout* layout, uint64_t blocks, const char* noise, uint64_t seed,
                        dss_sync_stats* out) {
  return guarded([&] {
    const auto s = dss::simulate_stream(need(layout, "layout").value, blocks, parse_noise(noise), seed);
    need(out, "out") = {s.blocks, s.offsets_tested, s.true_accepts, s.false_accepts, s.false_rejects, s.seed};
  });
}

dss_status dss_simulate_json(const dss_layout* layout, uint64_t blocks, const char* noise, uint64_t seed,
                             char** out) {
  return emit_string(out, [&] {
    return dss::to_json(dss::simulate_stream(need(layout, "layout").value, blocks, parse_noise(noise), seed));
  });
}

}  // extern "C"
