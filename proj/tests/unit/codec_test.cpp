#include "support.hpp"

#include "../oracle.hpp"
#include "dss/codec.hpp"
#include "dss/constructions.hpp"

using namespace dss;

namespace {

CodeWindow window(std::vector<Symbol> s) { return CodeWindow{std::move(s)}; }

}  // namespace

TEST_CASE("layout of the worked example") {
  const auto l = layout_from_dss(z25(), 2);
  CHECK(l.pattern() == "*000010**11***10*1******1");
  CHECK(l.length() == 25);
  CHECK(l.free_positions().size() == 13);
  CHECK(l.marker_positions().size() == 12);
  CHECK(l.index() == 3);
  CHECK(l.tolerance() == 1);
  CHECK(l.marker_at(1) == std::optional<Symbol>{0});
  CHECK(l.marker_at(5) == std::optional<Symbol>{1});
  CHECK_FALSE(l.marker_at(0));

  CHECK(layout_from_dss(quartic_pair(1), 2).tolerance() == 0);
  CHECK(layout_from_dss(z25(), 7).alphabet() == 7);
  CHECK_ERRC(layout_from_dss(cyclotomic_dss(13, 2, 3), 2), Errc::alphabet_too_small);
}

TEST_CASE("encode and decode") {
  const auto l = layout_from_dss(z25(), 2);
  const auto zero = encode(l, std::vector<Symbol>(13, 0));
  for (std::size_t i = 0; i < 25; ++i) CHECK(zero.symbols[i] == (l.marker_at(i) == std::optional<Symbol>{1}));

  const std::vector<Symbol> ones(13, 1);
  CHECK(decode(l, encode(l, ones)) == ones);

  CHECK_ERRC(encode(l, std::vector<Symbol>(12, 0)), Errc::payload_length_mismatch);
  CHECK_ERRC(encode(l, std::vector<Symbol>(13, 2)), Errc::symbol_out_of_range);
  CHECK_ERRC(decode(l, window(std::vector<Symbol>(24, 0))), Errc::length_mismatch);

  oracle::Payloads src(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = src.next(13, 2);
    const auto w = encode(l, p);
    REQUIRE(decode(l, w) == p);
    REQUIRE(marker_distance(l, w) == 0);
    // payload lands on free positions in ascending order
    for (std::size_t k = 0; k < 13; ++k) REQUIRE(w.symbols[l.free_positions()[k]] == p[k]);
  }

  const auto wide = layout_from_dss(paley_dss(19, 3), 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = src.next(wide.free_positions().size(), 5);
    REQUIRE(decode(wide, encode(wide, p)) == p);
  }
}

TEST_CASE("splice") {
  const auto x = window({10, 11, 12, 13, 14});
  const auto y = window({20, 21, 22, 23, 24});
  CHECK(splice(x, y, 2) == window({13, 14, 20, 21, 22}));
  CHECK_ERRC(splice(x, y, 0), Errc::offset_out_of_range);
  CHECK_ERRC(splice(x, y, 5), Errc::offset_out_of_range);
  CHECK_ERRC(splice(x, window({1, 2}), 1), Errc::length_mismatch);

  const auto c = window(std::vector<Symbol>(9, 4));
  for (std::size_t i = 1; i < 9; ++i) CHECK(splice(c, c, i) == c);

  oracle::Payloads src(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = window(src.next(11, 6));
    for (std::size_t i = 1; i < 11; ++i) {
      auto shifted = w.symbols;
      std::rotate(shifted.begin(), shifted.end() - static_cast<std::ptrdiff_t>(i), shifted.end());
      REQUIRE(splice(w, w, i).symbols == shifted);
    }
  }
}

TEST_CASE("marker distance and sync decisions") {
  const auto l = layout_from_dss(z25(), 2);
  oracle::Payloads src(43);
  const auto w = encode(l, src.next(13, 2));
  CHECK(is_sync(l, w));

  auto flipped = w;
  const auto m = l.marker_positions().front();
  flipped.symbols[m] ^= 1;
  CHECK(marker_distance(l, flipped) == 1);
  CHECK(is_sync(l, flipped));
  CHECK_ERRC(marker_distance(l, window({0})), Errc::length_mismatch);
  CHECK_ERRC(is_sync(l, window({0})), Errc::length_mismatch);

  // exhaustive single-flip sweep on aligned and spliced windows
  for (int pair = 0; pair < 20; ++pair) {
    const auto x = encode(l, src.next(13, 2));
    const auto y = encode(l, src.next(13, 2));
    for (std::size_t pos = 0; pos <= 25; ++pos) {
      auto aligned = x;
      if (pos < 25) aligned.symbols[pos] ^= 1;
      REQUIRE(is_sync(l, aligned));
      for (std::size_t i = 1; i < 25; ++i) {
        auto s = splice(x, y, i);
        REQUIRE(marker_distance(l, s) >= 3);
        if (pos < 25) s.symbols[pos] ^= 1;
        REQUIRE_FALSE(is_sync(l, s));
      }
    }
  }
}

TEST_CASE("comma-free index") {
  CHECK(comma_free_index({window({0, 0})}) == 0);
  // splices of (0,1),(1,0) at offset 1 are (1,1),(1,0),(0,1),(0,0)
  CHECK(comma_free_index({window({0, 1}), window({1, 0})}) == 0);
  CHECK(comma_free_index({window({0, 0, 1})}) == 2);
  CHECK_ERRC(comma_free_index({window({0})}), Errc::invalid_parameter);
  CHECK_ERRC(comma_free_index({window({0, 1}), window({0})}), Errc::length_mismatch);

  const auto l = layout_from_dss(z25(), 2);
  oracle::Payloads src(44);
  std::vector<CodeWindow> code;
  for (int i = 0; i < 20; ++i) code.push_back(encode(l, src.next(13, 2)));
  CHECK(comma_free_index(code) >= 3);
  CHECK_ERRC(comma_free_index(code, Budget{1000, 1 << 20}), Errc::budget_exceeded);

  // brute force over every splice with the oracle distance
  Count best = ~Count{0};
  for (const auto& z : code) {
    for (const auto& x : code) {
      for (const auto& y : code) {
        for (std::size_t i = 1; i < 25; ++i) best = std::min(best, oracle::hamming(z.symbols, splice(x, y, i).symbols));
      }
    }
  }
  CHECK(comma_free_index(code) == best);

  const auto p19 = paley_dss(19, 3);
  const auto l19 = layout_from_dss(p19, 3);
  std::vector<CodeWindow> code19;
  for (int i = 0; i < 12; ++i) code19.push_back(encode(l19, src.next(l19.free_positions().size(), 3)));
  CHECK(comma_free_index(code19) >= 3);
}

TEST_CASE("noise model parsing") {
  CHECK(NoiseModel::parse("exact-1")->substitutions == 1);
  CHECK(NoiseModel::parse("iid-0.25")->probability == 0.25);
  CHECK_FALSE(NoiseModel::parse("exact-"));
  CHECK_FALSE(NoiseModel::parse("iid-1.5"));
  CHECK_FALSE(NoiseModel::parse("gauss-1"));
  CHECK(NoiseModel::exact(2).str() == "exact-2");
}

TEST_CASE("rng") {
  SymbolRng a(5), b(5);
  for (int i = 0; i < 100; ++i) REQUIRE(a.below(7) == b.below(7));
  SymbolRng c(6);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(c.below(3) < 3);
    const double u = c.unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(window_seed(1, 2) != window_seed(1, 3));
  CHECK(window_seed(1, 2) == window_seed(1, 2));
}

TEST_CASE("stream simulation") {
  const auto l = layout_from_dss(z25(), 2);

  const auto clean = simulate_stream(l, 200, NoiseModel::exact(0), 7);
  CHECK(clean.blocks == 200);
  CHECK(clean.offsets_tested == 199 * 25 + 1);
  CHECK(clean.true_accepts == 200);
  CHECK(clean.false_accepts == 0);
  CHECK(clean.false_rejects == 0);
  CHECK(clean.seed == 7);

  const auto one = simulate_stream(l, 200, NoiseModel::exact(1), 7);
  CHECK(one.true_accepts == 200);
  CHECK(one.false_accepts == 0);
  CHECK(one.false_rejects == 0);
  CHECK(one.noise == "exact-1");

  const auto zero_p = simulate_stream(l, 200, NoiseModel::iid(0.0), 7);
  CHECK(zero_p.true_accepts == clean.true_accepts);
  CHECK(zero_p.false_accepts == clean.false_accepts);
  CHECK(zero_p.false_rejects == clean.false_rejects);
  CHECK(zero_p.offsets_tested == clean.offsets_tested);

  CHECK(simulate_stream(l, 50, NoiseModel::iid(0.2), 9) == simulate_stream(l, 50, NoiseModel::iid(0.2), 9));
  const auto heavy = simulate_stream(l, 200, NoiseModel::iid(0.3), 9);
  CHECK(heavy.false_rejects > 0);

  CHECK_ERRC(simulate_stream(l, 10, NoiseModel::exact(2), 1), Errc::invalid_parameter);
  CHECK_ERRC(simulate_stream(l, 0, NoiseModel::exact(0), 1), Errc::invalid_parameter);
}
