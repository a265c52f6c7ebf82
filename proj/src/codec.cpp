#include "dss/codec.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "dss/error.hpp"
#include "dss/verifier.hpp"

namespace dss {

namespace {

void require_length(const MarkerLayout& layout, const CodeWindow& w) {
  if (w.size() != layout.length()) {
    fail(Errc::length_mismatch, "window length " + std::to_string(w.size()) + " but layout length " +
                                    std::to_string(layout.length()));
  }
}

Count hamming(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  Count d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// Replace the symbol at pos by one of the other alphabet - 1 symbols.
void substitute(std::vector<Symbol>& w, std::size_t pos, std::size_t alphabet, SymbolRng& rng) {
  const auto shift = 1 + rng.below(alphabet - 1);
  w[pos] = static_cast<Symbol>((w[pos] + shift) % alphabet);
}

}  // namespace

std::string MarkerLayout::pattern() const {
  static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  out.reserve(length());
  for (const auto& m : marker_at_) {
    if (!m) {
      out.push_back('*');
    } else if (*m < 36) {
      out.push_back(digits[*m]);
    } else {
      fail(Errc::symbol_out_of_range, "marker symbol too large to render");
    }
  }
  return out;
}

MarkerLayout layout_from_dss(const DifferenceSystem& d, std::size_t alphabet, const Budget& budget) {
  if (alphabet < d.set_count()) {
    fail(Errc::alphabet_too_small, "alphabet of " + std::to_string(alphabet) + " symbols cannot mark " +
                                       std::to_string(d.set_count()) + " sets");
  }
  const auto report = verify(d, budget);

  MarkerLayout l;
  l.alphabet_ = alphabet;
  l.index_ = report.index;
  l.tolerance_ = report.index == 0 ? 0 : (report.index - 1) / 2;
  l.marker_at_.assign(static_cast<std::size_t>(d.modulus()), std::nullopt);
  for (std::size_t i = 0; i < d.set_count(); ++i) {
    for (auto r : d.set(i)) l.marker_at_[static_cast<std::size_t>(r)] = static_cast<Symbol>(i);
  }
  for (std::size_t pos = 0; pos < l.marker_at_.size(); ++pos) {
    (l.marker_at_[pos] ? l.markers_ : l.free_).push_back(pos);
  }
  return l;
}

CodeWindow encode(const MarkerLayout& layout, const std::vector<Symbol>& payload) {
  const auto& free = layout.free_positions();
  if (payload.size() != free.size()) {
    fail(Errc::payload_length_mismatch, "payload has " + std::to_string(payload.size()) +
                                            " symbols, layout has " + std::to_string(free.size()) +
                                            " free positions");
  }
  CodeWindow w{std::vector<Symbol>(layout.length(), 0)};
  for (auto pos : layout.marker_positions()) w.symbols[pos] = *layout.marker_at(pos);
  for (std::size_t k = 0; k < free.size(); ++k) {
    if (payload[k] >= layout.alphabet()) {
      fail(Errc::symbol_out_of_range, "payload symbol " + std::to_string(payload[k]) + " out of range");
    }
    w.symbols[free[k]] = payload[k];
  }
  return w;
}

std::vector<Symbol> decode(const MarkerLayout& layout, const CodeWindow& w) {
  require_length(layout, w);
  std::vector<Symbol> payload;
  payload.reserve(layout.free_positions().size());
  for (auto pos : layout.free_positions()) payload.push_back(w.symbols[pos]);
  return payload;
}

CodeWindow splice(const CodeWindow& x, const CodeWindow& y, std::size_t i) {
  if (x.size() != y.size()) fail(Errc::length_mismatch, "spliced windows differ in length");
  const std::size_t v = x.size();
  if (i == 0 || i >= v) {
    fail(Errc::offset_out_of_range, "offset " + std::to_string(i) + " not in [1, " + std::to_string(v) + ")");
  }
  CodeWindow out;
  out.symbols.reserve(v);
  out.symbols.insert(out.symbols.end(), x.symbols.end() - static_cast<std::ptrdiff_t>(i), x.symbols.end());
  out.symbols.insert(out.symbols.end(), y.symbols.begin(), y.symbols.begin() + static_cast<std::ptrdiff_t>(v - i));
  return out;
}

Count marker_distance(const MarkerLayout& layout, const CodeWindow& w) {
  require_length(layout, w);
  Count d = 0;
  for (auto pos : layout.marker_positions()) d += w.symbols[pos] != *layout.marker_at(pos);
  return d;
}

bool is_sync(const MarkerLayout& layout, const CodeWindow& w) {
  return marker_distance(layout, w) <= layout.tolerance();
}

Count comma_free_index(const std::vector<CodeWindow>& code, const Budget& budget) {
  if (code.empty()) fail(Errc::invalid_parameter, "code is empty");
  const std::size_t v = code.front().size();
  if (v < 2) fail(Errc::invalid_parameter, "codewords need length >= 2 to have splices");
  for (const auto& w : code) {
    if (w.size() != v) fail(Errc::length_mismatch, "codewords differ in length");
  }
  __extension__ const auto n = static_cast<unsigned __int128>(code.size());
  if (n * n * n * v > budget.max_pairs) {
    fail(Errc::budget_exceeded, "comma-free search over " + std::to_string(code.size()) +
                                    " codewords exceeds budget");
  }

  Count best = std::numeric_limits<Count>::max();
  for (const auto& x : code) {
    for (const auto& y : code) {
      for (std::size_t i = 1; i < v; ++i) {
        const auto s = splice(x, y, i);
        for (const auto& z : code) best = std::min(best, hamming(z.symbols, s.symbols));
        if (best == 0) return 0;
      }
    }
  }
  return best;
}

std::uint64_t SymbolRng::below(std::uint64_t bound) {
  if (bound == 0) fail(Errc::invalid_parameter, "empty range");
  // largest multiple of bound that fits, to avoid modulo bias
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double SymbolRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t window_seed(std::uint64_t seed, std::uint64_t window) {
  std::uint64_t z = seed + (window + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::optional<NoiseModel> NoiseModel::parse(const std::string& text) {
  auto tail = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.rfind(prefix, 0) != 0) return std::nullopt;
    return std::string_view(text).substr(prefix.size());
  };
  if (auto rest = tail("exact-")) {
    Count t = 0;
    auto [p, ec] = std::from_chars(rest->data(), rest->data() + rest->size(), t);
    if (ec != std::errc{} || p != rest->data() + rest->size() || rest->empty()) return std::nullopt;
    return exact(t);
  }
  if (auto rest = tail("iid-")) {
    double prob = 0;
    auto [p, ec] = std::from_chars(rest->data(), rest->data() + rest->size(), prob);
    if (ec != std::errc{} || p != rest->data() + rest->size() || rest->empty()) return std::nullopt;
    if (!(prob >= 0.0 && prob <= 1.0)) return std::nullopt;
    return iid(prob);
  }
  return std::nullopt;
}

std::string NoiseModel::str() const {
  if (kind == Kind::exact) return "exact-" + std::to_string(substitutions);
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, probability);
  return "iid-" + std::string(buf, p);
}

SyncStats simulate_stream(const MarkerLayout& layout, Count n_blocks, const NoiseModel& noise,
                          std::uint64_t seed) {
  if (n_blocks == 0) fail(Errc::invalid_parameter, "need at least one block");
  const std::size_t v = layout.length();
  const std::size_t q = layout.alphabet();
  const bool noisy = noise.kind == NoiseModel::Kind::exact ? noise.substitutions > 0 : noise.probability > 0;
  if (noise.kind == NoiseModel::Kind::exact && noise.substitutions > layout.tolerance()) {
    fail(Errc::invalid_parameter, "exact-" + std::to_string(noise.substitutions) +
                                      " exceeds the layout tolerance " + std::to_string(layout.tolerance()));
  }
  if (noise.kind == NoiseModel::Kind::iid && !(noise.probability >= 0.0 && noise.probability <= 1.0)) {
    fail(Errc::invalid_parameter, "substitution probability must lie in [0, 1]");
  }
  if (noisy && q < 2) fail(Errc::invalid_parameter, "substitutions need an alphabet of at least 2");

  SymbolRng payload_rng(seed);
  std::vector<Symbol> stream;
  stream.reserve(n_blocks * v);
  std::vector<Symbol> payload(layout.free_positions().size());
  for (Count b = 0; b < n_blocks; ++b) {
    for (auto& s : payload) s = static_cast<Symbol>(payload_rng.below(q));
    const auto w = encode(layout, payload);
    stream.insert(stream.end(), w.symbols.begin(), w.symbols.end());
  }

  SyncStats stats;
  stats.blocks = n_blocks;
  stats.seed = seed;
  stats.noise = noise.str();

  CodeWindow window{std::vector<Symbol>(v)};
  std::vector<std::size_t> picked;
  const std::size_t last_start = (n_blocks - 1) * v;
  for (std::size_t k = 0; k <= last_start; ++k) {
    std::copy_n(stream.begin() + static_cast<std::ptrdiff_t>(k), v, window.symbols.begin());
    if (noisy) {
      SymbolRng rng(window_seed(seed, k));
      if (noise.kind == NoiseModel::Kind::exact) {
        picked.clear();
        while (picked.size() < noise.substitutions) {
          const auto pos = static_cast<std::size_t>(rng.below(v));
          if (std::find(picked.begin(), picked.end(), pos) == picked.end()) picked.push_back(pos);
        }
        for (auto pos : picked) substitute(window.symbols, pos, q, rng);
      } else {
        for (std::size_t pos = 0; pos < v; ++pos) {
          if (rng.unit() < noise.probability) substitute(window.symbols, pos, q, rng);
        }
      }
    }
    const bool aligned = k % v == 0;
    const bool accepted = is_sync(layout, window);
    ++stats.offsets_tested;
    if (aligned && accepted) ++stats.true_accepts;
    if (aligned && !accepted) ++stats.false_rejects;
    if (!aligned && accepted) ++stats.false_accepts;
    if (!aligned && !accepted) ++stats.true_rejects;
  }
  return stats;
}

}  // namespace dss
