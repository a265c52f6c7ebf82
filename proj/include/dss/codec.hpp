#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dss/core.hpp"

namespace dss {

struct CodeWindow {
  std::vector<Symbol> symbols;

  std::size_t size() const noexcept { return symbols.size(); }
  bool operator==(const CodeWindow&) const = default;
};

// Marker symbol i sits on every position of Q_i; the remaining positions
// carry payload. A window is accepted as aligned when at most `tolerance`
// marker positions disagree, tolerance = floor((index - 1) / 2).
class MarkerLayout {
 public:
  std::size_t length() const noexcept { return marker_at_.size(); }
  std::size_t alphabet() const noexcept { return alphabet_; }
  Count index() const noexcept { return index_; }
  Count tolerance() const noexcept { return tolerance_; }

  const std::optional<Symbol>& marker_at(std::size_t pos) const { return marker_at_.at(pos); }
  const std::vector<std::size_t>& free_positions() const noexcept { return free_; }
  const std::vector<std::size_t>& marker_positions() const noexcept { return markers_; }

  // '*' for payload positions, the marker symbol as 0-9a-z otherwise.
  std::string pattern() const;

 private:
  friend MarkerLayout layout_from_dss(const DifferenceSystem&, std::size_t, const Budget&);
  MarkerLayout() = default;

  std::size_t alphabet_ = 0;
  Count index_ = 0;
  Count tolerance_ = 0;
  std::vector<std::optional<Symbol>> marker_at_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> markers_;
};

// Verifies d to obtain its index. Throws AlphabetTooSmall when the alphabet
// has fewer symbols than d has sets.
MarkerLayout layout_from_dss(const DifferenceSystem& d, std::size_t alphabet,
                             const Budget& budget = {});

CodeWindow encode(const MarkerLayout& layout, const std::vector<Symbol>& payload);
std::vector<Symbol> decode(const MarkerLayout& layout, const CodeWindow& w);

// Last i symbols of x followed by the first v - i symbols of y, 1 <= i < v.
CodeWindow splice(const CodeWindow& x, const CodeWindow& y, std::size_t i);

Count marker_distance(const MarkerLayout& layout, const CodeWindow& w);
bool is_sync(const MarkerLayout& layout, const CodeWindow& w);

// Minimum Hamming distance between any codeword and any splice of any
// ordered pair of codewords. Work is |code|^3 * v, checked against
// budget.max_pairs.
Count comma_free_index(const std::vector<CodeWindow>& code, const Budget& budget = {});

// Seeded generator used by the simulator. std::mt19937_64 is fully
// specified by the standard; draws are mapped to ranges by the rejection
// method below rather than by std::uniform_*_distribution, whose output is
// implementation-defined.
class SymbolRng {
 public:
  explicit SymbolRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  double unit();                             // uniform in [0, 1), 53 bits

 private:
  std::mt19937_64 engine_;
};

// Per-window generator seed: splitmix64 of (seed, window start). Windows are
// independent, so any static partition of window starts reproduces the
// sequential result.
std::uint64_t window_seed(std::uint64_t seed, std::uint64_t window);

struct NoiseModel {
  enum class Kind { exact, iid };
  Kind kind = Kind::exact;
  Count substitutions = 0;  // exact: symbols replaced in each window
  double probability = 0;   // iid: per-symbol substitution probability

  static NoiseModel exact(Count t) { return {Kind::exact, t, 0.0}; }
  static NoiseModel iid(double p) { return {Kind::iid, 0, p}; }
  // "exact-<t>" or "iid-<p>"
  static std::optional<NoiseModel> parse(const std::string& text);
  std::string str() const;
};

struct SyncStats {
  Count blocks = 0;
  Count offsets_tested = 0;
  Count true_accepts = 0;
  Count false_accepts = 0;
  Count false_rejects = 0;
  Count true_rejects = 0;
  std::uint64_t seed = 0;
  std::string noise;

  bool operator==(const SyncStats&) const = default;
};

// Encodes n_blocks random payloads back to back and slides a length-v window
// over every start k in [0, (n_blocks - 1) v]; windows overlapping the stream
// ends are never formed. Each window receives its own noise draw before the
// is_sync decision. exact-t requires t <= tolerance; substitutions always
// change the symbol.
SyncStats simulate_stream(const MarkerLayout& layout, Count n_blocks, const NoiseModel& noise,
                          std::uint64_t seed);

}  // namespace dss
