#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

#include "mlca/automaton.hpp"
#include "mlca/factor.hpp"
#include "mlca/maximality.hpp"

namespace mlca {

/// Bit source: a maximal-length GF(2) CA sampled at every (gamma+1)-th cell.
/// The seed configuration is emitted as the first sample.
class StreamSpec {
 public:
  /// Validates maximality of the rules and that the seed lies on the long
  /// cycle (any configuration other than the marginal fixed point).
  static StreamSpec make(RuleVector rules, Configuration seed, unsigned gamma,
                         const MaximalityOptions& opts = {}, const FactorBudget& budget = {});

  const RuleVector& rules() const { return rules_; }
  const Configuration& seed() const { return seed_; }
  unsigned gamma() const { return gamma_; }
  const std::vector<std::size_t>& sample_sites() const { return sites_; }

 private:
  StreamSpec(RuleVector rules, Configuration seed, unsigned gamma, std::vector<std::size_t> sites)
      : rules_(std::move(rules)), seed_(std::move(seed)), gamma_(gamma), sites_(std::move(sites)) {}
  RuleVector rules_;
  Configuration seed_;
  unsigned gamma_;
  std::vector<std::size_t> sites_;
};

/// steps * |sample_sites| bits: for each time step, the sampled cells in
/// ascending cell order, cell 0 first.
std::vector<std::uint8_t> stream_bits(const StreamSpec& spec, std::uint64_t steps);

struct MonobitCounts {
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
};
MonobitCounts monobit(const std::vector<std::uint8_t>& bits);

/// Run-length histograms per symbol: runs_of_zero[len] = how many maximal
/// runs of zeros have that length, likewise for ones.
struct RunsHistogram {
  std::map<std::uint64_t, std::uint64_t> runs_of_zero;
  std::map<std::uint64_t, std::uint64_t> runs_of_one;
};
RunsHistogram runs(const std::vector<std::uint8_t>& bits);

enum class BitFormat { Raw, Ascii01 };

/// Raw: 8 bits per byte, first bit in the least significant position, final
/// byte zero padded. Ascii01: '0'/'1' characters with a newline after every
/// 64. Returns the byte count written.
std::uint64_t export_bits(const std::vector<std::uint8_t>& bits, const std::filesystem::path& path,
                          BitFormat format);

/// export_bits plus a JSON sidecar <path>.json recording the rule vector,
/// seed, gamma, step count and exact bit count.
std::uint64_t export_stream(const StreamSpec& spec, std::uint64_t steps,
                            const std::filesystem::path& path, BitFormat format);

}  // namespace mlca
