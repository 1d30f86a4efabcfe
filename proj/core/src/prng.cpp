#include "mlca/prng.hpp"

#include <fstream>
#include <stdexcept>

#include "mlca/complemented.hpp"
#include "stepper.hpp"

namespace mlca {

StreamSpec StreamSpec::make(RuleVector rules, Configuration seed, unsigned gamma,
                            const MaximalityOptions& opts, const FactorBudget& budget) {
  if (rules.field().q() != 2)
    throw std::invalid_argument("bitstream generation is defined for GF(2) CAs");
  if (seed.states.size() != rules.size())
    throw std::invalid_argument("seed length does not match the rule vector");

  bool maximal = false;
  switch (rules.kind()) {
    case RuleKind::Linear90150:
    case RuleKind::LinearGFq:
      maximal = decide_maximal_primitive(rules, budget).maximal;
      if (maximal && seed.index() == 0)
        throw std::invalid_argument("seed must not be the marginal fixed point");
      break;
    case RuleKind::Complemented: {
      maximal = decide_maximal_primitive(rules.core(), budget).maximal;
      if (maximal) {
        auto fixed = complemented_fixed_point(rules);
        if (fixed && *fixed == seed)
          throw std::invalid_argument("seed must not be the marginal fixed point");
      }
      break;
    }
    case RuleKind::GeneralBinary:
      maximal = decide_maximal_exhaustive(rules, opts).maximal;
      if (maximal && step(rules, seed) == seed)
        throw std::invalid_argument("seed must not be the marginal fixed point");
      break;
  }
  if (!maximal) throw std::invalid_argument("bitstreams require a maximal length CA");

  std::vector<std::size_t> sites;
  for (std::size_t s = 0; s < rules.size(); s += gamma + 1) sites.push_back(s);
  return StreamSpec(std::move(rules), std::move(seed), gamma, std::move(sites));
}

std::vector<std::uint8_t> stream_bits(const StreamSpec& spec, std::uint64_t steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  detail::Stepper st(spec.rules());
  std::vector<std::uint8_t> bits;
  bits.reserve(steps * spec.sample_sites().size());
  std::uint64_t x = spec.seed().index();
  for (std::uint64_t t = 0; t < steps; ++t) {
    for (std::size_t s : spec.sample_sites()) bits.push_back(std::uint8_t((x >> s) & 1));
    x = st(x);
  }
  return bits;
}

MonobitCounts monobit(const std::vector<std::uint8_t>& bits) {
  if (bits.empty()) throw std::invalid_argument("monobit requires a nonempty bit sequence");
  MonobitCounts c;
  for (auto b : bits) (b ? c.ones : c.zeros)++;
  return c;
}

RunsHistogram runs(const std::vector<std::uint8_t>& bits) {
  if (bits.empty()) throw std::invalid_argument("runs requires a nonempty bit sequence");
  RunsHistogram h;
  std::uint64_t len = 1;
  for (std::size_t i = 1; i <= bits.size(); ++i) {
    if (i < bits.size() && bits[i] == bits[i - 1]) {
      ++len;
      continue;
    }
    auto& hist = bits[i - 1] ? h.runs_of_one : h.runs_of_zero;
    ++hist[len];
    len = 1;
  }
  return h;
}

std::uint64_t export_bits(const std::vector<std::uint8_t>& bits, const std::filesystem::path& path,
                          BitFormat format) {
  // write to a sibling temp file and rename, so readers never see a partial file
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
  std::uint64_t written = 0;
  if (format == BitFormat::Raw) {
    std::uint8_t byte = 0;
    unsigned filled = 0;
    for (auto b : bits) {
      if (b) byte |= std::uint8_t(1u << filled);
      if (++filled == 8) {
        out.put(char(byte));
        ++written;
        byte = 0;
        filled = 0;
      }
    }
    if (filled) {
      out.put(char(byte));
      ++written;
    }
  } else {
    std::uint64_t on_line = 0;
    for (auto b : bits) {
      out.put(b ? '1' : '0');
      ++written;
      if (++on_line == 64) {
        out.put('\n');
        ++written;
        on_line = 0;
      }
    }
  }
  out.flush();
  out.close();
  if (!out) throw std::runtime_error("write failed for " + tmp.string());
  std::filesystem::rename(tmp, path);
  return written;
}

std::uint64_t export_stream(const StreamSpec& spec, std::uint64_t steps,
                            const std::filesystem::path& path, BitFormat format) {
  std::vector<std::uint8_t> bits = stream_bits(spec, steps);
  std::uint64_t written = export_bits(bits, path, format);
  std::filesystem::path sidecar = path;
  sidecar += ".json";
  std::filesystem::path tmp = sidecar;
  tmp += ".tmp";
  std::ofstream meta(tmp, std::ios::trunc);
  if (!meta) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
  meta << "{\n"
       << "  \"schema_version\": 1,\n"
       << "  \"rules\": \"" << spec.rules().to_string() << "\",\n"
       << "  \"boundary\": \"null\",\n"
       << "  \"seed\": \"" << spec.seed().to_string() << "\",\n"
       << "  \"gamma\": " << spec.gamma() << ",\n"
       << "  \"steps\": " << steps << ",\n"
       << "  \"bit_count\": " << bits.size() << ",\n"
       << "  \"format\": \"" << (format == BitFormat::Raw ? "raw" : "ascii01") << "\"\n"
       << "}\n";
  meta.flush();
  meta.close();
  if (!meta) throw std::runtime_error("write failed for " + tmp.string());
  std::filesystem::rename(tmp, sidecar);
  return written;
}

}  // namespace mlca
