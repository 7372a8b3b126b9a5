#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace vlm {

// Purpose tag of a substream. Every independent noise source gets its own
// tag so that trials can be sharded across workers without shared RNG state.
enum class Draw : std::uint32_t {
  Generic = 0,
  SmallScale,
  Shadow,
  Noise,
  Symbols,
  CsiError,
  PilotNoise,
  Scatterer,
  Reflection,
  DropPosition,
  GenieNoise,
};

// Counter-style stream identifier: (seed, experiment, trial, purpose).
// Identical keys give identical streams; distinct keys give streams that are
// statistically independent for Monte-Carlo purposes.
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint32_t experiment = 0;
  std::uint64_t trial = 0;
  std::uint32_t purpose = 0;

  StreamKey with_trial(std::uint64_t t) const {
    StreamKey k = *this;
    k.trial = t;
    return k;
  }
  StreamKey with_purpose(Draw p) const {
    StreamKey k = *this;
    k.purpose = static_cast<std::uint32_t>(p);
    return k;
  }
  StreamKey with_experiment(std::uint32_t e) const {
    StreamKey k = *this;
    k.experiment = e;
    return k;
  }
  std::uint64_t mix() const;

  friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

// Deterministic random stream. mt19937_64 is fully specified by the standard
// and the Gaussian path is an explicit Box-Muller, so a given key produces
// the same sequence on every run of the same build.
class RngStream {
 public:
  explicit RngStream(const StreamKey& key);

  std::uint64_t bits() { return gen_(); }
  double uniform();                  // [0, 1)
  double uniform(double lo, double hi);
  double normal();                   // N(0, 1)
  std::complex<double> cnormal();    // CN(0, 1)

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace vlm
