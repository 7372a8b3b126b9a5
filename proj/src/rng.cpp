#include "vlm/rng.hpp"

#include <cmath>
#include <numbers>

namespace vlm {

namespace {

// splitmix64 finalizer; chained over the key fields to spread nearby keys.
std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t StreamKey::mix() const {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix(s);
  s ^= (static_cast<std::uint64_t>(experiment) << 32) | purpose;
  h ^= splitmix(s);
  s ^= trial;
  h ^= splitmix(s);
  return h;
}

RngStream::RngStream(const StreamKey& key) : gen_(key.mix()) {}

double RngStream::uniform() {
  // 53-bit mantissa in [0,1); avoids the implementation-defined
  // std::uniform_real_distribution.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double RngStream::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

std::complex<double> RngStream::cnormal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1));  // -2 log u / 2: unit total variance
  const double a = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace vlm
