#include "r2g2/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace r2g2 {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer; used for stream derivation and generator seeding.
std::uint64_t mix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream RngStream::derive(std::uint64_t tag) const {
  return {seed, mix64(stream_id ^ mix64(tag))};
}

StreamRng::StreamRng(RngStream stream) {
  std::uint64_t s = mix64(stream.seed) ^ mix64(stream.stream_id ^ kGolden);
  for (auto& word : state_) {
    s = mix64(s);
    word = s;
  }
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t StreamRng::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double StreamRng::next_uniform_open() {
  // 53-bit mantissa shifted into (0, 1]; never zero, so log() below is safe.
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double StreamRng::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform_open();
  const double u2 = next_uniform_open();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t StreamRng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw = next_u64();
  while (draw >= limit) draw = next_u64();
  return draw % bound;
}

Vec sample_standard_normal(std::size_t n, RngStream stream) {
  StreamRng rng(stream);
  Vec out(n);
  for (auto& v : out) v = rng.next_normal();
  return out;
}

}  // namespace r2g2
