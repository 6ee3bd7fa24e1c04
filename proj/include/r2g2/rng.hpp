#pragma once

#include <cstdint>

#include "r2g2/linalg.hpp"

namespace r2g2 {

/// Value identity of a random stream. The pair (seed, stream_id) fully
/// determines every draw taken from it; there is no hidden state shared
/// between streams, so distinct streams can be consumed from different
/// threads. Substreams for (layer, step, replicate) and similar hierarchies
/// are produced with derive().
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  RngStream derive(std::uint64_t tag) const;

  bool operator==(const RngStream&) const = default;
};

/// xoshiro256++ generator bound to one stream. Draws are identical across
/// platforms and compilers; the standard library distributions are avoided
/// on purpose because their output is implementation-defined.
class StreamRng {
 public:
  explicit StreamRng(RngStream stream);

  std::uint64_t next_u64();
  double next_uniform_open();  // (0, 1]
  double next_normal();        // Box-Muller over next_uniform_open
  std::uint64_t next_below(std::uint64_t bound);  // uniform in [0, bound)

 private:
  std::uint64_t state_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// n independent standard-normal draws; a pure function of (n, stream).
Vec sample_standard_normal(std::size_t n, RngStream stream);

}  // namespace r2g2
