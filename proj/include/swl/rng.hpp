#pragma once
#include <cstdint>

namespace swl {

// Counter-based Philox-4x32-10 generator.  State is a 128-bit block counter
// keyed by (seed, stream_id), so streams with distinct seeds or stream ids are
// disjoint by construction and the output is independent of call interleaving
// across streams.  Normal variates come from Box-Muller on the raw uniforms,
// keeping the draw sequence fully specified by (seed, stream_id, draw index).
struct PhiloxStream {
  PhiloxStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  // uniform on (0, 1]: never zero, so logs are safe
  double next_uniform();
  void next_normal_pair(double& z0, double& z1);
  double next_normal();

 private:
  void refill();
  std::uint32_t key_[2];
  std::uint32_t ctr_[4];
  std::uint32_t out_[4];
  int pos_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace swl
