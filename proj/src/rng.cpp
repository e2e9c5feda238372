#include "swl/rng.hpp"

#include <cmath>

namespace swl {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
  std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
  std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
  std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  std::uint32_t c1 = ctr[1], c3 = ctr[3];
  ctr[0] = hi1 ^ c1 ^ key[0];
  ctr[1] = lo1;
  ctr[2] = hi0 ^ c3 ^ key[1];
  ctr[3] = lo0;
}

}  // namespace

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream_id) : pos_(4) {
  key_[0] = static_cast<std::uint32_t>(seed);
  key_[1] = static_cast<std::uint32_t>(seed >> 32);
  ctr_[0] = 0;
  ctr_[1] = 0;
  ctr_[2] = static_cast<std::uint32_t>(stream_id);
  ctr_[3] = static_cast<std::uint32_t>(stream_id >> 32);
}

void PhiloxStream::refill() {
  std::uint32_t block[4] = {ctr_[0], ctr_[1], ctr_[2], ctr_[3]};
  std::uint32_t key[2] = {key_[0], key_[1]};
  for (int r = 0; r < 10; ++r) {
    philox_round(block, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  out_[0] = block[0];
  out_[1] = block[1];
  out_[2] = block[2];
  out_[3] = block[3];
  pos_ = 0;
  // 64-bit block counter in the low two words; the stream id words stay fixed
  if (++ctr_[0] == 0) ++ctr_[1];
}

std::uint64_t PhiloxStream::next_u64() {
  if (pos_ > 2) refill();
  std::uint64_t lo = out_[pos_];
  std::uint64_t hi = out_[pos_ + 1];
  pos_ += 2;
  return lo | (hi << 32);
}

double PhiloxStream::next_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

void PhiloxStream::next_normal_pair(double& z0, double& z1) {
  double u1 = next_uniform();
  double u2 = next_uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double th = 2.0 * M_PI * u2;
  z0 = r * std::cos(th);
  z1 = r * std::sin(th);
}

double PhiloxStream::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double z0, z1;
  next_normal_pair(z0, z1);
  spare_ = z1;
  have_spare_ = true;
  return z0;
}

}  // namespace swl
