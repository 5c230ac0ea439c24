#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qlab {

/// Fixed-length classical bit string. Bit 0 is the most significant bit when
/// the string is read as an integer, matching the qubit ordering of the
/// simulator (qubit 0 is the leftmost tensor factor).
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : bits_(length, 0) {}
  explicit BitString(std::vector<std::uint8_t> bits);

  static BitString from_string(std::string_view text);
  static BitString from_uint(std::uint64_t value, std::size_t length);
  static BitString random(std::size_t length, std::mt19937_64& rng);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }

  /// Requires size() <= 64.
  std::uint64_t to_uint() const;
  std::string to_string() const;
  std::string to_hex() const;
  bool is_zero() const;

  BitString slice(std::size_t offset, std::size_t length) const;
  BitString concat(const BitString& other) const;
  BitString operator^(const BitString& other) const;

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used for seed fan-out and the test-grade PRG.
std::uint64_t mix64(std::uint64_t x);

/// Per-trial seed derived from a master seed and a trial index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master ^ mix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace qlab
