#include "qlab/sim/bits.hpp"

#include <stdexcept>

namespace qlab {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

BitString BitString::from_string(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("BitString: expected only '0' and '1'");
    }
    out.bits_[i] = text[i] == '1';
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t length) {
  if (length < 64 && (value >> length) != 0) {
    throw std::invalid_argument("BitString: value does not fit in length");
  }
  BitString out(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.bits_[i] = (value >> (length - 1 - i)) & 1U;
  }
  return out;
}

BitString BitString::random(std::size_t length, std::mt19937_64& rng) {
  BitString out(length);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < length; ++i) {
    if (i % 64 == 0) word = rng();
    out.bits_[i] = (word >> (i % 64)) & 1U;
  }
  return out;
}

std::uint64_t BitString::to_uint() const {
  if (bits_.size() > 64) throw std::length_error("BitString: longer than 64 bits");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::size_t i = 0; i < bits_.size(); i += 4) {
    unsigned nib = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nib <<= 1;
      if (i + j < bits_.size()) nib |= bits_[i + j];
    }
    s.push_back(kDigits[nib]);
  }
  return s;
}

bool BitString::is_zero() const {
  for (auto b : bits_) {
    if (b) return false;
  }
  return true;
}

BitString BitString::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > bits_.size()) throw std::out_of_range("BitString::slice");
  return BitString(std::vector<std::uint8_t>(bits_.begin() + offset,
                                             bits_.begin() + offset + length));
}

BitString BitString::concat(const BitString& other) const {
  auto v = bits_;
  v.insert(v.end(), other.bits_.begin(), other.bits_.end());
  return BitString(std::move(v));
}

BitString BitString::operator^(const BitString& other) const {
  if (other.size() != size()) throw std::invalid_argument("BitString: xor length mismatch");
  BitString out(size());
  for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] ^ other.bits_[i];
  return out;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace qlab
