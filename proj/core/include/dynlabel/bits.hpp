#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dynlabel {

/// Growable sequence of bits. Labels and memory images are measured in these.
class BitString {
 public:
  BitString() = default;

  static BitString from_string(std::string_view zeros_and_ones);

  void push_back(bool bit);
  void append(const BitString& other);
  bool operator[](std::size_t i) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  std::string to_string() const;

  bool operator==(const BitString& other) const;
  std::strong_ordering operator<=>(const BitString& other) const;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Number of bits in the Elias gamma code of x (x >= 1).
std::size_t gamma_length(std::uint64_t x);

/// Bits needed to write x in plain binary (at least 1).
std::size_t binary_length(std::uint64_t x);

class BitWriter {
 public:
  void bit(bool b) { out_.push_back(b); }
  /// Fixed-width big-endian field.
  void fixed(std::uint64_t value, std::size_t width);
  /// Elias gamma code, x >= 1.
  void gamma(std::uint64_t x);
  /// gamma(size + 1) followed by the raw bits.
  void delimited(const BitString& bits);
  void raw(const BitString& bits) { out_.append(bits); }

  const BitString& bits() const& { return out_; }
  BitString take() && { return std::move(out_); }

 private:
  BitString out_;
};

class BitReader {
 public:
  explicit BitReader(const BitString& in) : in_(&in) {}

  bool bit();
  std::uint64_t fixed(std::size_t width);
  std::uint64_t gamma();
  BitString delimited();
  BitString rest();

  bool exhausted() const { return pos_ == in_->size(); }
  std::size_t position() const { return pos_; }
  /// Throws DecodeError unless every bit was consumed.
  void expect_end() const;

 private:
  const BitString* in_;
  std::size_t pos_ = 0;
};

}  // namespace dynlabel
