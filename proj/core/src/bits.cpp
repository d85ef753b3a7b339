#include "dynlabel/bits.hpp"

#include <bit>

#include "dynlabel/types.hpp"

namespace dynlabel {

std::string to_string(NodeId v) { return v.valid() ? std::to_string(v.value) : std::string("none"); }

BitString BitString::from_string(std::string_view zeros_and_ones) {
  BitString s;
  for (char c : zeros_and_ones) {
    if (c != '0' && c != '1') throw DecodeError("bit string may only contain 0 and 1");
    s.push_back(c == '1');
  }
  return s;
}

void BitString::push_back(bool bit) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (bit) words_.back() |= (std::uint64_t{1} << (size_ % 64));
  ++size_;
}

void BitString::append(const BitString& other) {
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

bool BitString::operator[](std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

std::string BitString::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[i] ? '1' : '0');
  return s;
}

bool BitString::operator==(const BitString& other) const {
  return size_ == other.size_ && words_ == other.words_;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const {
  const std::size_t common = std::min(size_, other.size_);
  for (std::size_t i = 0; i < common; ++i) {
    if ((*this)[i] != other[i]) return (*this)[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return size_ <=> other.size_;
}

std::size_t binary_length(std::uint64_t x) {
  return x == 0 ? 1 : static_cast<std::size_t>(std::bit_width(x));
}

std::size_t gamma_length(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("gamma code needs x >= 1");
  return 2 * static_cast<std::size_t>(std::bit_width(x)) - 1;
}

void BitWriter::fixed(std::uint64_t value, std::size_t width) {
  for (std::size_t i = width; i-- > 0;) out_.push_back((value >> i) & 1U);
}

void BitWriter::gamma(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("gamma code needs x >= 1");
  const auto width = static_cast<std::size_t>(std::bit_width(x));
  for (std::size_t i = 1; i < width; ++i) out_.push_back(false);
  fixed(x, width);
}

void BitWriter::delimited(const BitString& bits) {
  gamma(bits.size() + 1);
  out_.append(bits);
}

bool BitReader::bit() {
  if (pos_ >= in_->size()) throw DecodeError("read past end of label");
  return (*in_)[pos_++];
}

std::uint64_t BitReader::fixed(std::size_t width) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(bit());
  return v;
}

std::uint64_t BitReader::gamma() {
  std::size_t zeros = 0;
  while (!bit()) {
    if (++zeros > 63) throw DecodeError("gamma code too long");
  }
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < zeros; ++i) v = (v << 1) | static_cast<std::uint64_t>(bit());
  return v;
}

BitString BitReader::delimited() {
  const std::uint64_t n = gamma() - 1;
  if (n > in_->size() - pos_) throw DecodeError("delimited field overruns label");
  BitString out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back((*in_)[pos_++]);
  return out;
}

BitString BitReader::rest() {
  BitString out;
  while (pos_ < in_->size()) out.push_back((*in_)[pos_++]);
  return out;
}

void BitReader::expect_end() const {
  if (!exhausted()) throw DecodeError("trailing bits in label");
}

}  // namespace dynlabel
