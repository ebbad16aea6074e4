#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hotplug {

// GF(2^m) for m = 8 or 16, via log/exp tables. Both reduction polynomials are
// primitive with generator 2, so the canonical element enumeration is
// 0, 1, g, g^2, ... with g = 2.
class Field {
 public:
  Field(int m, std::uint32_t poly) : m_(m), order_((1u << m) - 1) {
    exp_.resize(2 * order_);
    log_.resize(order_ + 1);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
      exp_[i] = static_cast<std::uint16_t>(x);
      log_[x] = i;
      x <<= 1;
      if (x >> m) x ^= poly;
    }
    if (x != 1) throw std::logic_error("reduction polynomial is not primitive for g=2");
    for (std::uint32_t i = 0; i < order_; ++i) exp_[order_ + i] = exp_[i];
  }

  int degree() const { return m_; }
  std::uint32_t size() const { return order_ + 1; }
  int symbol_bytes() const { return m_ / 8; }

  static std::uint16_t add(std::uint16_t a, std::uint16_t b) { return a ^ b; }

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  std::uint16_t inv(std::uint16_t a) const {
    if (a == 0) throw std::domain_error("gf: inverse of zero");
    return exp_[order_ - log_[a]];
  }

  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(log_[a] * (e % order_)) % order_];
  }

  // Canonical enumeration: element_at(0)=0, element_at(i)=g^(i-1) for i>=1.
  std::uint16_t element_at(std::uint32_t i) const {
    if (i >= size()) throw std::out_of_range("gf: element index out of range");
    return i == 0 ? 0 : exp_[i - 1];
  }

  static const Field& gf256() {
    static const Field f(8, 0x11D);  // x^8+x^4+x^3+x^2+1
    return f;
  }
  static const Field& gf65536() {
    static const Field f(16, 0x1100B);  // x^16+x^12+x^3+x+1
    return f;
  }
  // GF(2^8) when n fits, else GF(2^16).
  static const Field& for_length(std::uint32_t n) {
    return n <= 256 ? gf256() : gf65536();
  }

 private:
  int m_;
  std::uint32_t order_;
  std::vector<std::uint16_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace hotplug
