#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "hotplug/gf.hpp"

namespace hotplug {

// One subfile as a sequence of field symbols.
using SymbolBlock = std::vector<std::uint16_t>;

// [n, k] Reed-Solomon evaluation code. generator(r, c) = alpha_c^r with the
// alpha_c the first n elements of the field's canonical enumeration, so the
// generator is Vandermonde and every k columns are invertible.
class RsCodec {
 public:
  RsCodec(int n, int k) : n_(n), k_(k), field_(&Field::for_length(n)) {
    if (k < 1 || k > n) throw std::invalid_argument("rs: need 1 <= k <= n");
    if (static_cast<std::uint32_t>(n) > field_->size())
      throw std::invalid_argument("rs: n exceeds field size");
    points_.resize(n);
    gen_.assign(static_cast<size_t>(k) * n, 0);
    for (int c = 0; c < n; ++c) {
      points_[c] = field_->element_at(c);
      for (int r = 0; r < k; ++r) gen_[static_cast<size_t>(r) * n + c] = field_->pow(points_[c], r);
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }
  const Field& field() const { return *field_; }
  std::uint16_t generator(int r, int c) const { return gen_[static_cast<size_t>(r) * n_ + c]; }

  // Symbol-wise product: output block f = sum_r G(r,f) * message[r].
  std::vector<SymbolBlock> encode(const std::vector<SymbolBlock>& message) const {
    if (static_cast<int>(message.size()) != k_)
      throw std::invalid_argument("rs: message must have k blocks");
    const size_t len = message.empty() ? 0 : message[0].size();
    for (const auto& b : message)
      if (b.size() != len) throw std::invalid_argument("rs: ragged block lengths");
    std::vector<SymbolBlock> out(n_, SymbolBlock(len, 0));
    for (int f = 0; f < n_; ++f)
      for (int r = 0; r < k_; ++r) {
        const std::uint16_t g = generator(r, f);
        if (g == 0) continue;
        for (size_t i = 0; i < len; ++i)
          out[f][i] = Field::add(out[f][i], field_->mul(g, message[r][i]));
      }
    return out;
  }

  // Recovers the message from any k coded blocks. coords are 1-based column
  // indices; values are aligned with coords.
  std::vector<SymbolBlock> decode_from(const std::vector<int>& coords,
                                       const std::vector<SymbolBlock>& values) const {
    if (static_cast<int>(coords.size()) != k_ || values.size() != coords.size())
      throw std::invalid_argument("rs: need exactly k coordinates with values");
    if (std::set<int>(coords.begin(), coords.end()).size() != coords.size())
      throw std::invalid_argument("rs: repeated coordinates");
    const size_t len = values.empty() ? 0 : values[0].size();
    for (const auto& b : values)
      if (b.size() != len) throw std::invalid_argument("rs: ragged block lengths");

    // Invert the k x k sub-matrix of generator columns by Gauss-Jordan.
    std::vector<std::uint16_t> m(static_cast<size_t>(k_) * k_);
    std::vector<std::uint16_t> inv(static_cast<size_t>(k_) * k_, 0);
    for (int r = 0; r < k_; ++r) {
      inv[static_cast<size_t>(r) * k_ + r] = 1;
      for (int c = 0; c < k_; ++c) {
        const int col = coords[c];
        if (col < 1 || col > n_) throw std::invalid_argument("rs: coordinate out of range");
        m[static_cast<size_t>(r) * k_ + c] = generator(r, col - 1);
      }
    }
    auto row = [&](std::vector<std::uint16_t>& a, int r) { return a.data() + static_cast<size_t>(r) * k_; };
    for (int c = 0; c < k_; ++c) {
      int pivot = c;
      while (pivot < k_ && row(m, pivot)[c] == 0) ++pivot;
      if (pivot == k_) throw std::logic_error("rs: singular sub-matrix (MDS violated)");
      if (pivot != c) {
        std::swap_ranges(row(m, c), row(m, c) + k_, row(m, pivot));
        std::swap_ranges(row(inv, c), row(inv, c) + k_, row(inv, pivot));
      }
      const std::uint16_t pinv = field_->inv(row(m, c)[c]);
      for (int j = 0; j < k_; ++j) {
        row(m, c)[j] = field_->mul(row(m, c)[j], pinv);
        row(inv, c)[j] = field_->mul(row(inv, c)[j], pinv);
      }
      for (int r = 0; r < k_; ++r) {
        if (r == c || row(m, r)[c] == 0) continue;
        const std::uint16_t factor = row(m, r)[c];
        for (int j = 0; j < k_; ++j) {
          row(m, r)[j] = Field::add(row(m, r)[j], field_->mul(factor, row(m, c)[j]));
          row(inv, r)[j] = Field::add(row(inv, r)[j], field_->mul(factor, row(inv, c)[j]));
        }
      }
    }
    // values = M^T * message with M(r,c) = G(r, coords[c]), so
    // message = (M^{-1})^T * values.
    std::vector<SymbolBlock> msg(k_, SymbolBlock(len, 0));
    for (int r = 0; r < k_; ++r)
      for (int c = 0; c < k_; ++c) {
        const std::uint16_t w = inv[static_cast<size_t>(c) * k_ + r];
        if (w == 0) continue;
        for (size_t i = 0; i < len; ++i)
          msg[r][i] = Field::add(msg[r][i], field_->mul(w, values[c][i]));
      }
    return msg;
  }

 private:
  int n_, k_;
  const Field* field_;
  std::vector<std::uint16_t> points_;
  std::vector<std::uint16_t> gen_;
};

}  // namespace hotplug
