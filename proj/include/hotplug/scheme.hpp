#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hotplug/hppda.hpp"
#include "hotplug/rational.hpp"
#include "hotplug/rs.hpp"

namespace hotplug {

using Bytes = std::vector<std::uint8_t>;

// N files already split into k subfiles each and encoded into F coded
// subfiles. Only coded subfiles are ever cached or transmitted.
struct FileLibrary {
  int N = 0;
  std::vector<Bytes> originals;                 // unpadded
  std::vector<std::vector<SymbolBlock>> coded;  // coded[n][f], f in 0..F-1
  RsCodec codec;

  FileLibrary(const HpParams& p, std::vector<Bytes> files)
      : N(static_cast<int>(files.size())),
        originals(std::move(files)),
        codec(p.F, p.code_dim()) {
    const int k = codec.k();
    const int sym_bytes = codec.field().symbol_bytes();
    const size_t chunk = static_cast<size_t>(k) * sym_bytes;
    size_t padded = 0;
    for (const auto& f : originals) padded = std::max(padded, f.size());
    padded = (padded + chunk - 1) / chunk * chunk;
    if (padded == 0) padded = chunk;
    const size_t block_len = padded / chunk;  // symbols per subfile

    for (const auto& file : originals) {
      Bytes bytes(file);
      bytes.resize(padded, 0);
      std::vector<SymbolBlock> subfiles(k, SymbolBlock(block_len));
      for (int r = 0; r < k; ++r)
        for (size_t i = 0; i < block_len; ++i) {
          std::uint16_t sym = 0;  // big-endian, m/8 bytes per symbol
          for (int b = 0; b < sym_bytes; ++b)
            sym = static_cast<std::uint16_t>((sym << 8) |
                  bytes[(static_cast<size_t>(r) * block_len + i) * sym_bytes + b]);
          subfiles[r][i] = sym;
        }
      coded.push_back(codec.encode(subfiles));
    }
  }

  // Reassembles a decoded message into bytes, trimmed to the original length.
  Bytes message_to_bytes(const std::vector<SymbolBlock>& msg, size_t original_len) const {
    const int sym_bytes = codec.field().symbol_bytes();
    Bytes out;
    for (const auto& block : msg)
      for (std::uint16_t sym : block)
        for (int b = sym_bytes - 1; b >= 0; --b)
          out.push_back(static_cast<std::uint8_t>(sym >> (8 * b)));
    out.resize(original_len);
    return out;
  }
};

// Cache of one user: coded subfiles C_{n,f} for every star row f of the
// user's column of P.
struct CacheContent {
  int user = 0;
  std::vector<int> rows;                         // star rows, ascending, 1-based
  std::vector<std::vector<SymbolBlock>> blocks;  // blocks[n][idx] aligned with rows

  const SymbolBlock& get(int n, int f) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), f);
    if (it == rows.end() || *it != f)
      throw std::logic_error("cache: coded subfile " + std::to_string(f) + " not cached");
    return blocks[n - 1][it - rows.begin()];
  }
  bool has(int f) const { return std::binary_search(rows.begin(), rows.end(), f); }
};

struct TransmissionTerm {
  int demand = 0;  // file id d_k
  int f = 0;       // coded subfile row (P row id)
  int user = 0;    // the active user this term serves
};

struct Transmission {
  int s = 0;
  SymbolBlock payload;
  std::vector<TransmissionTerm> terms;  // ordered by B̄ column
};

struct UserResult {
  int user = 0;
  int demand = 0;
  bool success = false;
  size_t bytes_compared = 0;
};

struct SimReport {
  std::vector<int> tau;
  std::vector<int> demands;
  std::vector<UserResult> users;
  Rational rate;
  int transmissions = 0;
  int subpacketization = 0;  // message dimension k = F'-Z'+Z

  bool all_success() const {
    return std::all_of(users.begin(), users.end(),
                       [](const UserResult& u) { return u.success; });
  }
};

// Placement phase (Algorithm lines 1-6): user k caches C_{n,f} for every n
// and every f with P(f,k) = star.
inline std::vector<CacheContent> place(const HpPda& h, const FileLibrary& lib) {
  if (lib.codec.n() != h.params.F || lib.codec.k() != h.params.code_dim())
    throw std::invalid_argument("place: library codec does not match HpPDA");
  std::vector<CacheContent> caches;
  for (int k = 1; k <= h.params.K; ++k) {
    CacheContent c;
    c.user = k;
    for (int f = 1; f <= h.params.F; ++f)
      if (h.P.at(f, k) == kStar) c.rows.push_back(f);
    for (int n = 0; n < lib.N; ++n) {
      std::vector<SymbolBlock> per_file;
      for (int f : c.rows) per_file.push_back(lib.coded[n][f - 1]);
      c.blocks.push_back(std::move(per_file));
    }
    caches.push_back(std::move(c));
  }
  return caches;
}

// Delivery phase (lines 8-15): X_s sums C_{d_k, f} over the cells of B̄
// holding s. Terms are ordered by column of B̄.
inline std::vector<Transmission> deliver(const HpPda& h, const FileLibrary& lib,
                                         const ZetaMatch& match,
                                         const std::vector<int>& demands) {
  const auto& p = h.params;
  if (static_cast<int>(demands.size()) != p.Kp)
    throw std::invalid_argument("deliver: need K' demands");
  for (int d : demands)
    if (d < 1 || d > lib.N) throw std::invalid_argument("deliver: demand out of range");

  std::vector<Transmission> out(p.S);
  for (int s = 1; s <= p.S; ++s) out[s - 1].s = s;
  for (int c = 1; c <= p.Kp; ++c)
    for (int r = 1; r <= p.Fp; ++r) {
      const int s = match.b_bar.at(r, c);
      if (s < 1) continue;
      Transmission& x = out[s - 1];
      const int f = match.zeta[r - 1];
      const int d = demands[c - 1];
      x.terms.push_back({d, f, match.tau[c - 1]});
      const SymbolBlock& block = lib.coded[d - 1][f - 1];
      if (x.payload.empty()) x.payload.assign(block.size(), 0);
      for (size_t i = 0; i < block.size(); ++i) x.payload[i] = Field::add(x.payload[i], block[i]);
    }
  for (const auto& x : out)
    if (x.terms.empty())
      throw std::logic_error("deliver: transmission " + std::to_string(x.s) + " has no terms");
  return out;
}

inline std::vector<Transmission> deliver(const HpPda& h, const FileLibrary& lib,
                                         const std::vector<int>& tau,
                                         const std::vector<int>& demands) {
  return deliver(h, lib, find_zeta(h, tau), demands);
}

// One user's decoding: peel each X_s holding an integer in this user's B̄
// column down to the wanted coded subfile (all sibling terms are cached by
// C3), then invert the MDS code from Z cached + F'-Z' recovered coordinates.
inline Bytes decode_user(const HpPda& h, const CacheContent& cache, const ZetaMatch& match,
                         const std::vector<Transmission>& transmissions,
                         const std::vector<int>& demands, const FileLibrary& lib) {
  const auto& p = h.params;
  auto pos = std::find(match.tau.begin(), match.tau.end(), cache.user);
  if (pos == match.tau.end())
    throw std::invalid_argument("decode_user: user not in the active set");
  const int col = static_cast<int>(pos - match.tau.begin()) + 1;
  const int demand = demands[col - 1];

  std::map<int, SymbolBlock> recovered;  // f -> C_{demand, f}
  for (int r = 1; r <= p.Fp; ++r) {
    const int s = match.b_bar.at(r, col);
    if (s < 1) continue;
    if (s > static_cast<int>(transmissions.size()))
      throw std::invalid_argument("decode_user: missing transmission");
    SymbolBlock value = transmissions[s - 1].payload;
    for (const auto& term : transmissions[s - 1].terms) {
      if (term.user == cache.user) continue;
      assert(cache.has(term.f) && "sibling term must be cached (C3)");
      const SymbolBlock& cached = cache.get(term.demand, term.f);
      for (size_t i = 0; i < value.size(); ++i) value[i] = Field::add(value[i], cached[i]);
    }
    recovered[match.zeta[r - 1]] = std::move(value);
  }

  std::vector<int> coords;
  std::vector<SymbolBlock> values;
  for (int f : cache.rows) {
    coords.push_back(f);
    values.push_back(cache.get(demand, f));
  }
  for (auto& [f, block] : recovered) {
    coords.push_back(f);
    values.push_back(std::move(block));
  }
  if (static_cast<int>(coords.size()) != lib.codec.k())
    throw std::logic_error("decode_user: expected exactly F'-Z'+Z coordinates, got " +
                           std::to_string(coords.size()));
  auto msg = lib.codec.decode_from(coords, values);
  return lib.message_to_bytes(msg, lib.originals[demand - 1].size());
}

// Seeded pseudo-random file library: N files of len bytes each.
inline std::vector<Bytes> random_files(int N, size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Bytes> files(N);
  for (auto& f : files) {
    f.resize(len);
    for (auto& byte : f) byte = static_cast<std::uint8_t>(rng());
  }
  return files;
}

// Full round trip: place, deliver, decode every active user, compare bytes.
inline SimReport simulate(const HpPda& h, int N, const std::vector<int>& tau,
                          const std::vector<int>& demands, std::uint64_t seed,
                          size_t file_bytes = 0) {
  const auto& p = h.params;
  if (file_bytes == 0) file_bytes = 64 * static_cast<size_t>(p.code_dim());
  FileLibrary lib(p, random_files(N, file_bytes, seed));
  auto caches = place(h, lib);
  auto match = find_zeta(h, tau);
  auto transmissions = deliver(h, lib, match, demands);

  SimReport rep;
  rep.tau = match.tau;
  rep.demands = demands;
  rep.rate = Rational(p.S, p.code_dim());
  rep.transmissions = static_cast<int>(transmissions.size());
  rep.subpacketization = p.code_dim();
  for (size_t i = 0; i < match.tau.size(); ++i) {
    const int user = match.tau[i];
    UserResult ur;
    ur.user = user;
    ur.demand = demands[i];
    Bytes got = decode_user(h, caches[user - 1], match, transmissions, demands, lib);
    const Bytes& want = lib.originals[demands[i] - 1];
    ur.bytes_compared = want.size();
    ur.success = (got == want);
    rep.users.push_back(ur);
  }
  return rep;
}

}  // namespace hotplug
