// Copyright 2026 The gbent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// V_n as a product of blocks, each either F_p^m with the dot product or
// F_{p^m} with the trace form <a, x> = Tr(a x).
//
// Canonical enumeration: mixed radix over blocks with the last block least
// significant. Inside a dot block the first coordinate is most significant;
// inside a field block the local index is the element index sum_u c_u p^u.
// The base-p digits of an index are therefore the coordinates of the point,
// and digit position 0 is the least significant one.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gbent/errors.hpp"
#include "gbent/field.hpp"
#include "gbent/util.hpp"

namespace gbent {

struct DotBlock {
  unsigned m = 1;
};

struct FieldBlock {
  ExtField field;
};

using Block = std::variant<DotBlock, FieldBlock>;

inline unsigned block_dimension(const Block& b) {
  if (auto d = std::get_if<DotBlock>(&b)) return d->m;
  return std::get<FieldBlock>(b).field.degree();
}

// One component per block: a coordinate tuple for dot blocks, a field element
// for trace-form blocks.
using Component = std::variant<std::vector<std::uint64_t>, FieldElem>;

struct Point {
  std::vector<Component> parts;
};

// Coordinate change that turns the block inner products into a plain dot
// product: <a, x> = dual(a) . coords(x). Dot blocks map identically; for a
// field block coords are power-basis coordinates and dual(a)_u = Tr(a z^u),
// i.e. the coordinates of a in the trace-dual basis.
struct BlockDuality {
  std::vector<std::vector<std::uint64_t>> gram;  // Tr(z^u z^v), empty for dot blocks
  std::vector<FieldElem> dual_basis;             // d_v with Tr(z^u d_v) = [u == v]
};

namespace detail {

// Inverse of a square matrix over F_p by Gauss-Jordan elimination.
inline std::vector<std::vector<std::uint64_t>> invert_mod_p(
    std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t m = a.size();
  std::vector<std::vector<std::uint64_t>> inv(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw InvariantError("singular Gram matrix for a trace form");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const auto s = inv_mod(a[col][col], p);
    for (std::size_t j = 0; j < m; ++j) {
      a[col][j] = a[col][j] * s % p;
      inv[col][j] = inv[col][j] * s % p;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const auto f = a[r][col];
      for (std::size_t j = 0; j < m; ++j) {
        a[r][j] = (a[r][j] + (p - f) * a[col][j]) % p;
        inv[r][j] = (inv[r][j] + (p - f) * inv[col][j]) % p;
      }
    }
  }
  return inv;
}

}  // namespace detail

class DomainSpec {
 public:
  DomainSpec() = default;

  DomainSpec(std::uint64_t p, std::vector<Block> blocks) : p_(p), blocks_(std::move(blocks)) {
    if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime");
    if (blocks_.empty()) throw UsageError("domain needs at least one block");
    unsigned n = 0;
    for (const auto& b : blocks_) {
      if (auto f = std::get_if<FieldBlock>(&b); f && f->field.p() != p)
        throw UsageError("field block characteristic differs from p");
      if (block_dimension(b) == 0) throw UsageError("block of dimension zero");
      n += block_dimension(b);
    }
    n_ = n;
    size_ = ipow(p, n);
    if (size_ > (1ull << 32)) throw UsageError("domain too large");
    // digit offsets: last block at offset 0
    offsets_.resize(blocks_.size());
    unsigned off = 0;
    for (std::size_t b = blocks_.size(); b-- > 0;) {
      offsets_[b] = off;
      off += block_dimension(blocks_[b]);
    }
    pow_.resize(n + 1);
    pow_[0] = 1;
    for (unsigned d = 1; d <= n; ++d) pow_[d] = pow_[d - 1] * p;
    build_duality();
  }

  static DomainSpec dot(std::uint64_t p, unsigned n) {
    return DomainSpec(p, {DotBlock{n}});
  }

  // "dot:m" and "field:m:poly=c0,...,cm" blocks, comma separated. A field
  // block of degree m consumes exactly m+1 coefficients.
  static DomainSpec parse(std::uint64_t p, std::string_view text) {
    auto toks = split(trim(text), ',');
    std::vector<Block> blocks;
    for (std::size_t t = 0; t < toks.size(); ++t) {
      auto tok = trim(toks[t]);
      if (tok.starts_with("dot:")) {
        auto m = parse_int(tok.substr(4));
        if (m < 1) throw ParseError("dot block dimension must be positive");
        blocks.push_back(DotBlock{static_cast<unsigned>(m)});
      } else if (tok.starts_with("field:")) {
        auto rest = tok.substr(6);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos || !rest.substr(colon + 1).starts_with("poly="))
          throw ParseError("field block must read field:m:poly=c0,...,cm");
        auto m = parse_int(rest.substr(0, colon));
        if (m < 1 || m > static_cast<std::int64_t>(kMaxFieldDegree))
          throw ParseError("field block degree out of range");
        std::vector<std::uint64_t> coeffs{mod(parse_int(rest.substr(colon + 6)), p)};
        for (std::int64_t u = 0; u < m; ++u) {
          if (++t >= toks.size()) throw ParseError("field block polynomial is too short");
          coeffs.push_back(mod(parse_int(toks[t]), p));
        }
        blocks.push_back(FieldBlock{ExtField(p, std::move(coeffs))});
      } else {
        throw ParseError("unknown block '" + std::string(tok) + "'");
      }
    }
    return DomainSpec(p, std::move(blocks));
  }

  std::string to_string() const {
    std::string s;
    for (const auto& b : blocks_) {
      if (!s.empty()) s += ',';
      if (auto d = std::get_if<DotBlock>(&b))
        s += "dot:" + std::to_string(d->m);
      else {
        const auto& f = std::get<FieldBlock>(b).field;
        s += "field:" + std::to_string(f.degree()) + ":poly=" + f.poly_string();
      }
    }
    return s;
  }

  std::uint64_t p() const { return p_; }
  unsigned dimension() const { return n_; }
  Index size() const { return size_; }
  std::span<const Block> blocks() const { return blocks_; }
  const BlockDuality& duality(std::size_t b) const { return duality_[b]; }

  bool operator==(const DomainSpec& o) const { return p_ == o.p_ && to_string() == o.to_string(); }

  // Blocks of this domain followed by the blocks of `tail`.
  DomainSpec product(const DomainSpec& tail) const {
    if (tail.p_ != p_) throw UsageError("product of domains over different primes");
    std::vector<Block> all = blocks_;
    all.insert(all.end(), tail.blocks_.begin(), tail.blocks_.end());
    return DomainSpec(p_, std::move(all));
  }

  // Index of (x, y) in the product domain x-blocks ++ y-blocks.
  static Index product_index(Index x, Index y, Index tail_size) { return x * tail_size + y; }

  std::uint64_t digit(Index idx, unsigned pos) const { return (idx / pow_[pos]) % p_; }

  Point point(Index idx) const {
    if (idx >= size_) throw UsageError("index out of range");
    Point pt;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const unsigned m = block_dimension(blocks_[b]);
      const Index local = (idx / pow_[offsets_[b]]) % pow_[m];
      if (auto f = std::get_if<FieldBlock>(&blocks_[b])) {
        pt.parts.emplace_back(f->field.element(local));
      } else {
        std::vector<std::uint64_t> xs(m);
        Index rest = local;
        for (unsigned i = m; i-- > 0;) {
          xs[i] = rest % p_;
          rest /= p_;
        }
        pt.parts.emplace_back(std::move(xs));
      }
    }
    return pt;
  }

  Index index(const Point& pt) const {
    check_shape(pt);
    Index idx = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const unsigned m = block_dimension(blocks_[b]);
      Index local = 0;
      if (auto f = std::get_if<FieldBlock>(&blocks_[b])) {
        local = std::get<FieldElem>(pt.parts[b]).index();
      } else {
        for (auto v : std::get<std::vector<std::uint64_t>>(pt.parts[b])) {
          if (v >= p_) throw UsageError("coordinate not reduced mod p");
          local = local * p_ + v;
        }
      }
      idx = idx * pow_[m] + local;
    }
    return idx;
  }

  // Sum of the block forms, evaluated directly (field products and traces).
  std::uint64_t inner_product(const Point& a, const Point& x) const {
    check_shape(a);
    check_shape(x);
    std::uint64_t s = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (std::holds_alternative<FieldBlock>(blocks_[b])) {
        s += (std::get<FieldElem>(a.parts[b]) * std::get<FieldElem>(x.parts[b])).trace();
      } else {
        const auto& u = std::get<std::vector<std::uint64_t>>(a.parts[b]);
        const auto& v = std::get<std::vector<std::uint64_t>>(x.parts[b]);
        for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i] % p_;
      }
      s %= p_;
    }
    return s;
  }

  // Same value through the dual coordinates: dual(a) . coords(x).
  std::uint64_t inner_product(Index a, Index x) const {
    const Index da = dual_index(a);
    std::uint64_t s = 0;
    for (unsigned d = 0; d < n_; ++d) s += digit(da, d) * digit(x, d);
    return s % p_;
  }

  Point negate(const Point& x) const {
    check_shape(x);
    Point r = x;
    for (auto& part : r.parts) {
      if (auto f = std::get_if<FieldElem>(&part))
        *f = -*f;
      else
        for (auto& v : std::get<std::vector<std::uint64_t>>(part)) v = (p_ - v) % p_;
    }
    return r;
  }

  // Negation and addition act digitwise in both block kinds.
  Index negate(Index x) const {
    Index r = 0;
    for (unsigned d = n_; d-- > 0;) r = r * p_ + (p_ - digit(x, d)) % p_;
    return r;
  }

  Index add(Index x, Index y) const {
    Index r = 0;
    for (unsigned d = n_; d-- > 0;) r = r * p_ + (digit(x, d) + digit(y, d)) % p_;
    return r;
  }

  // Coordinates of a point: dot coordinates, and power-basis coordinates for
  // field blocks, concatenated in block order.
  std::vector<std::uint64_t> coords(const Point& x) const { return coords(index(x)); }

  std::vector<std::uint64_t> coords(Index x) const {
    std::vector<std::uint64_t> out;
    out.reserve(n_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const unsigned m = block_dimension(blocks_[b]);
      if (std::holds_alternative<FieldBlock>(blocks_[b]))
        for (unsigned u = 0; u < m; ++u) out.push_back(digit(x, offsets_[b] + u));
      else
        for (unsigned i = m; i-- > 0;) out.push_back(digit(x, offsets_[b] + i));
    }
    return out;
  }

  // Dual coordinates of a point, laid out like coords().
  std::vector<std::uint64_t> dual_coords(const Point& a) const { return coords(dual_index(index(a))); }

  // The index whose digits are the dual coordinates of a.
  Index dual_index(Index a) const {
    if (!has_field_) return a;
    if (dual_table_) return (*dual_table_)[a];
    return compute_dual_index(a);
  }

 private:
  void check_shape(const Point& pt) const {
    if (pt.parts.size() != blocks_.size()) throw UsageError("point shape does not match domain");
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (auto f = std::get_if<FieldBlock>(&blocks_[b])) {
        auto e = std::get_if<FieldElem>(&pt.parts[b]);
        if (!e || !(e->field() == f->field))
          throw UsageError("point component is not an element of the block field");
      } else {
        auto v = std::get_if<std::vector<std::uint64_t>>(&pt.parts[b]);
        if (!v || v->size() != std::get<DotBlock>(blocks_[b]).m)
          throw UsageError("point component has the wrong number of coordinates");
      }
    }
  }

  void build_duality() {
    duality_.resize(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      auto f = std::get_if<FieldBlock>(&blocks_[b]);
      if (!f) continue;
      const auto& F = f->field;
      const unsigned m = F.degree();
      auto& dual = duality_[b];
      dual.gram.assign(m, std::vector<std::uint64_t>(m, 0));
      for (unsigned u = 0; u < m; ++u)
        for (unsigned v = 0; v < m; ++v) dual.gram[u][v] = (F.z_pow(u) * F.z_pow(v)).trace();
      const auto inv = detail::invert_mod_p(dual.gram, p_);
      for (unsigned v = 0; v < m; ++v) {
        FieldElem d = F.zero();
        for (unsigned u = 0; u < m; ++u) d += F.z_pow(u).scaled(static_cast<std::int64_t>(inv[v][u]));
        dual.dual_basis.push_back(d);
      }
    }
    has_field_ = std::any_of(blocks_.begin(), blocks_.end(),
                             [](const Block& b) { return std::holds_alternative<FieldBlock>(b); });
    if (has_field_ && size_ <= (1ull << 22)) {
      auto table = std::make_shared<std::vector<Index>>(size_);
      for (Index a = 0; a < size_; ++a) (*table)[a] = compute_dual_index(a);
      dual_table_ = std::move(table);
    }
  }

  Index compute_dual_index(Index a) const {
    Index r = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const unsigned m = block_dimension(blocks_[b]);
      const unsigned off = offsets_[b];
      Index local = (a / pow_[off]) % pow_[m];
      if (std::holds_alternative<FieldBlock>(blocks_[b])) {
        // dual(a)_v = Tr(a z^v) = sum_u a_u Tr(z^u z^v)
        const auto& gram = duality_[b].gram;
        Index out = 0;
        for (unsigned v = m; v-- > 0;) {
          std::uint64_t s = 0;
          for (unsigned u = 0; u < m; ++u) s += digit(a, off + u) * gram[u][v] % p_;
          out = out * p_ + s % p_;
        }
        local = out;
      }
      r += local * pow_[off];
    }
    return r;
  }

  std::uint64_t p_ = 0;
  std::vector<Block> blocks_;
  unsigned n_ = 0;
  Index size_ = 0;
  std::vector<unsigned> offsets_;
  std::vector<Index> pow_;
  std::vector<BlockDuality> duality_;
  bool has_field_ = false;
  std::shared_ptr<const std::vector<Index>> dual_table_;
};

}  // namespace gbent
