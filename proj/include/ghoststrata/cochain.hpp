#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghoststrata/arith.hpp"
#include "ghoststrata/graph.hpp"

namespace ghoststrata {

/// Z/ell-valued function on vertices.
class ZeroCochain {
 public:
  ZeroCochain(std::uint32_t modulus, std::vector<std::int64_t> values);
  static ZeroCochain zero(const Multigraph& g, std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return values_.size(); }
  std::uint32_t operator[](VertexId v) const { return values_[v]; }
  Residue at(VertexId v) const { return {values_.at(v), modulus_}; }
  const std::vector<std::uint32_t>& values() const { return values_; }
  bool is_zero() const;

  friend bool operator==(const ZeroCochain&, const ZeroCochain&) = default;

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> values_;
};

enum class Parity { odd, even };

/// Z/ell-valued function on darts with f(conj d) = -f(d) (odd) or f(d) (even).
template <Parity P>
class DartFunction {
 public:
  /// Values on every dart; throws std::invalid_argument if parity is violated.
  static DartFunction from_darts(const Multigraph& g, std::uint32_t modulus,
                                 std::span<const std::int64_t> values);
  /// Values on forward darts; conjugates are filled in by parity.
  static DartFunction from_edges(const Multigraph& g, std::uint32_t modulus,
                                 std::span<const std::int64_t> values);
  static DartFunction zero(const Multigraph& g, std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }
  std::size_t dart_count() const { return values_.size(); }
  std::size_t edge_count() const { return values_.size() / 2; }
  std::uint32_t operator[](DartId d) const { return values_[d]; }
  Residue at(DartId d) const { return {values_.at(d), modulus_}; }
  /// Value on the forward dart of `e`.
  std::uint32_t on_edge(EdgeId e) const { return values_[forward_dart(e)]; }
  const std::vector<std::uint32_t>& values() const { return values_; }
  std::vector<std::uint32_t> edge_values() const;

  bool is_zero() const;
  /// Edges with a nonzero value.
  EdgeSet support() const;

  DartFunction operator-() const;
  DartFunction& operator+=(const DartFunction& o);
  DartFunction& operator*=(std::uint32_t scalar);
  friend DartFunction operator+(DartFunction a, const DartFunction& b) { return a += b; }
  friend DartFunction operator*(DartFunction a, std::uint32_t s) { return a *= s; }

  friend bool operator==(const DartFunction&, const DartFunction&) = default;
  friend bool operator<(const DartFunction& a, const DartFunction& b) {
    return a.values_ < b.values_;
  }

 private:
  friend DartFunction<Parity::odd> multiply(const DartFunction<Parity::even>& a,
                                            const DartFunction<Parity::odd>& m);

  DartFunction(std::uint32_t modulus, std::vector<std::uint32_t> values)
      : modulus_(modulus), values_(std::move(values)) {}

  std::uint32_t modulus_ = 1;
  std::vector<std::uint32_t> values_;
};

using OneCochain = DartFunction<Parity::odd>;
using EvenFunction = DartFunction<Parity::even>;

extern template class DartFunction<Parity::odd>;
extern template class DartFunction<Parity::even>;

/// Pointwise product of an even function and a 1-cochain.
OneCochain multiply(const EvenFunction& a, const OneCochain& m);

/// (delta a)(d) = a(head d) - a(tail d).
OneCochain delta(const Multigraph& g, const ZeroCochain& a);

/// (boundary b)(v) = sum of b over darts with head v.
ZeroCochain boundary(const Multigraph& g, const OneCochain& b);

Residue pairing(const ZeroCochain& a1, const ZeroCochain& a2);

/// Sum over unoriented edges of b1(e) b2(e); the product does not depend on
/// the orientation read, and equals half the dart sum when ell is odd.
Residue pairing(const OneCochain& b1, const OneCochain& b2);

/// cut(e; T) for each tree edge e in increasing id: value 1 on the forward
/// dart of e, support otherwise outside the tree. Spans im(delta).
std::vector<OneCochain> cut_basis(const Multigraph& g, const EdgeSet& tree, std::uint32_t modulus);

/// True iff every fundamental circuit sum of `b` vanishes.
bool in_image_delta(const Multigraph& g, const OneCochain& b);

/// The a with delta a = b and a(0) = 0; throws std::invalid_argument if b is
/// not in im(delta).
ZeroCochain solve_delta(const Multigraph& g, const OneCochain& b);

/// An M with boundary M = d, zero off the spanning tree. Throws
/// std::invalid_argument when the values of d do not sum to zero.
OneCochain solve_boundary(const Multigraph& g, const ZeroCochain& d);

}  // namespace ghoststrata
