#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hochschild/validation.hpp"

namespace hochschild {

/// |Y_q| and |X_q|; elements [0, x_size) of level q are X_q, element 0 is the basepoint.
struct LevelSize {
  std::size_t y_size;
  std::size_t x_size;
  friend bool operator==(const LevelSize&, const LevelSize&) = default;
};

/**
 * A pointed simplicial pair X ⊆ Y truncated at degree N, stored as face tables.
 *
 * faces(q, i)[e] is d_i(e) for 1 <= q <= N, 0 <= i <= q. Degeneracies are not
 * stored. The constructor checks table counts and lengths; the pointed,
 * X-into-X and simplicial-identity conditions are left to validate_pair.
 */
class SimplicialPair {
 public:
  using FaceTable = std::vector<std::size_t>;

  /// `faces[q]` holds q+1 tables for q >= 1; `faces[0]` must be empty.
  SimplicialPair(std::vector<LevelSize> levels, std::vector<std::vector<FaceTable>> faces);

  std::size_t max_degree() const { return levels_.size() - 1; }
  const LevelSize& level(std::size_t q) const { return levels_.at(q); }
  std::span<const std::size_t> face(std::size_t q, std::size_t i) const { return faces_.at(q).at(i); }

  friend bool operator==(const SimplicialPair&, const SimplicialPair&) = default;

 private:
  std::vector<LevelSize> levels_;
  std::vector<std::vector<FaceTable>> faces_;
};

/// Witnesses are (q, i, element) or (q, i, j, element) for identity failures.
ValidationReport validate_pair(const SimplicialPair& pair);

/// Every level is {*}.
SimplicialPair build_point(std::size_t max_degree);
/// (S^1, S^1): level q is *_q followed by I(a, q-1-a) for a = 0..q-1.
SimplicialPair build_circle_pair(std::size_t max_degree);
/// (S^1, D^2): the circle levels followed by the triangle cells D(a,b,c) in tensor-matrix order.
SimplicialPair build_disk_pair(std::size_t max_degree);
/// "point", "circle", "disk-pair".
SimplicialPair builtin_pair(std::string_view name, std::size_t max_degree);

/// A levelwise map of pairs, maps[q] : Y^src_q -> Y^tgt_q.
class PairMorphism {
 public:
  PairMorphism(SimplicialPair source, SimplicialPair target, std::vector<std::vector<std::size_t>> maps);

  const SimplicialPair& source() const { return source_; }
  const SimplicialPair& target() const { return target_; }
  std::span<const std::size_t> map(std::size_t q) const { return maps_.at(q); }

 private:
  SimplicialPair source_;
  SimplicialPair target_;
  std::vector<std::vector<std::size_t>> maps_;
};

/// Basepoint preservation, X into X, range, and d_i h = h d_i.
ValidationReport validate_morphism(const PairMorphism& morphism);

/// (S^1, S^1) -> (S^1, D^2), the identity on the X-block.
PairMorphism inclusion_circle_into_disk(std::size_t max_degree);

}  // namespace hochschild
