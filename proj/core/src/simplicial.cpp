#include "hochschild/simplicial.hpp"

#include <string>

#include "hochschild/errors.hpp"
#include "hochschild/tensor_matrix.hpp"

namespace hochschild {
namespace {

using Label = DiskCellLabel;

// d_i on the cells of (S^1, D^2); n is the degree of `cell`.
Label disk_face(const Label& cell, std::size_t i) {
  const std::size_t n = cell.degree;
  const std::size_t a = cell.a, b = cell.b, c = cell.c;
  switch (cell.kind) {
    case Label::Kind::basepoint:
      return Label::basepoint(n - 1);
    case Label::Kind::interval:
      if (a == 0 && i == 0) return Label::basepoint(n - 1);
      if (a != 0 && i <= a) return Label::interval(a - 1, b);
      if (b != 0 && i > a) return Label::interval(a, b - 1);
      return Label::basepoint(n - 1);  // b == 0, i == n
    case Label::Kind::triangle:
      if (a == 0 && i == 0) return Label::basepoint(n - 1);
      if (a != 0 && i <= a) return Label::triangle(a - 1, b, c);
      if (b == 0 && i == a + 1) return Label::interval(a, c);
      if (b != 0 && i <= a + b + 1) return Label::triangle(a, b - 1, c);
      if (c == 0 && i == n) return Label::basepoint(n - 1);
      return Label::triangle(a, b, c - 1);  // c != 0, i >= a+b+2
  }
  throw ConsistencyError("unreachable cell kind");
}

SimplicialPair build_from_cells(std::size_t max_degree, bool include_triangles) {
  if (max_degree < 1) throw UsageError("max_degree must be at least 1");
  std::vector<LevelSize> levels;
  std::vector<std::vector<SimplicialPair::FaceTable>> faces(max_degree + 1);
  for (std::size_t q = 0; q <= max_degree; ++q) {
    std::size_t x_size = q + 1;
    std::size_t y_size = include_triangles ? x_size + off_diagonal_count(q) : x_size;
    levels.push_back({y_size, x_size});
    if (q == 0) continue;
    faces[q].assign(q + 1, SimplicialPair::FaceTable(y_size));
    for (std::size_t e = 0; e < y_size; ++e) {
      Label cell = label_at_position(disk_position_at(e, q), q);
      for (std::size_t i = 0; i <= q; ++i) {
        faces[q][i][e] = disk_index_of(tensor_position_of(disk_face(cell, i), q - 1), q - 1);
      }
    }
  }
  return SimplicialPair(std::move(levels), std::move(faces));
}

}  // namespace

SimplicialPair::SimplicialPair(std::vector<LevelSize> levels, std::vector<std::vector<FaceTable>> faces)
    : levels_(std::move(levels)), faces_(std::move(faces)) {
  if (levels_.empty()) throw UsageError("a simplicial pair needs at least level 0");
  if (faces_.size() != levels_.size()) throw UsageError("need one list of face tables per level");
  if (!faces_[0].empty()) throw UsageError("level 0 has no face maps");
  for (std::size_t q = 0; q < levels_.size(); ++q) {
    const auto& lv = levels_[q];
    if (lv.x_size < 1 || lv.x_size > lv.y_size) {
      throw UsageError("level " + std::to_string(q) + " needs 1 <= x_size <= y_size");
    }
    if (q == 0) continue;
    if (faces_[q].size() != q + 1) throw UsageError("level " + std::to_string(q) + " needs q+1 face tables");
    for (const auto& table : faces_[q]) {
      if (table.size() != lv.y_size) {
        throw UsageError("face table at level " + std::to_string(q) + " must have y_size entries");
      }
    }
  }
}

ValidationReport validate_pair(const SimplicialPair& pair) {
  ValidationReport report;
  bool in_range = true;
  for (std::size_t q = 1; q <= pair.max_degree(); ++q) {
    const auto& lower = pair.level(q - 1);
    const auto& upper = pair.level(q);
    for (std::size_t i = 0; i <= q; ++i) {
      auto table = pair.face(q, i);
      if (table[0] != 0) report.add("basepoint", {q, i, 0});
      for (std::size_t e = 0; e < upper.y_size; ++e) {
        if (table[e] >= lower.y_size) {
          report.add("range", {q, i, e});
          in_range = false;
        } else if (e < upper.x_size && table[e] >= lower.x_size) {
          report.add("x_into_x", {q, i, e});
        }
      }
    }
  }
  if (!in_range) return report;

  // d_i d_j = d_{j-1} d_i for i < j, as maps Y_q -> Y_{q-2}.
  for (std::size_t q = 2; q <= pair.max_degree(); ++q) {
    for (std::size_t j = 1; j <= q; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        auto dj = pair.face(q, j);
        auto di = pair.face(q, i);
        auto di_low = pair.face(q - 1, i);
        auto djm1_low = pair.face(q - 1, j - 1);
        for (std::size_t e = 0; e < pair.level(q).y_size; ++e) {
          if (di_low[dj[e]] != djm1_low[di[e]]) report.add("simplicial_identity", {q, i, j, e});
        }
      }
    }
  }
  return report;
}

SimplicialPair build_point(std::size_t max_degree) {
  if (max_degree < 1) throw UsageError("max_degree must be at least 1");
  std::vector<LevelSize> levels(max_degree + 1, LevelSize{1, 1});
  std::vector<std::vector<SimplicialPair::FaceTable>> faces(max_degree + 1);
  for (std::size_t q = 1; q <= max_degree; ++q) faces[q].assign(q + 1, SimplicialPair::FaceTable{0});
  return SimplicialPair(std::move(levels), std::move(faces));
}

SimplicialPair build_circle_pair(std::size_t max_degree) { return build_from_cells(max_degree, false); }

SimplicialPair build_disk_pair(std::size_t max_degree) { return build_from_cells(max_degree, true); }

SimplicialPair builtin_pair(std::string_view name, std::size_t max_degree) {
  if (name == "point") return build_point(max_degree);
  if (name == "circle") return build_circle_pair(max_degree);
  if (name == "disk-pair") return build_disk_pair(max_degree);
  throw UsageError("unknown builtin pair '" + std::string(name) + "'");
}

PairMorphism::PairMorphism(SimplicialPair source, SimplicialPair target, std::vector<std::vector<std::size_t>> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  if (source_.max_degree() != target_.max_degree()) throw UsageError("pair morphism needs equal truncation");
  if (maps_.size() != source_.max_degree() + 1) throw UsageError("pair morphism needs one map per level");
  for (std::size_t q = 0; q < maps_.size(); ++q) {
    if (maps_[q].size() != source_.level(q).y_size) throw UsageError("pair morphism map has wrong length");
  }
}

ValidationReport validate_morphism(const PairMorphism& morphism) {
  ValidationReport report;
  const auto& src = morphism.source();
  const auto& tgt = morphism.target();
  bool in_range = true;
  for (std::size_t q = 0; q <= src.max_degree(); ++q) {
    auto h = morphism.map(q);
    if (h[0] != 0) report.add("basepoint", {q, 0});
    for (std::size_t e = 0; e < h.size(); ++e) {
      if (h[e] >= tgt.level(q).y_size) {
        report.add("range", {q, e});
        in_range = false;
      } else if (e < src.level(q).x_size && h[e] >= tgt.level(q).x_size) {
        report.add("x_into_x", {q, e});
      }
    }
  }
  if (!in_range) return report;
  for (std::size_t q = 1; q <= src.max_degree(); ++q) {
    auto h = morphism.map(q);
    auto h_low = morphism.map(q - 1);
    for (std::size_t i = 0; i <= q; ++i) {
      auto d_src = src.face(q, i);
      auto d_tgt = tgt.face(q, i);
      for (std::size_t e = 0; e < h.size(); ++e) {
        if (h_low[d_src[e]] != d_tgt[h[e]]) report.add("face_commutation", {q, i, e});
      }
    }
  }
  return report;
}

PairMorphism inclusion_circle_into_disk(std::size_t max_degree) {
  SimplicialPair circle = build_circle_pair(max_degree);
  SimplicialPair disk = build_disk_pair(max_degree);
  std::vector<std::vector<std::size_t>> maps;
  for (std::size_t q = 0; q <= max_degree; ++q) {
    std::vector<std::size_t> m(circle.level(q).y_size);
    for (std::size_t e = 0; e < m.size(); ++e) m[e] = e;
    maps.push_back(std::move(m));
  }
  return PairMorphism(std::move(circle), std::move(disk), std::move(maps));
}

}  // namespace hochschild
