#include "hochschild/cochain.hpp"

#include <string>
#include <unordered_map>

#include "hochschild/errors.hpp"
#include "parallel.hpp"

namespace hochschild {
namespace {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec to_sparse(std::span<const Scalar> dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  }
  return out;
}

// Folds a product of basis elements in `algebra`; `extra` elements (eps images) are multiplied in after.
std::vector<Scalar> fold_product(const Algebra& algebra, std::string_view counts,
                                 const std::vector<std::vector<Scalar>>& extra) {
  const std::size_t d = algebra.dim();
  std::vector<Scalar> acc(algebra.unit_coords().begin(), algebra.unit_coords().end());
  auto times = [&](std::span<const Scalar> y) {
    std::vector<Scalar> out(d, Scalar::zero(algebra.field()));
    for (std::size_t i = 0; i < d; ++i) {
      if (acc[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        Scalar xy = acc[i] * y[j];
        for (std::size_t k = 0; k < d; ++k) {
          const Scalar& c = algebra.constant(i, j, k);
          if (!c.is_zero()) out[k] += xy * c;
        }
      }
    }
    acc = std::move(out);
  };
  for (std::size_t b = 0; b < counts.size(); ++b) {
    for (int rep = 0; rep < static_cast<unsigned char>(counts[b]); ++rep) {
      if (b < d) {
        times(algebra.basis(b).coords());
      } else {
        times(extra[b - d]);
      }
    }
  }
  return acc;
}

void check_gamma2_table(LevelSize source, LevelSize target, std::span<const std::size_t> table) {
  if (table.size() != source.y_size) throw UsageError("map table length must equal |V_source|");
  if (table[0] != 0) throw UsageError("map must send the basepoint to the basepoint");
  for (std::size_t e = 0; e < table.size(); ++e) {
    if (table[e] >= target.y_size) throw UsageError("map value out of range at element " + std::to_string(e));
    if (e < source.x_size && table[e] >= target.x_size) {
      throw UsageError("map must send U_source into U_target (element " + std::to_string(e) + ")");
    }
  }
  if (source.y_size > 255 || target.y_size > 255) throw UsageError("levels above 255 elements are not supported");
}

/**
 * Builds the row block of L(f) belonging to one basis tensor of the source level.
 * Products of fibers are memoized by their multiset of basis indices.
 */
class PullbackAssembler {
 public:
  PullbackAssembler(const Triple& triple, LevelSize source, LevelSize target)
      : triple_(triple),
        source_(source),
        target_(target),
        source_space_(source, triple),
        target_space_(target, triple),
        digits_(source_space_.a_factors() + source_space_.b_factors()),
        target_digits_(target_space_.a_factors() + target_space_.b_factors()),
        a_keys_(target.x_size),
        b_keys_(target.y_size - target.x_size) {
    for (std::size_t j = 0; j < triple.B.dim(); ++j) {
      auto image = triple.epsilon.image_of_basis(j);
      eps_images_.emplace_back(image.coords().begin(), image.coords().end());
    }
  }

  const CochainSpace& source_space() const { return source_space_; }
  const CochainSpace& target_space() const { return target_space_; }

  /// rows[l] receives sign * (row (x, l) of L(table)).
  void accumulate(std::size_t x, std::span<const std::size_t> table, const Scalar& sign,
                  std::vector<RowAccumulator>& rows) {
    const std::size_t dA = triple_.A.dim();
    const std::size_t dB = triple_.B.dim();
    const std::size_t m1 = source_space_.a_factors();

    source_space_.tensors().decode(x, digits_);
    for (auto& key : a_keys_) key.assign(dA + dB, '\0');
    for (auto& key : b_keys_) key.assign(dB, '\0');

    for (std::size_t j = 1; j < source_.x_size; ++j) ++a_keys_[table[j]][digits_[j - 1]];
    for (std::size_t k = source_.x_size; k < source_.y_size; ++k) {
      std::size_t alpha = digits_[m1 + k - source_.x_size];
      std::size_t image = table[k];
      if (image < target_.x_size) {
        ++a_keys_[image][dA + alpha];
      } else {
        ++b_keys_[image - target_.x_size][alpha];
      }
    }

    const auto& b0_action = action_of(a_keys_[0]);
    if (b0_action.empty()) return;

    factors_.clear();
    for (std::size_t i = 1; i < a_keys_.size(); ++i) {
      const SparseVec& f = a_product(a_keys_[i]);
      if (f.empty()) return;
      factors_.push_back(&f);
    }
    for (const auto& key : b_keys_) {
      const SparseVec& f = b_product(key);
      if (f.empty()) return;
      factors_.push_back(&f);
    }

    // Odometer over the nonzero coordinates of every factor.
    const std::size_t dM = triple_.M.dim();
    cursor_.assign(factors_.size(), 0);
    while (true) {
      Scalar coef = sign;
      for (std::size_t s = 0; s < factors_.size(); ++s) {
        const auto& [index, value] = (*factors_[s])[cursor_[s]];
        target_digits_[s] = index;
        coef *= value;
      }
      std::size_t t = target_space_.tensors().encode(target_digits_);
      for (const auto& [kl, value] : b0_action) {
        std::size_t k = kl / dM;
        std::size_t l = kl % dM;
        rows[l].add(target_space_.coordinate(t, k), coef * value);
      }
      std::size_t s = factors_.size();
      while (s > 0) {
        --s;
        if (++cursor_[s] < factors_[s]->size()) break;
        cursor_[s] = 0;
        if (s == 0) return;
      }
      if (factors_.empty()) return;
    }
  }

 private:
  const SparseVec& a_product(const std::string& key) {
    auto it = a_cache_.find(key);
    if (it != a_cache_.end()) return it->second;
    return a_cache_.emplace(key, to_sparse(fold_product(triple_.A, key, eps_images_))).first->second;
  }

  const SparseVec& b_product(const std::string& key) {
    auto it = b_cache_.find(key);
    if (it != b_cache_.end()) return it->second;
    return b_cache_.emplace(key, to_sparse(fold_product(triple_.B, key, {}))).first->second;
  }

  // Nonzero entries of the dM x dM matrix of m ↦ b·m, keyed by k * dM + l.
  const SparseVec& action_of(const std::string& key) {
    auto it = action_cache_.find(key);
    if (it != action_cache_.end()) return it->second;
    const SparseVec& element = a_product(key);
    const std::size_t dM = triple_.M.dim();
    std::vector<Scalar> dense(dM * dM, Scalar::zero(triple_.field()));
    for (const auto& [i, coef] : element) {
      for (std::size_t k = 0; k < dM; ++k) {
        for (std::size_t l = 0; l < dM; ++l) {
          const Scalar& c = triple_.M.action(i, k, l);
          if (!c.is_zero()) dense[k * dM + l] += coef * c;
        }
      }
    }
    return action_cache_.emplace(key, to_sparse(dense)).first->second;
  }

  const Triple& triple_;
  LevelSize source_;
  LevelSize target_;
  CochainSpace source_space_;
  CochainSpace target_space_;
  std::vector<std::vector<Scalar>> eps_images_;
  std::vector<std::size_t> digits_;
  std::vector<std::size_t> target_digits_;
  std::vector<std::string> a_keys_;  // one per element of U_target, basepoint first
  std::vector<std::string> b_keys_;  // one per element of V_target \ U_target
  std::vector<const SparseVec*> factors_;
  std::vector<std::size_t> cursor_;
  std::unordered_map<std::string, SparseVec> a_cache_;
  std::unordered_map<std::string, SparseVec> b_cache_;
  std::unordered_map<std::string, SparseVec> action_cache_;
};

struct SignedFace {
  std::span<const std::size_t> table;
  Scalar sign;
};

SparseMatrix assemble(LevelSize source, LevelSize target, const std::vector<SignedFace>& faces,
                      const Triple& triple) {
  for (const auto& f : faces) check_gamma2_table(source, target, f.table);
  const CochainSpace source_space(source, triple);
  const CochainSpace target_space(target, triple);
  const std::size_t dM = triple.M.dim();

  auto blocks = detail::map_chunks<std::vector<MatrixEntry>>(
      source_space.tensors().size(), [&](std::size_t begin, std::size_t end) {
        PullbackAssembler assembler(triple, source, target);
        std::vector<RowAccumulator> rows(dM);
        std::vector<MatrixEntry> entries;
        for (std::size_t x = begin; x < end; ++x) {
          for (const auto& f : faces) assembler.accumulate(x, f.table, f.sign, rows);
          for (std::size_t l = 0; l < dM; ++l) {
            for (auto& [col, value] : rows[l].take_canonical()) {
              entries.push_back({source_space.coordinate(x, l), col, std::move(value)});
            }
          }
        }
        return entries;
      });

  std::vector<MatrixEntry> entries;
  for (auto& block : blocks) std::move(block.begin(), block.end(), std::back_inserter(entries));
  return SparseMatrix::from_canonical(triple.field(), source_space.total_dim(), target_space.total_dim(),
                                      std::move(entries));
}

std::vector<SignedFace> signed_faces(const SimplicialPair& pair, std::size_t level, FieldSpec field) {
  std::vector<SignedFace> faces;
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i <= level; ++i) faces.push_back({pair.face(level, i), i % 2 == 0 ? one : -one});
  return faces;
}

}  // namespace

BasisIndexer::BasisIndexer(std::vector<std::size_t> radices) : radices_(std::move(radices)), size_(1) {
  for (std::size_t r : radices_) {
    if (r == 0) throw UsageError("basis radix must be positive");
    size_ *= r;
  }
}

std::size_t BasisIndexer::encode(std::span<const std::size_t> digits) const {
  std::size_t index = 0;
  for (std::size_t s = 0; s < radices_.size(); ++s) index = index * radices_[s] + digits[s];
  return index;
}

void BasisIndexer::decode(std::size_t index, std::span<std::size_t> digits) const {
  for (std::size_t s = radices_.size(); s-- > 0;) {
    digits[s] = index % radices_[s];
    index /= radices_[s];
  }
}

CochainSpace::CochainSpace(LevelSize level, const Triple& triple)
    : a_factors_(level.x_size - 1),
      b_factors_(level.y_size - level.x_size),
      module_dim_(triple.M.dim()),
      tensors_([&] {
        std::vector<std::size_t> radices(a_factors_, triple.A.dim());
        radices.insert(radices.end(), b_factors_, triple.B.dim());
        return radices;
      }()) {}

SparseMatrix induced_map(LevelSize source, LevelSize target, std::span<const std::size_t> table,
                         const Triple& triple) {
  return assemble(source, target, {{table, Scalar::one(triple.field())}}, triple);
}

SparseMatrix pair_differential(const SimplicialPair& pair, std::size_t q, const Triple& triple) {
  if (q + 1 > pair.max_degree()) {
    throw UsageError("differential in degree " + std::to_string(q) + " needs the pair truncated at degree >= " +
                     std::to_string(q + 1));
  }
  return assemble(pair.level(q + 1), pair.level(q), signed_faces(pair, q + 1, triple.field()), triple);
}

SparseMatrix pair_pullback(const PairMorphism& morphism, std::size_t q, const Triple& triple) {
  if (q > morphism.source().max_degree()) throw UsageError("pullback degree exceeds the truncation");
  return induced_map(morphism.source().level(q), morphism.target().level(q), morphism.map(q), triple);
}

std::optional<MatrixDifference> differential_square_defect(const SimplicialPair& pair, std::size_t q,
                                                           const Triple& triple) {
  if (q + 2 > pair.max_degree()) throw UsageError("d^2 check in degree q needs the pair truncated at q+2");
  const SparseMatrix inner = pair_differential(pair, q, triple);
  const LevelSize source = pair.level(q + 2);
  const LevelSize target = pair.level(q + 1);
  const auto faces = signed_faces(pair, q + 2, triple.field());
  for (const auto& f : faces) check_gamma2_table(source, target, f.table);
  const CochainSpace source_space(source, triple);
  const std::size_t dM = triple.M.dim();

  auto defects = detail::map_chunks<std::optional<MatrixDifference>>(
      source_space.tensors().size(), [&](std::size_t begin, std::size_t end) -> std::optional<MatrixDifference> {
        PullbackAssembler assembler(triple, source, target);
        std::vector<RowAccumulator> rows(dM);
        RowAccumulator product;
        for (std::size_t x = begin; x < end; ++x) {
          for (const auto& f : faces) assembler.accumulate(x, f.table, f.sign, rows);
          for (std::size_t l = 0; l < dM; ++l) {
            for (const auto& [mid, value] : rows[l].take_canonical()) {
              for (const auto& e : inner.row(mid)) product.add(e.col, value * e.value);
            }
            auto composite = product.take_canonical();
            if (!composite.empty()) {
              return MatrixDifference{source_space.coordinate(x, l), composite.front().first,
                                      composite.front().second, Scalar::zero(triple.field())};
            }
          }
        }
        return std::nullopt;
      });
  for (auto& d : defects) {
    if (d) return d;
  }
  return std::nullopt;
}

}  // namespace hochschild
