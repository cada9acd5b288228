// Direct assembly of the secondary Hochschild differential from its
// tensor-matrix description. Deliberately independent of the face-table
// machinery in cochain.cpp so the two constructions can cross-check each other.

#include <map>
#include <vector>

#include "hochschild/cochain.hpp"
#include "hochschild/errors.hpp"
#include "hochschild/tensor_matrix.hpp"

namespace hochschild {
namespace {

using Element = std::map<std::size_t, Scalar>;  // basis index -> nonzero coefficient

class Multiplier {
 public:
  explicit Multiplier(const Algebra& algebra) : algebra_(algebra) {}

  Element basis(std::size_t i) const { return {{i, Scalar::one(algebra_.field())}}; }

  Element times(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, xi] : x) {
      for (const auto& [j, yj] : y) {
        for (std::size_t k = 0; k < algebra_.dim(); ++k) {
          const Scalar& c = algebra_.constant(i, j, k);
          if (c.is_zero()) continue;
          auto [it, fresh] = out.try_emplace(k, xi * yj * c);
          if (!fresh) it->second += xi * yj * c;
        }
      }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

 private:
  const Algebra& algebra_;
};

// Slots of a degree-n tensor matrix inside A^{⊗n} ⊗ B^{⊗n(n-1)/2}.
class Layout {
 public:
  Layout(std::size_t n, BFactorOrder order) : n_(n), order_(order) {}

  std::size_t slots() const { return n_ + off_diagonal_count(n_); }
  std::size_t diagonal(std::size_t r) const { return r - 1; }
  std::size_t off_diagonal(std::size_t r, std::size_t c) const {
    std::size_t rank = off_diagonal_rank(r, c, n_);
    if (order_ == BFactorOrder::reversed) rank = off_diagonal_count(n_) - 1 - rank;
    return n_ + rank;
  }
  std::vector<std::size_t> radices(std::size_t dA, std::size_t dB) const {
    std::vector<std::size_t> r(n_, dA);
    r.insert(r.end(), off_diagonal_count(n_), dB);
    return r;
  }

 private:
  std::size_t n_;
  BFactorOrder order_;
};

class SecondaryBuilder {
 public:
  SecondaryBuilder(std::size_t n, const Triple& triple, BFactorOrder order)
      : n_(n),
        triple_(triple),
        in_(n, order),
        out_(n - 1, order),
        in_index_(in_.radices(triple.A.dim(), triple.B.dim())),
        out_index_(out_.radices(triple.A.dim(), triple.B.dim())),
        mul_a_(triple.A),
        mul_b_(triple.B),
        one_(Scalar::one(triple.field())) {
    for (std::size_t j = 0; j < triple.B.dim(); ++j) {
      Element e;
      auto image = triple.epsilon.image_of_basis(j);
      for (std::size_t r = 0; r < triple.A.dim(); ++r) {
        if (!image[r].is_zero()) e.emplace(r, image[r]);
      }
      eps_.push_back(std::move(e));
    }
  }

  SparseMatrix build() {
    const std::size_t dM = triple_.M.dim();
    std::vector<std::size_t> digits(in_.slots());
    for (std::size_t x = 0; x < in_index_.size(); ++x) {
      in_index_.decode(x, digits);
      auto a = [&](std::size_t r) { return digits[in_.diagonal(r)]; };
      auto alpha = [&](std::size_t r, std::size_t c) { return digits[in_.off_diagonal(r, c)]; };

      // a_1 ε(α_{1,2} ... α_{1,n}) f(rows and columns 2..n)
      {
        Element left = mul_a_.basis(a(1));
        for (std::size_t c = 2; c <= n_; ++c) left = mul_a_.times(left, eps_[alpha(1, c)]);
        std::vector<std::size_t> arg(out_.slots());
        for (std::size_t r = 1; r < n_; ++r) {
          arg[out_.diagonal(r)] = a(r + 1);
          for (std::size_t c = r + 1; c < n_; ++c) arg[out_.off_diagonal(r, c)] = alpha(r + 1, c + 1);
        }
        add_action_term(x, out_index_.encode(arg), left, one_);
      }

      // (-1)^i f(rows/columns i and i+1 merged)
      for (std::size_t i = 1; i < n_; ++i) {
        std::vector<Element> slot(out_.slots());
        for (std::size_t r = 1; r < n_; ++r) {
          if (r < i) {
            slot[out_.diagonal(r)] = mul_a_.basis(a(r));
          } else if (r == i) {
            slot[out_.diagonal(r)] =
                mul_a_.times(mul_a_.times(mul_a_.basis(a(i)), mul_a_.basis(a(i + 1))), eps_[alpha(i, i + 1)]);
          } else {
            slot[out_.diagonal(r)] = mul_a_.basis(a(r + 1));
          }
          for (std::size_t c = r + 1; c < n_; ++c) {
            Element entry;
            if (r < i && c < i) {
              entry = mul_b_.basis(alpha(r, c));
            } else if (r < i && c == i) {
              entry = mul_b_.times(mul_b_.basis(alpha(r, i)), mul_b_.basis(alpha(r, i + 1)));
            } else if (r < i) {
              entry = mul_b_.basis(alpha(r, c + 1));
            } else if (r == i) {
              entry = mul_b_.times(mul_b_.basis(alpha(i, c + 1)), mul_b_.basis(alpha(i + 1, c + 1)));
            } else {
              entry = mul_b_.basis(alpha(r + 1, c + 1));
            }
            slot[out_.off_diagonal(r, c)] = std::move(entry);
          }
        }
        add_plain_terms(x, slot, i % 2 == 0 ? one_ : -one_);
      }

      // (-1)^n f(rows and columns 1..n-1) a_n ε(α_{1,n} ... α_{n-1,n})
      {
        Element right = mul_a_.basis(a(n_));
        for (std::size_t r = 1; r < n_; ++r) right = mul_a_.times(right, eps_[alpha(r, n_)]);
        std::vector<std::size_t> arg(out_.slots());
        for (std::size_t r = 1; r < n_; ++r) {
          arg[out_.diagonal(r)] = a(r);
          for (std::size_t c = r + 1; c < n_; ++c) arg[out_.off_diagonal(r, c)] = alpha(r, c);
        }
        add_action_term(x, out_index_.encode(arg), right, n_ % 2 == 0 ? one_ : -one_);
      }
    }
    return SparseMatrix::from_triplets(triple_.field(), in_index_.size() * dM, out_index_.size() * dM,
                                       std::move(entries_));
  }

 private:
  // Row (x, l), column (t, k) += sign * coefficient of m_l in factor · m_k.
  void add_action_term(std::size_t x, std::size_t t, const Element& factor, const Scalar& sign) {
    const std::size_t dM = triple_.M.dim();
    for (const auto& [i, coef] : factor) {
      for (std::size_t k = 0; k < dM; ++k) {
        for (std::size_t l = 0; l < dM; ++l) {
          const Scalar& c = triple_.M.action(i, k, l);
          if (!c.is_zero()) entries_.push_back({x * dM + l, t * dM + k, sign * coef * c});
        }
      }
    }
  }

  // Expands the tensor of slot elements and adds sign * coefficient on the M-diagonal.
  void add_plain_terms(std::size_t x, const std::vector<Element>& slot, const Scalar& sign) {
    const std::size_t dM = triple_.M.dim();
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> terms{{{}, sign}};
    for (const auto& element : slot) {
      std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
      for (const auto& [prefix, coef] : terms) {
        for (const auto& [index, value] : element) {
          auto digits = prefix;
          digits.push_back(index);
          next.emplace_back(std::move(digits), coef * value);
        }
      }
      terms = std::move(next);
    }
    for (const auto& [digits, coef] : terms) {
      std::size_t t = out_index_.encode(digits);
      for (std::size_t k = 0; k < dM; ++k) entries_.push_back({x * dM + k, t * dM + k, coef});
    }
  }

  std::size_t n_;
  const Triple& triple_;
  Layout in_;
  Layout out_;
  BasisIndexer in_index_;
  BasisIndexer out_index_;
  Multiplier mul_a_;
  Multiplier mul_b_;
  std::vector<Element> eps_;
  Scalar one_;
  std::vector<MatrixEntry> entries_;
};

}  // namespace

SparseMatrix secondary_differential_direct(std::size_t n, const Triple& triple, BFactorOrder order) {
  if (n < 1) throw UsageError("secondary_differential_direct needs n >= 1");
  return SecondaryBuilder(n, triple, order).build();
}

}  // namespace hochschild
