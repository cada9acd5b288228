#include <vector>

#include "hochschild/cochain.hpp"
#include "hochschild/errors.hpp"

namespace hochschild {

SparseMatrix classical_differential(std::size_t n, const Algebra& A, const SymmetricBimodule& M) {
  if (!M.algebra().same_as(A)) throw UsageError("classical_differential: M is not a module over A");
  const FieldSpec field = A.field();
  const std::size_t dA = A.dim();
  const std::size_t dM = M.dim();
  const BasisIndexer source(std::vector<std::size_t>(n + 1, dA));
  const BasisIndexer target(std::vector<std::size_t>(n, dA));
  const Scalar one = Scalar::one(field);

  std::vector<MatrixEntry> entries;
  std::vector<std::size_t> a(n + 1);
  std::vector<std::size_t> arg(n);
  for (std::size_t x = 0; x < source.size(); ++x) {
    source.decode(x, a);

    // a_1 f(a_2, ..., a_{n+1})
    std::copy(a.begin() + 1, a.end(), arg.begin());
    std::size_t t = target.encode(arg);
    for (std::size_t k = 0; k < dM; ++k) {
      for (std::size_t l = 0; l < dM; ++l) {
        const Scalar& c = M.action(a[0], k, l);
        if (!c.is_zero()) entries.push_back({x * dM + l, t * dM + k, c});
      }
    }

    // (-1)^i f(a_1, ..., a_i a_{i+1}, ..., a_{n+1})
    for (std::size_t i = 1; i <= n; ++i) {
      Scalar sign = i % 2 == 0 ? one : -one;
      for (std::size_t s = 0; s < dA; ++s) {
        const Scalar& c = A.constant(a[i - 1], a[i], s);
        if (c.is_zero()) continue;
        std::size_t w = 0;
        for (std::size_t p = 0; p < n + 1; ++p) {
          if (p == i) continue;
          arg[w++] = p == i - 1 ? s : a[p];
        }
        t = target.encode(arg);
        for (std::size_t k = 0; k < dM; ++k) entries.push_back({x * dM + k, t * dM + k, sign * c});
      }
    }

    // (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}
    std::copy(a.begin(), a.end() - 1, arg.begin());
    t = target.encode(arg);
    Scalar sign = (n + 1) % 2 == 0 ? one : -one;
    for (std::size_t k = 0; k < dM; ++k) {
      for (std::size_t l = 0; l < dM; ++l) {
        const Scalar& c = M.action(a[n], k, l);
        if (!c.is_zero()) entries.push_back({x * dM + l, t * dM + k, sign * c});
      }
    }
  }
  return SparseMatrix::from_triplets(field, source.size() * dM, target.size() * dM, std::move(entries));
}

}  // namespace hochschild
