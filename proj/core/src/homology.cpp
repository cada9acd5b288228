#include "hochschild/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>

#include "hochschild/cochain.hpp"
#include "hochschild/errors.hpp"

namespace hochschild {
namespace {

template <class Value>
using Row = std::vector<std::pair<std::uint32_t, Value>>;

template <class Value>
const Value* find_col(const Row<Value>& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

struct ModPOps {
  std::uint64_t p;

  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t result = 1, base = a, exp = p - 2;
    while (exp) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return result;
  }

  // target - (target[col] / pivot[col]) * pivot
  Row<std::uint32_t> combine(const Row<std::uint32_t>& target, const Row<std::uint32_t>& pivot,
                             std::uint32_t col) const {
    std::uint64_t factor = *find_col(target, col) * inv(*find_col(pivot, col)) % p;
    std::uint64_t neg = (p - factor) % p;
    Row<std::uint32_t> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.push_back(target[i++]);
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, static_cast<std::uint32_t>(neg * pivot[j].second % p));
        ++j;
      } else {
        auto v = static_cast<std::uint32_t>((target[i].second + neg * pivot[j].second) % p);
        if (v != 0) out.emplace_back(target[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }
};

struct FractionFreeOps {
  static void make_primitive(Row<mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) return;
    }
    if (g > 1) {
      for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }

  // (p/g) * target - (t/g) * pivot with p = pivot[col], t = target[col], g = gcd(p, t).
  Row<mpz_class> combine(const Row<mpz_class>& target, const Row<mpz_class>& pivot, std::uint32_t col) const {
    mpz_class t = *find_col(target, col);
    mpz_class p = *find_col(pivot, col);
    mpz_class g = gcd(t, p);
    t /= g;
    p /= g;
    Row<mpz_class> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        out.emplace_back(target[i].first, p * target[i].second);
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, -t * pivot[j].second);
        ++j;
      } else {
        mpz_class v = p * target[i].second - t * pivot[j].second;
        if (v != 0) out.emplace_back(target[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    make_primitive(out);
    return out;
  }
};

template <class Value, class Ops>
std::size_t eliminate(std::vector<Row<Value>> rows, std::size_t ncols, const Ops& ops) {
  const std::size_t nrows = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::vector<std::size_t> col_count(ncols, 0);
  std::vector<char> active(nrows, 1);
  for (std::uint32_t r = 0; r < nrows; ++r) {
    if (rows[r].empty()) active[r] = 0;
    for (const auto& e : rows[r]) {
      col_rows[e.first].push_back(r);
      ++col_count[e.first];
    }
  }

  std::vector<std::uint32_t> stamp(nrows, 0);
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> holders;
  std::size_t rank = 0;
  while (true) {
    std::size_t best_col = ncols;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (col_count[c] > 0 && (best_col == ncols || col_count[c] < col_count[best_col])) {
        best_col = c;
        if (col_count[c] == 1) break;
      }
    }
    if (best_col == ncols) break;
    const auto col = static_cast<std::uint32_t>(best_col);

    ++epoch;
    holders.clear();
    for (std::uint32_t r : col_rows[col]) {
      if (!active[r] || stamp[r] == epoch || !find_col(rows[r], col)) continue;
      stamp[r] = epoch;
      holders.push_back(r);
    }
    col_rows[col].clear();
    std::uint32_t pivot = *std::min_element(holders.begin(), holders.end(), [&](std::uint32_t a, std::uint32_t b) {
      return rows[a].size() != rows[b].size() ? rows[a].size() < rows[b].size() : a < b;
    });
    active[pivot] = 0;
    ++rank;
    for (const auto& e : rows[pivot]) --col_count[e.first];

    for (std::uint32_t r : holders) {
      if (r == pivot) continue;
      for (const auto& e : rows[r]) --col_count[e.first];
      Row<Value> updated = ops.combine(rows[r], rows[pivot], col);
      // Register fill-in columns.
      std::size_t i = 0;
      for (const auto& e : updated) {
        ++col_count[e.first];
        while (i < rows[r].size() && rows[r][i].first < e.first) ++i;
        if (i == rows[r].size() || rows[r][i].first != e.first) col_rows[e.first].push_back(r);
      }
      rows[r] = std::move(updated);
      if (rows[r].empty()) active[r] = 0;
    }
    rows[pivot].clear();
    rows[pivot].shrink_to_fit();
  }
  return rank;
}

std::size_t rank_mod_p(const SparseMatrix& m) {
  std::vector<Row<std::uint32_t>> rows(m.rows());
  for (const auto& e : m.entries()) rows[e.row].emplace_back(static_cast<std::uint32_t>(e.col), e.value.residue());
  return eliminate(std::move(rows), m.cols(), ModPOps{m.field().characteristic()});
}

std::size_t rank_rational(const SparseMatrix& m) {
  std::vector<Row<mpz_class>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto entries = m.row(r);
    if (entries.empty()) continue;
    mpz_class denominators = 1;
    for (const auto& e : entries) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(),
                                          e.value.rational().get_den_mpz_t());
    for (const auto& e : entries) {
      const mpq_class& v = e.value.rational();
      rows[r].emplace_back(static_cast<std::uint32_t>(e.col), v.get_num() * (denominators / v.get_den()));
    }
    FractionFreeOps::make_primitive(rows[r]);
  }
  return eliminate(std::move(rows), m.cols(), FractionFreeOps{});
}

}  // namespace

std::size_t rank(const SparseMatrix& matrix) {
  if (matrix.rows() > UINT32_MAX || matrix.cols() > UINT32_MAX) throw UsageError("matrix too large for rank");
  return matrix.field().is_rational() ? rank_rational(matrix) : rank_mod_p(matrix);
}

CohomologyReport cohomology_from_differentials(std::span<const SparseMatrix> differentials) {
  for (std::size_t q = 0; q + 1 < differentials.size(); ++q) {
    const auto& lower = differentials[q];
    const auto& upper = differentials[q + 1];
    if (upper.cols() != lower.rows()) throw UsageError("differentials do not compose in degree " + std::to_string(q));
    auto square = upper * lower;
    if (!square.is_zero()) {
      const auto& e = square.entries().front();
      throw ConsistencyError("d^2 != 0 in degree " + std::to_string(q) + " at (" + std::to_string(e.row) + ", " +
                             std::to_string(e.col) + ") = " + e.value.to_string());
    }
  }

  std::vector<std::future<std::size_t>> pending;
  for (const auto& d : differentials) pending.push_back(std::async(std::launch::async, [&d] { return rank(d); }));
  std::vector<std::size_t> ranks;
  for (auto& f : pending) ranks.push_back(f.get());

  CohomologyReport report;
  for (std::size_t q = 0; q < differentials.size(); ++q) {
    DegreeCohomology d{q, differentials[q].cols(), ranks[q], q == 0 ? 0 : ranks[q - 1], 0};
    if (d.rank_out + d.rank_in > d.cochain_dim) throw ConsistencyError("ranks exceed cochain dimension");
    d.cohomology_dim = d.cochain_dim - d.rank_out - d.rank_in;
    report.degrees.push_back(d);
  }
  return report;
}

CohomologyReport cohomology_dims(const SimplicialPair& pair, const Triple& triple, std::size_t q_max) {
  if (q_max + 1 > pair.max_degree()) {
    throw UsageError("cohomology through degree " + std::to_string(q_max) + " needs the pair truncated at degree >= " +
                     std::to_string(q_max + 1));
  }
  std::vector<SparseMatrix> differentials;
  for (std::size_t q = 0; q <= q_max; ++q) differentials.push_back(pair_differential(pair, q, triple));
  return cohomology_from_differentials(differentials);
}

}  // namespace hochschild
