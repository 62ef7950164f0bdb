#include "sqcm/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "sqcm/errors.hpp"

namespace sqcm {

FieldSpec::FieldSpec(int characteristic) : p(characteristic) {
  if (p < 2) throw input_error("FieldSpec: characteristic must be a prime");
  if (p > 251) throw input_error("FieldSpec: characteristics above 251 are not supported");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw input_error("FieldSpec: " + std::to_string(p) + " is not prime");
}

GfMatrix::GfMatrix(int rows, int cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field) {
  if (field_.p == 2) {
    words_per_row_ = static_cast<size_t>((cols + 63) / 64);
    bits_.assign(static_cast<size_t>(rows) * words_per_row_, 0);
  } else {
    entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
  }
}

void GfMatrix::set(int r, int c, int value) {
  int v = value % field_.p;
  if (v < 0) v += field_.p;
  if (field_.p == 2) {
    auto& word = bits_[static_cast<size_t>(r) * words_per_row_ + static_cast<size_t>(c) / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    word = v ? (word | bit) : (word & ~bit);
  } else {
    entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] =
        static_cast<std::uint8_t>(v);
  }
}

int GfMatrix::at(int r, int c) const {
  if (field_.p == 2)
    return static_cast<int>(
        (bits_[static_cast<size_t>(r) * words_per_row_ + static_cast<size_t>(c) / 64] >>
         (c % 64)) &
        1);
  return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

int GfMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  if (field_.p == 2) {
    std::vector<std::uint64_t> work = bits_;
    auto row = [&](int r) { return work.data() + static_cast<size_t>(r) * words_per_row_; };
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
      const size_t word = static_cast<size_t>(c) / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      int pivot = -1;
      for (int r = rank; r < rows_; ++r)
        if (row(r)[word] & bit) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      if (pivot != rank)
        std::swap_ranges(row(pivot), row(pivot) + words_per_row_, row(rank));
      for (int r = rank + 1; r < rows_; ++r)
        if (row(r)[word] & bit)
          for (size_t w = 0; w < words_per_row_; ++w) row(r)[w] ^= row(rank)[w];
      ++rank;
    }
    return rank;
  }
  std::vector<int> work(entries_.begin(), entries_.end());
  auto at_ = [&](int r, int c) -> int& {
    return work[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
  };
  const int p = field_.p;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (at_(r, c) % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int cc = 0; cc < cols_; ++cc) std::swap(at_(pivot, cc), at_(rank, cc));
    // scale pivot row to 1
    int inv = 1;
    for (int x = 1; x < p; ++x)
      if ((x * at_(rank, c)) % p == 1) {
        inv = x;
        break;
      }
    for (int cc = 0; cc < cols_; ++cc) at_(rank, cc) = (at_(rank, cc) * inv) % p;
    for (int r = rank + 1; r < rows_; ++r) {
      const int f = at_(r, c) % p;
      if (f == 0) continue;
      for (int cc = 0; cc < cols_; ++cc)
        at_(r, cc) = ((at_(r, cc) - f * at_(rank, cc)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

bool GfMatrix::product_is_zero(const GfMatrix& other) const {
  if (cols_ != other.rows_) throw input_error("product_is_zero: shape mismatch");
  const int p = field_.p;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < other.cols_; ++c) {
      long acc = 0;
      for (int k = 0; k < cols_; ++k) acc += static_cast<long>(at(r, k)) * other.at(k, c);
      if (acc % p != 0) return false;
    }
  return true;
}

namespace {

// faces grouped by cardinality: groups[k] = faces with k vertices, sorted.
std::vector<std::vector<VertexSet>> faces_by_card(const SimplicialComplex& complex) {
  std::vector<std::vector<VertexSet>> groups(static_cast<size_t>(complex.dimension() + 2));
  for (VertexSet f : complex.all_faces()) groups[static_cast<size_t>(f.count())].push_back(f);
  return groups;
}

GfMatrix boundary_from_groups(const std::vector<std::vector<VertexSet>>& groups, int i,
                              FieldSpec field) {
  const auto& cols = static_cast<size_t>(i + 1) < groups.size()
                         ? groups[static_cast<size_t>(i + 1)]
                         : std::vector<VertexSet>{};
  const auto& rows = i >= 0 && static_cast<size_t>(i) < groups.size()
                         ? groups[static_cast<size_t>(i)]
                         : std::vector<VertexSet>{};
  std::unordered_map<std::uint64_t, int> row_index;
  for (size_t r = 0; r < rows.size(); ++r) row_index[rows[r].bits()] = static_cast<int>(r);
  GfMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), field);
  for (size_t c = 0; c < cols.size(); ++c) {
    int sign = 1;
    for (int v : cols[c]) {
      m.set(row_index.at(cols[c].without(v).bits()), static_cast<int>(c), sign);
      sign = -sign;
    }
  }
  return m;
}

}  // namespace

GfMatrix boundary_matrix(const SimplicialComplex& complex, int i, FieldSpec field) {
  if (i < -1 || i > complex.dimension())
    throw input_error("boundary_matrix: index out of range");
  return boundary_from_groups(faces_by_card(complex), i, field);
}

HomologyProfile reduced_betti_numbers(const SimplicialComplex& complex, FieldSpec field) {
  const auto groups = faces_by_card(complex);
  const int dim = complex.dimension();
  std::vector<int> rank(static_cast<size_t>(dim + 2), 0);  // rank[k] = rank of boundary_k
  for (int i = 0; i <= dim; ++i)
    rank[static_cast<size_t>(i)] = boundary_from_groups(groups, i, field).rank();
  HomologyProfile profile{field, dim, std::vector<long>(static_cast<size_t>(dim + 2), 0)};
  for (int i = -1; i <= dim; ++i) {
    const long chains = static_cast<size_t>(i + 1) < groups.size()
                            ? static_cast<long>(groups[static_cast<size_t>(i + 1)].size())
                            : 0;
    const long rk_i = i >= 0 ? rank[static_cast<size_t>(i)] : 0;
    const long rk_next = i + 1 <= dim ? rank[static_cast<size_t>(i + 1)] : 0;
    profile.betti[static_cast<size_t>(i + 1)] = chains - rk_i - rk_next;
  }
  return profile;
}

long reduced_euler_characteristic(const SimplicialComplex& complex) {
  long chi = 0;
  for (VertexSet f : complex.all_faces()) chi += (f.count() % 2 == 0) ? -1 : 1;
  return chi;
}

}  // namespace sqcm
