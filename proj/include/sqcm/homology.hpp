#pragma once

#include <cstdint>
#include <vector>

#include "sqcm/simplicial_complex.hpp"

namespace sqcm {

/// A prime field GF(p). Characteristics up to 251 are supported (entries are
/// stored in bytes; p = 2 uses bit-packed rows).
struct FieldSpec {
  int p;
  explicit FieldSpec(int characteristic);
  friend bool operator==(FieldSpec a, FieldSpec b) { return a.p == b.p; }
};

/// Dense matrix over GF(p).
class GfMatrix {
 public:
  GfMatrix(int rows, int cols, FieldSpec field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldSpec field() const { return field_; }

  void set(int r, int c, int value);  // value taken mod p
  int at(int r, int c) const;

  /// Gaussian elimination rank; does not modify the matrix.
  int rank() const;

  /// True iff this * other == 0 (used for the dd = 0 property check).
  bool product_is_zero(const GfMatrix& other) const;

 private:
  int rows_, cols_;
  FieldSpec field_;
  size_t words_per_row_ = 0;            // p == 2
  std::vector<std::uint64_t> bits_;     // p == 2
  std::vector<std::uint8_t> entries_;   // p > 2
};

/// Boundary map from i-chains to (i-1)-chains of the complex, with the
/// alternating-sign convention under the global vertex order. Rows are the
/// (i-1)-faces, columns the i-faces; i = 0 gives the augmentation row over
/// the empty face. Valid for -1 <= i <= dim.
GfMatrix boundary_matrix(const SimplicialComplex& complex, int i, FieldSpec field);

/// Reduced Betti numbers b~_{-1} .. b~_dim over GF(p).
struct HomologyProfile {
  FieldSpec field;
  int dim;                       // dimension of the complex
  std::vector<long> betti;       // betti[k] = b~_{k-1}
  long reduced_betti(int i) const {
    const int k = i + 1;
    if (k < 0 || k >= static_cast<int>(betti.size())) return 0;
    return betti[static_cast<size_t>(k)];
  }
};

HomologyProfile reduced_betti_numbers(const SimplicialComplex& complex, FieldSpec field);

/// Alternating sum of face counts, sum over i >= -1 of (-1)^i f_i with
/// f_{-1} = 1; equals the alternating sum of reduced Betti numbers.
long reduced_euler_characteristic(const SimplicialComplex& complex);

}  // namespace sqcm
