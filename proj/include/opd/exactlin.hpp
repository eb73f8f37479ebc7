#ifndef OPD_EXACTLIN_HPP
#define OPD_EXACTLIN_HPP

#include "opd/rat.hpp"

#include <utility>
#include <vector>

namespace opd {

using Vec = std::vector<Rat>;

// Dense rational matrix, row major.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static Mat identity(int n);

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vec row(int r) const;

  Mat operator*(const Mat& o) const;
  Mat transposed() const;
  Mat negated() const;
  bool operator==(const Mat& o) const = default;
};

// Apply matrix to a row vector: result = v * m.
Vec apply_row(const Vec& v, const Mat& m);

// Reduced row echelon form; row space is preserved.
std::pair<Mat, int> rref(Mat m);

int rank(const Mat& m);

// A linear subspace of Q^ambient_dim, canonically represented by the RREF
// basis of its row space (zero rows dropped).
struct Subspace {
  int ambient_dim = 0;
  Mat basis; // in RREF, rank() rows

  int rank() const { return basis.rows; }
};

Subspace span(const std::vector<Vec>& vectors, int ambient_dim);

// True iff the row spaces coincide. Throws on ambient mismatch.
bool subspace_equal(const Subspace& a, const Subspace& b);

bool subspace_contains(const Subspace& s, const Vec& v);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

// {v : <v,w> = 0 for all w in s} with <v,w> = sum_ij v_i pairing_ij w_j.
// The pairing must be square of the ambient size and nondegenerate.
Subspace annihilator(const Subspace& s, const Mat& pairing);

} // namespace opd

#endif
