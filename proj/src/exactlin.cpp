#include "opd/exactlin.hpp"

#include <sstream>
#include <stdexcept>

namespace opd {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(boost::multiprecision::cpp_int(s));
    }
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Mat::row(int r) const {
  return Vec(a.begin() + static_cast<size_t>(r) * cols,
             a.begin() + static_cast<size_t>(r + 1) * cols);
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch in product");
  Mat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::negated() const {
  Mat r = *this;
  for (auto& x : r.a) x = -x;
  return r;
}

Vec apply_row(const Vec& v, const Mat& m) {
  if (static_cast<int>(v.size()) != m.rows)
    throw std::invalid_argument("vector/matrix shape mismatch");
  Vec r(m.cols);
  for (int i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

std::pair<Mat, int> rref(Mat m) {
  int lead = 0;
  for (int r = 0; r < m.rows && lead < m.cols; ++r) {
    int pivot = -1;
    while (lead < m.cols) {
      for (int i = r; i < m.rows; ++i)
        if (m.at(i, lead) != 0) { pivot = i; break; }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) break;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, lead);
    for (int j = lead; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, lead) == 0) continue;
      Rat f = m.at(i, lead);
      for (int j = lead; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++lead;
  }
  int rk = 0;
  for (int i = 0; i < m.rows; ++i) {
    bool nonzero = false;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) { nonzero = true; break; }
    if (nonzero) ++rk;
  }
  Mat out(rk, m.cols);
  int o = 0;
  for (int i = 0; i < m.rows; ++i) {
    bool nonzero = false;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) { nonzero = true; break; }
    if (!nonzero) continue;
    for (int j = 0; j < m.cols; ++j) out.at(o, j) = m.at(i, j);
    ++o;
  }
  return {out, rk};
}

int rank(const Mat& m) { return rref(m).second; }

Subspace span(const std::vector<Vec>& vectors, int ambient_dim) {
  Mat m(static_cast<int>(vectors.size()), ambient_dim);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient_dim)
      throw std::invalid_argument("span: vector length does not match ambient dimension");
    for (int j = 0; j < ambient_dim; ++j) m.at(static_cast<int>(i), j) = vectors[i][j];
  }
  Subspace s;
  s.ambient_dim = ambient_dim;
  s.basis = rref(std::move(m)).first;
  return s;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("subspace_equal: ambient dimensions differ");
  return a.basis == b.basis;
}

bool subspace_contains(const Subspace& s, const Vec& v) {
  if (static_cast<int>(v.size()) != s.ambient_dim)
    throw std::invalid_argument("subspace_contains: ambient mismatch");
  // Reduce v against the RREF basis; membership iff the residual vanishes.
  Vec w = v;
  for (int r = 0; r < s.basis.rows; ++r) {
    int lead = -1;
    for (int j = 0; j < s.basis.cols; ++j)
      if (s.basis.at(r, j) != 0) { lead = j; break; }
    if (lead < 0 || w[lead] == 0) continue;
    Rat f = w[lead]; // pivot entry is 1
    for (int j = 0; j < s.basis.cols; ++j) w[j] -= f * s.basis.at(r, j);
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("subspace_sum: ambient dimensions differ");
  std::vector<Vec> rows;
  for (int i = 0; i < a.basis.rows; ++i) rows.push_back(a.basis.row(i));
  for (int i = 0; i < b.basis.rows; ++i) rows.push_back(b.basis.row(i));
  return span(rows, a.ambient_dim);
}

Subspace annihilator(const Subspace& s, const Mat& pairing) {
  const int d = s.ambient_dim;
  if (pairing.rows != d || pairing.cols != d)
    throw std::invalid_argument("annihilator: pairing shape mismatch");
  if (rank(pairing) != d)
    throw std::invalid_argument("annihilator: degenerate pairing");
  // Constraint rows: for each basis row w, v . (w P^T) = 0.
  Mat c = s.basis * pairing.transposed();
  auto [r, rk] = rref(std::move(c));
  // Kernel basis of the constraint matrix.
  std::vector<int> pivot_col(r.rows, -1);
  std::vector<bool> is_pivot(d, false);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < d; ++j)
      if (r.at(i, j) != 0) { pivot_col[i] = j; is_pivot[j] = true; break; }
  std::vector<Vec> kernel;
  for (int f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    Vec v(d);
    v[f] = 1;
    for (int i = 0; i < r.rows; ++i) v[pivot_col[i]] = -r.at(i, f);
    kernel.push_back(std::move(v));
  }
  return span(kernel, d);
}

} // namespace opd
