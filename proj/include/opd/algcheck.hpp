#ifndef OPD_ALGCHECK_HPP
#define OPD_ALGCHECK_HPP

#include "opd/quad.hpp"

#include <map>
#include <string>
#include <vector>

namespace opd {

// A finite-dimensional algebra over Q given by structure constants:
// e_i op e_j = sum_k c[i][j][k] e_k.
struct FinAlgebra {
  int dim = 0;
  std::map<std::string, std::vector<Rat>> ops; // name -> d^3 tensor

  const Rat& c(const std::string& op, int i, int j, int k) const;
  void add_op(const std::string& name, std::vector<Rat> tensor);
  // e_i op e_j as a coordinate vector.
  Vec product(const std::string& op, const Vec& x, const Vec& y) const;
};

// Column convention: (P v)_i = sum_j P_ij v_j.
Vec apply_op(const Mat& p, const Vec& v);

// True iff every relation of the presentation evaluates to zero on all d^3
// basis triples. The binding sends presentation generators to algebra ops;
// generators omitted from the binding are completed through the involution
// (a paired generator evaluates as its partner with swapped arguments).
// Returns false when the bound ops fail the involution consistency itself
// (e.g. a non-commutative op bound to a symmetric generator).
bool check_algebra(const FinAlgebra& a, const Presentation& p,
                   const std::map<std::string, std::string>& binding);

// P(x . P(y)) = P(x) . P(y) = P(P(x) . y) on all basis pairs.
bool is_di_average(const FinAlgebra& a, const std::string& op, const Mat& p);

// The di-average identities together with P(x) . P(y) = lambda P(x . y).
bool is_tri_average(const FinAlgebra& a, const std::string& op, const Mat& p,
                    const Rat& lambda);

// Each op splits into op_dashv (x . P(y)) and op_vdash (P(x) . y). Requires
// is_di_average for every op.
FinAlgebra replicate_di(const FinAlgebra& a, const Mat& p);

// Adds op_perp (x . y) to the di splitting. Requires is_tri_average with
// weight one for every op.
FinAlgebra replicate_tri(const FinAlgebra& a, const Mat& p);

// One summand of a derived operation: coeff * op(x, y), arguments swapped
// when flip is set.
struct DerivedTerm {
  Rat coeff;
  std::string op;
  bool flip = false;
};

FinAlgebra derived_ops(const FinAlgebra& a,
                       const std::map<std::string, std::vector<DerivedTerm>>& defs);

} // namespace opd

#endif
