#ifndef OPD_QUAD_HPP
#define OPD_QUAD_HPP

#include "opd/trees.hpp"

#include <array>
#include <string>
#include <vector>

namespace opd {

// A binary quadratic presentation: generators in arity two and the closure of
// the relation space inside the weight-three component of the free operad.
struct Presentation {
  GenSpace gens;
  Subspace relations; // S3-closed in symmetric mode, plain span otherwise
};

// --- weight-three coordinates -----------------------------------------------
//
// Symmetric mode: basis monomials (i, j, u) with u in {I, II, III} denoting
//   I:   (x i_inner... no) -- outer generator i, inner generator j,
//     I   = (x j y) i z
//     II  = (y j z) i x
//     III = (z j x) i y
// index = u*n*n + i*n + j, ambient dimension 3 n^2.
//
// Nonsymmetric mode: u in {left, right},
//     left  = (x j y) i z,   right = x i (y j z)
// index = u*n*n + i*n + j, ambient dimension 2 n^2.

int w3_dim(const GenSpace& g);
int w3_index(const GenSpace& g, int i, int j, int u);
std::string w3_monomial_str(const GenSpace& g, int idx);

// The representative tree of a basis monomial (leaves labelled 1..3).
TreePtr w3_tree(const GenSpace& g, int idx);

// Rewrite a decorated tree on leaves {1,2,3} (vertices carrying indices into
// g, no replica tags) into weight-three coordinates.
Vec normalize_weight3(const TreePtr& t, const GenSpace& g);
Vec normalize_weight3(const TreeSum& s, const GenSpace& g);

// --- S3 action (symmetric mode) ---------------------------------------------

using Perm3 = std::array<int, 3>; // leaf l -> p[l-1]

Vec s3_act(const Perm3& p, const Vec& v, const GenSpace& g);
Mat s3_matrix(const Perm3& p, const GenSpace& g);
Subspace s3_closure(const std::vector<Vec>& rows, const GenSpace& g);

// Closure used for relation spaces: S3 span in symmetric mode, plain span in
// nonsymmetric mode.
Subspace relation_closure(const std::vector<Vec>& rows, const GenSpace& g);

Presentation make_presentation(GenSpace gens, const std::vector<Vec>& relations);

// --- replicated generator spaces --------------------------------------------

enum class Replica { du, tri, bsu, tsu };

// Tag-major basis order: all generators with the first tag, then the second,
// ... Tags: du {dashv, vdash}; tri {dashv, vdash, perp}; bsu {prec, succ};
// tsu {prec, succ, dot}.
GenSpace make_replicated(const GenSpace& base, Replica kind);

Presentation duplicator(const Presentation& p);
Presentation triplicator(const Presentation& p);
Presentation bisuccessor(const Presentation& p);
Presentation trisuccessor(const Presentation& p); // requires nonzero relations

// Koszul dual (symmetric mode): generators renamed with suffix "_v", action
// -A^T, relations the annihilator of the closure. Throws if the annihilator
// fails to be S3-stable.
Presentation koszul_dual(const Presentation& p);

// --- maps between presentations ---------------------------------------------

// Linear map on generators; row i holds the image of source generator i in
// target generator coordinates.
struct GenMap {
  Mat m;
};

GenMap identity_genmap(int n);

// Parse "src = c1*(gen,tag) + c2*gen - ...; src2 = ...". An omitted generator
// is completed through equivariance when the source action permutes basis
// elements up to sign; "src = 0" names an explicit zero row.
GenMap parse_genmap(const std::string& text, const GenSpace& src, const GenSpace& tgt);

// Induced map on the weight-three component (same u block).
Mat induced_weight3(const GenMap& m, const GenSpace& src, const GenSpace& tgt);

// m an isomorphism of presentations: invertible, equivariant, and carrying
// the closure of a onto the closure of b.
bool equal_presentations(const Presentation& a, const Presentation& b, const GenMap& m);

// m a morphism: equivariant (not necessarily invertible) and carrying the
// closure of a into the closure of b.
bool verify_morphism(const Presentation& a, const Presentation& b, const GenMap& m);

// --- duality theorems --------------------------------------------------------

struct DualityReport {
  bool applicable = false; // false when the relation space is zero
  bool holds = false;
  int replicated_rank = 0; // rank of the successor relation span
  int ambient_dim = 0;     // ambient weight-three dimension on the dual side
};

// Du(P)^! = BSu(P^!) under the canonical identification of generators.
DualityReport duality_check(const Presentation& p);
// Tri(P)^! = TSu(P^!).
DualityReport tridality_check(const Presentation& p);

} // namespace opd

#endif
