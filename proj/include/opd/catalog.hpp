#ifndef OPD_CATALOG_HPP
#define OPD_CATALOG_HPP

#include "opd/quad.hpp"

#include <string>
#include <vector>

namespace opd {

struct CatalogEntry {
  std::string name;
  Presentation pres;
  std::string provenance;
};

// Directory holding the .opd data files; OPDCALC_DATA overrides the compiled
// default.
std::string catalog_dir();

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_get(const std::string& name);

// Evaluate an expression such as "dup(Comm)" or "dual(tri(Lie))" over catalog
// names; accepted operators: dup/duplicator, tri/triplicator, bsu/bisuccessor,
// tsu/trisuccessor, dual/koszul_dual.
Presentation eval_expr(const std::string& expr);

struct IdentityRow {
  enum Kind { equality, morphism } kind;
  std::string lhs;  // expression
  std::string rhs;  // expression (morphism target) or catalog name
  std::string map;  // generator map, rhs gens -> lhs gens for equality rows,
                    // lhs gens -> rhs gens for morphism rows
  std::string note;
};

const std::vector<IdentityRow>& identity_table();

struct RowResult {
  IdentityRow row;
  bool pass = false;
};

std::vector<RowResult> run_identity_table();

} // namespace opd

#endif
