#include "opd/catalog.hpp"

#include "opd/dsl.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#ifndef OPD_DEFAULT_CATALOG_DIR
#define OPD_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace opd {

namespace {

struct EntrySpec {
  const char* name;
  const char* provenance;
};

// File name matches the entry name: <name>.opd in the catalog directory.
const EntrySpec kEntries[] = {
    {"Lie", "Jacobi identity for an antisymmetric bracket"},
    {"Comm", "commutative associative product"},
    {"Ass", "associative product, regular S2 representation"},
    {"Pois", "Poisson algebra: Lie bracket, commutative product, Leibniz rule"},
    {"PreLie", "left pre-Lie (left-symmetric) algebra"},
    {"Leib", "left Leibniz algebra (Loday)"},
    {"Perm", "left permutative algebra (Chapoton)"},
    {"DualPrePois", "dual pre-Poisson algebra (Aguiar)"},
    {"PreLieDi", "pre-Lie dialgebra (left-symmetric dialgebra, Felipe)"},
    {"ComTrias", "commutative trialgebra (Loday-Ronco)"},
    {"TriLeib", "triLeibniz algebra"},
    {"DualCTD", "dual commutative tridendriform algebra (Zinbiel-dual side); same axioms as TriLeib"},
    {"Dias", "diassociative algebra (Loday), symmetric presentation"},
    {"Trias", "triassociative algebra (Loday-Ronco), symmetric presentation"},
    {"Dend", "dendriform algebra (Loday), symmetric presentation"},
    {"Zinb", "Zinbiel algebra (dual Leibniz)"},
    {"TriDend", "tridendriform algebra (Loday-Ronco), symmetric presentation"},
    {"CTD", "commutative tridendriform algebra (Loday)"},
    {"AssNs", "associative product, nonsymmetric presentation"},
    {"DiasNs", "diassociative algebra, nonsymmetric presentation"},
    {"TriasNs", "triassociative algebra, nonsymmetric presentation"},
};

std::vector<CatalogEntry> load_entries() {
  std::vector<CatalogEntry> out;
  const std::string dir = catalog_dir();
  for (const auto& spec : kEntries) {
    const std::string path = dir + "/" + spec.name + ".opd";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("catalog file not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto parsed = parse_operads(buf.str());
    if (parsed.size() != 1 || parsed[0].name != spec.name)
      throw std::runtime_error("catalog file " + path + " must define exactly the operad '" +
                               spec.name + "'");
    out.push_back({spec.name, std::move(parsed[0].pres), spec.provenance});
  }
  return out;
}

} // namespace

std::string catalog_dir() {
  if (const char* env = std::getenv("OPDCALC_DATA")) return env;
  return OPD_DEFAULT_CATALOG_DIR;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = load_entries();
  return entries;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

namespace {

struct ExprParser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  Presentation parse() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    if (name.empty()) throw std::invalid_argument("expression: name expected in '" + s + "'");
    skip_ws();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      Presentation inner = parse();
      skip_ws();
      if (pos >= s.size() || s[pos] != ')')
        throw std::invalid_argument("expression: ')' expected in '" + s + "'");
      ++pos;
      if (name == "dup" || name == "duplicator") return duplicator(inner);
      if (name == "tri" || name == "triplicator") return triplicator(inner);
      if (name == "bsu" || name == "bisuccessor") return bisuccessor(inner);
      if (name == "tsu" || name == "trisuccessor") return trisuccessor(inner);
      if (name == "dual" || name == "koszul_dual") return koszul_dual(inner);
      throw std::invalid_argument("expression: unknown operator '" + name + "'");
    }
    return catalog_get(name).pres;
  }
};

} // namespace

Presentation eval_expr(const std::string& expr) {
  ExprParser p{expr};
  Presentation out = p.parse();
  p.skip_ws();
  if (p.pos != expr.size())
    throw std::invalid_argument("expression: trailing input in '" + expr + "'");
  return out;
}

const std::vector<IdentityRow>& identity_table() {
  static const std::vector<IdentityRow> rows = {
      // replicator identities
      {IdentityRow::equality, "dup(Lie)", "Leib", "b=(mu,vdash)", "Du(Lie) = Leib"},
      {IdentityRow::equality, "dup(Comm)", "Perm", "cdot=(omega,vdash)", "Du(Comm) = Perm"},
      {IdentityRow::equality, "dup(Pois)", "DualPrePois", "b=(h,vdash); p=(c,vdash)",
       "Du(Pois) = DualPrePois"},
      {IdentityRow::equality, "dup(PreLie)", "PreLieDi", "dl=(pl,dashv); dr=(pl,vdash)",
       "Du(PreLie) = pre-Lie dialgebra"},
      {IdentityRow::equality, "dup(Ass)", "Dias", "l=(m,dashv); r=(m,vdash)", "Du(Ass) = Dias"},
      {IdentityRow::equality, "tri(Comm)", "ComTrias", "st=(omega,dashv); bu=(omega,perp)",
       "Tri(Comm) = ComTrias"},
      {IdentityRow::equality, "tri(Lie)", "TriLeib", "dia=(mu,dashv); brk=(mu,perp)",
       "Tri(Lie) = TriLeib"},
      {IdentityRow::equality, "tri(Lie)", "DualCTD", "dia=(mu,dashv); brk=(mu,perp)",
       "DualCTD = TSu(Comm)! = Tri(Lie)"},
      {IdentityRow::equality, "tri(Ass)", "Trias", "tl=(m,dashv); tr=(m,vdash); tm=(m,perp)",
       "Tri(Ass) = Trias"},
      // successor identities
      {IdentityRow::equality, "bsu(Ass)", "Dend", "p=(m,prec); q=(m,succ)", "BSu(Ass) = Dend"},
      {IdentityRow::equality, "bsu(Comm)", "Zinb", "zi=(omega,prec)", "BSu(Comm) = Zinb"},
      {IdentityRow::equality, "tsu(Ass)", "TriDend", "tp=(m,prec); tq=(m,succ); tc=(m,dot)",
       "TSu(Ass) = TriDend"},
      {IdentityRow::equality, "tsu(Comm)", "CTD", "p=(omega,prec); m=(omega,dot)",
       "TSu(Comm) = CTD"},
      // Koszul duals
      {IdentityRow::equality, "dual(Lie)", "Comm", "omega=mu_v", "Lie! = Comm"},
      {IdentityRow::equality, "dual(Comm)", "Lie", "mu=omega_v", "Comm! = Lie"},
      {IdentityRow::equality, "dual(Ass)", "Ass", "m=m_v", "Ass! = Ass"},
      {IdentityRow::equality, "dual(CTD)", "TriLeib", "dia=p_v; brk=m_v", "CTD! = TriLeib"},
      // quotient and comparison morphisms
      {IdentityRow::morphism, "dup(Lie)", "Lie", "mu_dashv=mu", "eta: Du(Lie) -> Lie"},
      {IdentityRow::morphism, "dup(Comm)", "Comm", "omega_dashv=omega", "eta: Du(Comm) -> Comm"},
      {IdentityRow::morphism, "dup(Ass)", "Ass", "m_dashv=m; mp_dashv=mp",
       "eta: Du(Ass) -> Ass"},
      {IdentityRow::morphism, "tri(Lie)", "Lie", "mu_dashv=mu; mu_perp=mu",
       "zeta: Tri(Lie) -> Lie"},
      {IdentityRow::morphism, "tri(Comm)", "Comm", "omega_dashv=omega; omega_perp=omega",
       "zeta: Tri(Comm) -> Comm"},
      {IdentityRow::morphism, "tri(Ass)", "Ass", "m_dashv=m; mp_dashv=mp; m_perp=m; mp_perp=mp",
       "zeta: Tri(Ass) -> Ass"},
      {IdentityRow::morphism, "tri(Lie)", "Lie", "mu_perp=mu; mu_dashv=0",
       "rho: Tri(Lie) -> Lie"},
      {IdentityRow::morphism, "tri(Comm)", "Comm", "omega_perp=omega; omega_dashv=0",
       "rho: Tri(Comm) -> Comm"},
      {IdentityRow::morphism, "tri(Ass)", "Ass", "m_perp=m; mp_perp=mp; m_dashv=0; mp_dashv=0",
       "rho: Tri(Ass) -> Ass"},
      {IdentityRow::morphism, "dup(Lie)", "tri(Lie)", "mu_dashv=(mu,dashv)",
       "phi: Du(Lie) -> Tri(Lie)"},
      {IdentityRow::morphism, "dup(Comm)", "tri(Comm)", "omega_dashv=(omega,dashv)",
       "phi: Du(Comm) -> Tri(Comm)"},
      {IdentityRow::morphism, "dup(Ass)", "tri(Ass)",
       "m_dashv=(m,dashv); mp_dashv=(mp,dashv)",
       "phi: Du(Ass) -> Tri(Ass)"},
      {IdentityRow::morphism, "Dias", "Trias", "l=tl; r=tr",
       "phi specialized: Dias -> Trias"},
      {IdentityRow::morphism, "TriLeib", "Trias", "dia=tl-tlp; brk=tm-tmp",
       "derived operations on a triassociative algebra"},
      // intro diagram arrows
      {IdentityRow::morphism, "Lie", "Ass", "mu=m-mp", "commutator bracket"},
      {IdentityRow::morphism, "Ass", "Comm", "m=omega", "Ass -> Comm"},
      {IdentityRow::morphism, "Leib", "Lie", "b=mu", "Leib -> Lie"},
      {IdentityRow::morphism, "Leib", "Dias", "b=r-rp", "derived bracket on a dialgebra"},
      {IdentityRow::morphism, "Dias", "Ass", "l=m; r=m", "Dias -> Ass"},
      {IdentityRow::morphism, "Dias", "Perm", "l=cdot; r=cdot", "Dias -> Perm"},
  };
  return rows;
}

std::vector<RowResult> run_identity_table() {
  std::vector<RowResult> out;
  for (const auto& row : identity_table()) {
    Presentation lhs = eval_expr(row.lhs);
    Presentation rhs = eval_expr(row.rhs);
    bool pass;
    if (row.kind == IdentityRow::equality) {
      GenMap m = parse_genmap(row.map, rhs.gens, lhs.gens);
      pass = equal_presentations(rhs, lhs, m);
    } else {
      GenMap m = parse_genmap(row.map, lhs.gens, rhs.gens);
      pass = verify_morphism(lhs, rhs, m);
    }
    out.push_back({row, pass});
  }
  return out;
}

} // namespace opd
