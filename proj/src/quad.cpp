#include "opd/quad.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace opd {

int w3_dim(const GenSpace& g) {
  const int n = g.size();
  return (g.mode == Mode::symmetric ? 3 : 2) * n * n;
}

int w3_index(const GenSpace& g, int i, int j, int u) {
  const int n = g.size();
  const int blocks = g.mode == Mode::symmetric ? 3 : 2;
  if (i < 0 || i >= n || j < 0 || j >= n || u < 0 || u >= blocks)
    throw std::out_of_range("weight-three index out of range");
  return u * n * n + i * n + j;
}

std::string w3_monomial_str(const GenSpace& g, int idx) {
  const int n = g.size();
  const int u = idx / (n * n);
  const int i = idx % (n * n) / n;
  const int j = idx % n;
  const std::string& oi = g.names[i];
  const std::string& oj = g.names[j];
  if (g.mode == Mode::nonsymmetric)
    return u == 0 ? "(x " + oj + " y) " + oi + " z" : "x " + oi + " (y " + oj + " z)";
  switch (u) {
    case 0: return "(x " + oj + " y) " + oi + " z";
    case 1: return "(y " + oj + " z) " + oi + " x";
    default: return "(z " + oj + " x) " + oi + " y";
  }
}

TreePtr w3_tree(const GenSpace& g, int idx) {
  const int n = g.size();
  const int blocks = g.mode == Mode::symmetric ? 3 : 2;
  if (idx < 0 || idx >= blocks * n * n) throw std::out_of_range("weight-three index out of range");
  const int u = idx / (n * n);
  const int i = idx % (n * n) / n;
  const int j = idx % n;
  if (g.mode == Mode::nonsymmetric) {
    if (u == 0) return graft(graft(make_leaf(1), j, make_leaf(2)), i, make_leaf(3));
    return graft(make_leaf(1), i, graft(make_leaf(2), j, make_leaf(3)));
  }
  static const int arr[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  return graft(graft(make_leaf(arr[u][0]), j, make_leaf(arr[u][1])), i, make_leaf(arr[u][2]));
}

namespace {

void add_scaled(Vec& acc, const Vec& v, const Rat& c) {
  for (size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

// Left comb ((a j b) i c) in weight-three coordinates.
Vec normalize_leftcomb(int a, int b, int c, int i, int j, const Rat& coeff, const GenSpace& g) {
  const int n = g.size();
  Vec out(static_cast<size_t>(w3_dim(g)), Rat(0));
  if (g.mode == Mode::nonsymmetric) {
    if (a == 1 && b == 2 && c == 3) {
      out[w3_index(g, i, j, 0)] += coeff;
      return out;
    }
    throw std::invalid_argument("non-planar tree in nonsymmetric mode");
  }
  int u = -1;
  bool twist = false;
  if (a == 1 && b == 2 && c == 3) u = 0;
  else if (a == 2 && b == 3 && c == 1) u = 1;
  else if (a == 3 && b == 1 && c == 2) u = 2;
  else if (a == 2 && b == 1 && c == 3) { u = 0; twist = true; }
  else if (a == 3 && b == 2 && c == 1) { u = 1; twist = true; }
  else if (a == 1 && b == 3 && c == 2) { u = 2; twist = true; }
  else throw std::logic_error("unreachable leaf arrangement");
  if (!twist) {
    out[w3_index(g, i, j, u)] += coeff;
  } else {
    const Mat& A = *g.action;
    for (int k = 0; k < n; ++k)
      if (A.at(j, k) != 0) out[w3_index(g, i, k, u)] += coeff * A.at(j, k);
  }
  return out;
}

Vec normalize_tree(const TreePtr& t, const Rat& coeff, const GenSpace& g) {
  if (t->is_leaf() || count_vertices(t) != 2)
    throw std::invalid_argument("normalize_weight3 expects trees with exactly two vertices");
  if (t->tag != Tag::none) throw std::invalid_argument("normalize_weight3: unresolved replica tag");
  const int n = g.size();
  if (!t->left->is_leaf()) {
    // left comb ((a j b) i c)
    const TreePtr& inner = t->left;
    if (inner->tag != Tag::none)
      throw std::invalid_argument("normalize_weight3: unresolved replica tag");
    return normalize_leftcomb(inner->left->leaf, inner->right->leaf, t->right->leaf, t->gen,
                              inner->gen, coeff, g);
  }
  // right comb a i (b j c)
  const TreePtr& inner = t->right;
  if (inner->tag != Tag::none)
    throw std::invalid_argument("normalize_weight3: unresolved replica tag");
  const int a = t->left->leaf, b = inner->left->leaf, c = inner->right->leaf;
  if (g.mode == Mode::nonsymmetric) {
    if (a == 1 && b == 2 && c == 3) {
      Vec out(static_cast<size_t>(w3_dim(g)), Rat(0));
      out[w3_index(g, t->gen, inner->gen, 1)] += coeff;
      return out;
    }
    throw std::invalid_argument("non-planar tree in nonsymmetric mode");
  }
  // a i (b j c) = (b j c) i^(12) a
  const Mat& A = *g.action;
  Vec out(static_cast<size_t>(w3_dim(g)), Rat(0));
  for (int k = 0; k < n; ++k)
    if (A.at(t->gen, k) != 0)
      add_scaled(out, normalize_leftcomb(b, c, a, k, inner->gen, coeff * A.at(t->gen, k), g),
                 Rat(1));
  return out;
}

} // namespace

Vec normalize_weight3(const TreePtr& t, const GenSpace& g) {
  return normalize_tree(t, Rat(1), g);
}

Vec normalize_weight3(const TreeSum& s, const GenSpace& g) {
  Vec out(static_cast<size_t>(w3_dim(g)), Rat(0));
  for (const auto& [t, c] : s) add_scaled(out, normalize_tree(t, Rat(1), g), c);
  return out;
}

Vec s3_act(const Perm3& p, const Vec& v, const GenSpace& g) {
  if (g.mode != Mode::symmetric)
    throw std::invalid_argument("S3 action requires symmetric mode");
  if (static_cast<int>(v.size()) != w3_dim(g))
    throw std::invalid_argument("s3_act: vector length mismatch");
  Vec out(v.size(), Rat(0));
  for (int idx = 0; idx < static_cast<int>(v.size()); ++idx) {
    if (v[idx] == 0) continue;
    TreePtr t = w3_tree(g, idx);
    // relabel leaves l -> p[l-1]
    auto inner = t->left;
    TreePtr rl = graft(make_leaf(p[inner->left->leaf - 1]), inner->gen,
                       make_leaf(p[inner->right->leaf - 1]));
    TreePtr rt = graft(rl, t->gen, make_leaf(p[t->right->leaf - 1]));
    Vec img = normalize_weight3(rt, g);
    for (size_t k = 0; k < out.size(); ++k) out[k] += v[idx] * img[k];
  }
  return out;
}

Mat s3_matrix(const Perm3& p, const GenSpace& g) {
  const int d = w3_dim(g);
  Mat m(d, d);
  for (int idx = 0; idx < d; ++idx) {
    Vec e(static_cast<size_t>(d), Rat(0));
    e[idx] = 1;
    Vec img = s3_act(p, e, g);
    for (int k = 0; k < d; ++k) m.at(idx, k) = img[k];
  }
  return m;
}

static const std::array<Perm3, 6> kS3 = {{{1, 2, 3},
                                          {2, 1, 3},
                                          {1, 3, 2},
                                          {3, 2, 1},
                                          {2, 3, 1},
                                          {3, 1, 2}}};

Subspace s3_closure(const std::vector<Vec>& rows, const GenSpace& g) {
  std::vector<Vec> all;
  for (const auto& r : rows)
    for (const auto& p : kS3) all.push_back(s3_act(p, r, g));
  return span(all, w3_dim(g));
}

Subspace relation_closure(const std::vector<Vec>& rows, const GenSpace& g) {
  if (g.mode == Mode::symmetric) return s3_closure(rows, g);
  return span(rows, w3_dim(g));
}

Presentation make_presentation(GenSpace gens, const std::vector<Vec>& relations) {
  gens.validate();
  const int d = w3_dim(gens);
  for (const auto& r : relations)
    if (static_cast<int>(r.size()) != d)
      throw std::invalid_argument("relation vector length mismatch");
  Presentation p;
  p.relations = relation_closure(relations, gens);
  p.gens = std::move(gens);
  return p;
}

GenSpace make_replicated(const GenSpace& base, Replica kind) {
  std::vector<Tag> tags;
  switch (kind) {
    case Replica::du: tags = {Tag::dashv, Tag::vdash}; break;
    case Replica::tri: tags = {Tag::dashv, Tag::vdash, Tag::perp}; break;
    case Replica::bsu: tags = {Tag::prec, Tag::succ}; break;
    case Replica::tsu: tags = {Tag::prec, Tag::succ, Tag::dot}; break;
  }
  const int n = base.size();
  const int m = static_cast<int>(tags.size());
  GenSpace out;
  out.mode = base.mode;
  for (Tag t : tags)
    for (int i = 0; i < n; ++i) {
      out.names.push_back(base.names[i] + "_" + tag_name(t));
      out.tags.push_back(tag_name(t));
    }
  if (base.mode == Mode::symmetric) {
    // (w, dashv)^(12) = (w^(12), vdash) and symmetrically; perp is fixed.
    const Mat& A = *base.action;
    Mat B(m * n, m * n);
    auto block = [&](int br, int bc) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B.at(br * n + i, bc * n + j) = A.at(i, j);
    };
    block(0, 1);
    block(1, 0);
    if (m == 3) block(2, 2);
    out.action = std::move(B);
  }
  out.validate();
  return out;
}

namespace {

int tag_slot(Replica kind, Tag t) {
  switch (kind) {
    case Replica::du:
      if (t == Tag::dashv) return 0;
      if (t == Tag::vdash) return 1;
      break;
    case Replica::tri:
      if (t == Tag::dashv) return 0;
      if (t == Tag::vdash) return 1;
      if (t == Tag::perp) return 2;
      break;
    case Replica::bsu:
      if (t == Tag::prec) return 0;
      if (t == Tag::succ) return 1;
      break;
    case Replica::tsu:
      if (t == Tag::prec) return 0;
      if (t == Tag::succ) return 1;
      if (t == Tag::dot) return 2;
      break;
  }
  throw std::logic_error("unexpected replica tag");
}

// Reinterpret a tagged tree over the base generators as an untagged tree over
// the replicated generator space.
TreePtr retag(const TreePtr& t, int base_n, Replica kind) {
  if (t->is_leaf()) return t;
  auto tree = std::make_shared<Tree>();
  tree->gen = tag_slot(kind, t->tag) * base_n + t->gen;
  tree->tag = Tag::none;
  tree->left = retag(t->left, base_n, kind);
  tree->right = retag(t->right, base_n, kind);
  return tree;
}

TreeSum retag_sum(const TreeSum& s, int base_n, Replica kind) {
  TreeSum out;
  for (const auto& [t, c] : s) tree_sum_add(out, retag(t, base_n, kind), c);
  return out;
}

// The relation rows of a presentation as formal sums of representative trees.
std::vector<TreeSum> relation_trees(const Presentation& p) {
  std::vector<TreeSum> out;
  for (int r = 0; r < p.relations.rank(); ++r) {
    TreeSum s;
    for (int idx = 0; idx < w3_dim(p.gens); ++idx) {
      const Rat& c = p.relations.basis.at(r, idx);
      if (c != 0) tree_sum_add(s, w3_tree(p.gens, idx), c);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Presentation replicate(const Presentation& p, Replica kind) {
  if (kind == Replica::bsu && p.gens.mode != Mode::symmetric)
    throw std::invalid_argument("bisuccessor requires a symmetric presentation");
  const int n = p.gens.size();
  GenSpace rg = make_replicated(p.gens, kind);
  std::vector<Vec> rows;
  for (const auto& r : relation_trees(p)) {
    if (kind == Replica::du) {
      for (int x = 1; x <= 3; ++x)
        for (const auto& s : du_relation(r, x))
          rows.push_back(normalize_weight3(retag_sum(s, n, kind), rg));
    } else if (kind == Replica::tri) {
      for (int mask = 1; mask < 8; ++mask) {
        std::set<int> J;
        for (int x = 1; x <= 3; ++x)
          if (mask & (1 << (x - 1))) J.insert(x);
        for (const auto& s : tri_relation(r, J))
          rows.push_back(normalize_weight3(retag_sum(s, n, kind), rg));
      }
    } else if (kind == Replica::bsu) {
      for (int x = 1; x <= 3; ++x)
        rows.push_back(normalize_weight3(retag_sum(bsu_relation(r, x), n, kind), rg));
    } else {
      throw std::logic_error("trisuccessor is not computed by direct replication");
    }
  }
  Presentation out;
  out.relations = relation_closure(rows, rg);
  out.gens = std::move(rg);
  return out;
}

} // namespace

Presentation duplicator(const Presentation& p) { return replicate(p, Replica::du); }
Presentation triplicator(const Presentation& p) { return replicate(p, Replica::tri); }
Presentation bisuccessor(const Presentation& p) { return replicate(p, Replica::bsu); }

Presentation koszul_dual(const Presentation& p) {
  if (p.gens.mode != Mode::symmetric)
    throw std::invalid_argument("koszul dual requires a symmetric presentation");
  GenSpace dg;
  dg.mode = p.gens.mode;
  for (const auto& name : p.gens.names) dg.names.push_back(name + "_v");
  dg.tags = p.gens.tags;
  if (p.gens.mode == Mode::symmetric) dg.action = p.gens.action->transposed().negated();
  dg.validate();
  const int d = w3_dim(p.gens);
  Subspace ann = annihilator(p.relations, Mat::identity(d));
  if (p.gens.mode == Mode::symmetric) {
    std::vector<Vec> rows;
    for (int r = 0; r < ann.rank(); ++r) rows.push_back(ann.basis.row(r));
    Subspace closed = s3_closure(rows, dg);
    if (!subspace_equal(closed, ann))
      throw std::runtime_error("koszul dual: annihilator is not S3-stable");
  }
  Presentation out;
  out.gens = std::move(dg);
  out.relations = std::move(ann);
  return out;
}

Presentation trisuccessor(const Presentation& p) {
  if (p.relations.rank() == 0)
    throw std::invalid_argument(
        "trisuccessor requires a nonzero relation space: the successor/replicator "
        "duality holds only if the relations are nontrivial");
  Presentation d = koszul_dual(triplicator(koszul_dual(p)));
  // Canonical identification (e, dashv)^v <-> (e^v, prec), (e, vdash)^v <->
  // (e^v, succ), (e, perp)^v <-> (e^v, dot); tag-major order makes it the
  // identity on coordinates.
  GenSpace tg = make_replicated(p.gens, Replica::tsu);
  if (tg.mode == Mode::symmetric && *tg.action != *d.gens.action)
    throw std::logic_error("trisuccessor: canonical identification failed");
  Presentation out;
  out.gens = std::move(tg);
  out.relations = std::move(d.relations);
  return out;
}

GenMap identity_genmap(int n) { return GenMap{Mat::identity(n)}; }

namespace {

struct MapParser {
  const std::string& s;
  size_t pos = 0;

  explicit MapParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) throw std::invalid_argument("generator map: identifier expected at '" +
                                                  s.substr(pos, 10) + "'");
    return s.substr(start, pos - start);
  }

  // name or (name, tag); the latter is shorthand for name_tag.
  std::string genref() {
    skip_ws();
    if (eat('(')) {
      std::string base = ident();
      if (!eat(',')) throw std::invalid_argument("generator map: ',' expected in (gen,tag)");
      std::string tag = ident();
      if (!eat(')')) throw std::invalid_argument("generator map: ')' expected");
      return base + "_" + tag;
    }
    return ident();
  }

  Rat number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    return rat_parse(s.substr(start, pos - start));
  }
};

} // namespace

GenMap parse_genmap(const std::string& text, const GenSpace& src, const GenSpace& tgt) {
  const int ns = src.size(), nt = tgt.size();
  Mat m(ns, nt);
  std::vector<bool> specified(static_cast<size_t>(ns), false);
  MapParser p(text);
  for (;;) {
    p.skip_ws();
    if (p.pos >= p.s.size()) break;
    std::string lhs = p.genref();
    int i = src.index(lhs);
    if (i < 0) throw std::invalid_argument("generator map: unknown source generator '" + lhs + "'");
    if (specified[static_cast<size_t>(i)])
      throw std::invalid_argument("generator map: '" + lhs + "' assigned twice");
    if (!p.eat('=')) throw std::invalid_argument("generator map: '=' expected after '" + lhs + "'");
    specified[static_cast<size_t>(i)] = true;
    // right-hand side: signed terms c*gen | gen | 0
    bool first = true;
    for (;;) {
      p.skip_ws();
      Rat sign(1);
      if (p.eat('-')) sign = -1;
      else if (!p.eat('+') && !first) break;
      first = false;
      p.skip_ws();
      if (p.pos < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.pos]))) {
        Rat c = p.number();
        if (c == 0 && !p.eat('*')) break; // explicit zero row
        if (c != 0 && !p.eat('*'))
          throw std::invalid_argument("generator map: '*' expected after coefficient");
        std::string g = p.genref();
        int k = tgt.index(g);
        if (k < 0) throw std::invalid_argument("generator map: unknown target generator '" + g + "'");
        m.at(i, k) += sign * c;
      } else {
        std::string g = p.genref();
        int k = tgt.index(g);
        if (k < 0) throw std::invalid_argument("generator map: unknown target generator '" + g + "'");
        m.at(i, k) += sign;
      }
      p.skip_ws();
      if (p.pos >= p.s.size() || p.s[p.pos] == ';' || p.s[p.pos] == '\n') break;
    }
    while (p.eat(';') || p.eat('\n')) {}
  }
  // Complete the unspecified rows through equivariance: when the source action
  // sends a specified generator to +-(an unspecified one), the image of the
  // latter is forced.
  if (src.mode == Mode::symmetric) {
    const Mat& As = *src.action;
    const Mat& At = *tgt.action;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int j = 0; j < ns; ++j) {
        if (!specified[static_cast<size_t>(j)]) continue;
        // g_j^(12) = s * g_i for a single i?
        int i = -1;
        Rat s;
        bool simple = true;
        for (int k = 0; k < ns; ++k) {
          if (As.at(j, k) == 0) continue;
          if (i >= 0) { simple = false; break; }
          i = k;
          s = As.at(j, k);
        }
        if (!simple || i < 0 || (s != 1 && s != -1)) continue;
        if (specified[static_cast<size_t>(i)]) continue;
        // f(g_i) = s * f(g_j)^(12)
        Vec img = apply_row(m.row(j), At);
        for (int k = 0; k < nt; ++k) m.at(i, k) = s * img[k];
        specified[static_cast<size_t>(i)] = true;
        progress = true;
      }
    }
  }
  for (int i = 0; i < ns; ++i)
    if (!specified[static_cast<size_t>(i)])
      throw std::invalid_argument("generator map: no image given for '" + src.names[i] +
                                  "' and none is forced by equivariance");
  return GenMap{std::move(m)};
}

Mat induced_weight3(const GenMap& m, const GenSpace& src, const GenSpace& tgt) {
  if (src.mode != tgt.mode) throw std::invalid_argument("mode mismatch in generator map");
  const int ns = src.size(), nt = tgt.size();
  if (m.m.rows != ns || m.m.cols != nt)
    throw std::invalid_argument("generator map shape mismatch");
  const int blocks = src.mode == Mode::symmetric ? 3 : 2;
  Mat w(w3_dim(src), w3_dim(tgt));
  for (int u = 0; u < blocks; ++u)
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j)
        for (int k = 0; k < nt; ++k) {
          if (m.m.at(i, k) == 0) continue;
          for (int l = 0; l < nt; ++l) {
            if (m.m.at(j, l) == 0) continue;
            w.at(w3_index(src, i, j, u), w3_index(tgt, k, l, u)) += m.m.at(i, k) * m.m.at(j, l);
          }
        }
  return w;
}

static bool equivariant(const GenMap& m, const GenSpace& src, const GenSpace& tgt) {
  if (src.mode != tgt.mode) return false;
  if (src.mode == Mode::nonsymmetric) return true;
  return *src.action * m.m == m.m * *tgt.action;
}

bool equal_presentations(const Presentation& a, const Presentation& b, const GenMap& m) {
  if (m.m.rows != a.gens.size() || m.m.cols != b.gens.size()) return false;
  if (a.gens.size() != b.gens.size()) return false;
  if (rank(m.m) != a.gens.size()) return false;
  if (!equivariant(m, a.gens, b.gens)) return false;
  Mat w = induced_weight3(m, a.gens, b.gens);
  std::vector<Vec> rows;
  for (int r = 0; r < a.relations.rank(); ++r)
    rows.push_back(apply_row(a.relations.basis.row(r), w));
  return subspace_equal(span(rows, w3_dim(b.gens)), b.relations);
}

bool verify_morphism(const Presentation& a, const Presentation& b, const GenMap& m) {
  if (m.m.rows != a.gens.size() || m.m.cols != b.gens.size()) return false;
  if (!equivariant(m, a.gens, b.gens)) return false;
  Mat w = induced_weight3(m, a.gens, b.gens);
  for (int r = 0; r < a.relations.rank(); ++r)
    if (!subspace_contains(b.relations, apply_row(a.relations.basis.row(r), w))) return false;
  return true;
}

static DualityReport duality_impl(const Presentation& p, bool tri) {
  if (p.gens.mode != Mode::symmetric)
    throw std::invalid_argument("duality checks require a symmetric presentation");
  DualityReport rep;
  const int n = p.gens.size();
  if (p.relations.rank() == 0) {
    rep.applicable = false;
    rep.holds = false;
    if (!tri) {
      // The identity fails for a free operad: the bisuccessor side spans at
      // most 9 n^2 relations while the dual of the duplicator is the full
      // 12 n^2 ambient space.
      Presentation rhs = bisuccessor(koszul_dual(p));
      rep.replicated_rank = rhs.relations.rank();
      rep.ambient_dim = w3_dim(rhs.gens);
    } else {
      rep.replicated_rank = 0;
      rep.ambient_dim = 27 * n * n;
    }
    return rep;
  }
  Presentation lhs = koszul_dual(tri ? triplicator(p) : duplicator(p));
  Presentation rhs = tri ? trisuccessor(koszul_dual(p)) : bisuccessor(koszul_dual(p));
  rep.applicable = true;
  rep.holds = equal_presentations(lhs, rhs, identity_genmap(lhs.gens.size()));
  if (tri) {
    // Double-dual involutivity of the triplicator closure.
    Presentation t = triplicator(p);
    rep.holds = rep.holds && subspace_equal(koszul_dual(koszul_dual(t)).relations, t.relations) &&
                *koszul_dual(koszul_dual(t)).gens.action == *t.gens.action;
  }
  rep.replicated_rank = rhs.relations.rank();
  rep.ambient_dim = w3_dim(lhs.gens);
  return rep;
}

DualityReport duality_check(const Presentation& p) { return duality_impl(p, false); }
DualityReport tridality_check(const Presentation& p) { return duality_impl(p, true); }

} // namespace opd
