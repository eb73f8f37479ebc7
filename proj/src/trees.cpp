#include "opd/trees.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace opd {

int GenSpace::index(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

void GenSpace::validate() const {
  if (names.empty()) throw std::invalid_argument("generator space must be nonempty");
  if (!tags.empty() && tags.size() != names.size())
    throw std::invalid_argument("generator tag list length mismatch");
  if (mode == Mode::nonsymmetric) {
    if (action) throw std::invalid_argument("nonsymmetric generator space carries no action");
    return;
  }
  if (!action) throw std::invalid_argument("symmetric generator space requires an action");
  const int n = size();
  if (action->rows != n || action->cols != n)
    throw std::invalid_argument("action matrix shape mismatch");
  if (*action * *action != Mat::identity(n))
    throw std::invalid_argument("action is not an involution");
}

GenSpace make_genspace(std::vector<std::string> names, Mode mode,
                       std::optional<Mat> action) {
  GenSpace g;
  g.names = std::move(names);
  g.tags.assign(g.names.size(), "");
  g.mode = mode;
  g.action = std::move(action);
  g.validate();
  return g;
}

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::none: return "";
    case Tag::dashv: return "dashv";
    case Tag::vdash: return "vdash";
    case Tag::perp: return "perp";
    case Tag::prec: return "prec";
    case Tag::succ: return "succ";
    case Tag::dot: return "dot";
  }
  return "";
}

TreePtr make_leaf(int label) {
  if (label <= 0) throw std::invalid_argument("leaf labels are positive integers");
  auto t = std::make_shared<Tree>();
  t->leaf = label;
  return t;
}

static void collect_leaves(const TreePtr& t, std::set<int>& out) {
  if (t->is_leaf()) {
    out.insert(t->leaf);
    return;
  }
  collect_leaves(t->left, out);
  collect_leaves(t->right, out);
}

std::set<int> leaf_labels(const TreePtr& t) {
  std::set<int> out;
  collect_leaves(t, out);
  return out;
}

int count_vertices(const TreePtr& t) {
  if (t->is_leaf()) return 0;
  return 1 + count_vertices(t->left) + count_vertices(t->right);
}

TreePtr graft(const TreePtr& l, int gen, const TreePtr& r, Tag tag) {
  auto ll = leaf_labels(l);
  auto rl = leaf_labels(r);
  for (int x : rl)
    if (ll.count(x))
      throw std::invalid_argument("graft: leaf label " + std::to_string(x) +
                                  " appears in both subtrees");
  auto t = std::make_shared<Tree>();
  t->gen = gen;
  t->tag = tag;
  t->left = l;
  t->right = r;
  return t;
}

int tree_cmp(const TreePtr& a, const TreePtr& b) {
  if (a->is_leaf() != b->is_leaf()) return a->is_leaf() ? -1 : 1;
  if (a->is_leaf()) return a->leaf < b->leaf ? -1 : (a->leaf > b->leaf ? 1 : 0);
  if (a->gen != b->gen) return a->gen < b->gen ? -1 : 1;
  if (a->tag != b->tag) return a->tag < b->tag ? -1 : 1;
  if (int c = tree_cmp(a->left, b->left)) return c;
  return tree_cmp(a->right, b->right);
}

void tree_sum_add(TreeSum& s, const TreePtr& t, const Rat& c) {
  if (c == 0) return;
  auto it = s.find(t);
  if (it == s.end()) {
    s.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

std::string tree_str(const TreePtr& t, const GenSpace& gens) {
  if (t->is_leaf()) {
    static const char* xyz[] = {"x", "y", "z"};
    if (t->leaf >= 1 && t->leaf <= 3) return xyz[t->leaf - 1];
    return std::to_string(t->leaf);
  }
  std::string name = t->gen >= 0 && t->gen < gens.size() ? gens.names[t->gen] : "?";
  if (t->tag != Tag::none) name = "(" + name + "," + tag_name(t->tag) + ")";
  return name + "(" + tree_str(t->left, gens) + "," + tree_str(t->right, gens) + ")";
}

// All taggings of every vertex by the given alphabet, root tag varying slowest.
static std::vector<TreePtr> expand_all(const TreePtr& t, const std::vector<Tag>& alphabet) {
  if (t->is_leaf()) return {t};
  auto ls = expand_all(t->left, alphabet);
  auto rs = expand_all(t->right, alphabet);
  std::vector<TreePtr> out;
  for (Tag tag : alphabet)
    for (const auto& l : ls)
      for (const auto& r : rs) out.push_back(graft(l, t->gen, r, tag));
  return out;
}

static std::vector<TreePtr> combine(const std::vector<TreePtr>& ls, int gen, Tag tag,
                                    const std::vector<TreePtr>& rs) {
  std::vector<TreePtr> out;
  for (const auto& l : ls)
    for (const auto& r : rs) out.push_back(graft(l, gen, r, tag));
  return out;
}

static void require_untagged(const TreePtr& t) {
  if (t->is_leaf()) return;
  if (t->tag != Tag::none)
    throw std::invalid_argument("input tree already carries replica tags");
  require_untagged(t->left);
  require_untagged(t->right);
}

std::vector<TreePtr> du_leaf(const TreePtr& t, int x) {
  require_untagged(t);
  if (!leaf_labels(t).count(x))
    throw std::invalid_argument("du_leaf: " + std::to_string(x) + " is not a leaf of the tree");
  static const std::vector<Tag> both = {Tag::dashv, Tag::vdash};
  if (t->is_leaf()) return {t};
  if (leaf_labels(t->left).count(x))
    return combine(du_leaf(t->left, x), t->gen, Tag::dashv, expand_all(t->right, both));
  return combine(expand_all(t->left, both), t->gen, Tag::vdash, du_leaf(t->right, x));
}

std::vector<TreePtr> tri_subset(const TreePtr& t, const std::set<int>& J) {
  require_untagged(t);
  auto labels = leaf_labels(t);
  for (int x : J)
    if (!labels.count(x))
      throw std::invalid_argument("tri_subset: " + std::to_string(x) + " is not a leaf of the tree");
  static const std::vector<Tag> three = {Tag::dashv, Tag::vdash, Tag::perp};
  if (t->is_leaf()) return {t};
  if (J.empty()) return expand_all(t, three);
  auto left_labels = leaf_labels(t->left);
  std::set<int> jl, jr;
  for (int x : J) (left_labels.count(x) ? jl : jr).insert(x);
  if (jr.empty())
    return combine(tri_subset(t->left, jl), t->gen, Tag::dashv, expand_all(t->right, three));
  if (jl.empty())
    return combine(expand_all(t->left, three), t->gen, Tag::vdash, tri_subset(t->right, jr));
  return combine(tri_subset(t->left, jl), t->gen, Tag::perp, tri_subset(t->right, jr));
}

static TreeSum sum_product(const TreeSum& ls, int gen, Tag tag, const TreeSum& rs) {
  TreeSum out;
  for (const auto& [l, cl] : ls)
    for (const auto& [r, cr] : rs) tree_sum_add(out, graft(l, gen, r, tag), cl * cr);
  return out;
}

static TreeSum bsu_all(const TreePtr& t) {
  if (t->is_leaf()) return {{t, Rat(1)}};
  TreeSum ls = bsu_all(t->left);
  TreeSum rs = bsu_all(t->right);
  TreeSum out;
  for (Tag tag : {Tag::prec, Tag::succ})
    for (const auto& [tr, c] : sum_product(ls, t->gen, tag, rs)) tree_sum_add(out, tr, c);
  return out;
}

TreeSum bsu_leaf(const TreePtr& t, int x) {
  require_untagged(t);
  if (!leaf_labels(t).count(x))
    throw std::invalid_argument("bsu_leaf: " + std::to_string(x) + " is not a leaf of the tree");
  if (t->is_leaf()) return {{t, Rat(1)}};
  if (leaf_labels(t->left).count(x))
    return sum_product(bsu_leaf(t->left, x), t->gen, Tag::prec, bsu_all(t->right));
  return sum_product(bsu_all(t->left), t->gen, Tag::succ, bsu_leaf(t->right, x));
}

static std::set<int> homogeneous_labels(const TreeSum& r) {
  if (r.empty()) throw std::invalid_argument("empty relation sum");
  auto labels = leaf_labels(r.begin()->first);
  for (const auto& [t, c] : r)
    if (leaf_labels(t) != labels)
      throw std::invalid_argument("relation sum is not homogeneous");
  return labels;
}

// Cartesian product over the per-term choice sets (Eq. semantics: one output
// sum per independent selection, last term varying fastest).
static std::vector<TreeSum> choice_product(const std::vector<std::pair<Rat, std::vector<TreePtr>>>& choices) {
  std::vector<TreeSum> out = {TreeSum{}};
  for (const auto& [coeff, opts] : choices) {
    std::vector<TreeSum> next;
    for (const auto& base : out)
      for (const auto& t : opts) {
        TreeSum s = base;
        tree_sum_add(s, t, coeff);
        next.push_back(std::move(s));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<TreeSum> du_relation(const TreeSum& r, int x) {
  auto labels = homogeneous_labels(r);
  if (!labels.count(x)) throw std::invalid_argument("du_relation: leaf not present");
  std::vector<std::pair<Rat, std::vector<TreePtr>>> choices;
  for (const auto& [t, c] : r) choices.emplace_back(c, du_leaf(t, x));
  return choice_product(choices);
}

std::vector<TreeSum> tri_relation(const TreeSum& r, const std::set<int>& J) {
  auto labels = homogeneous_labels(r);
  for (int x : J)
    if (!labels.count(x)) throw std::invalid_argument("tri_relation: leaf not present");
  std::vector<std::pair<Rat, std::vector<TreePtr>>> choices;
  for (const auto& [t, c] : r) choices.emplace_back(c, tri_subset(t, J));
  return choice_product(choices);
}

TreeSum bsu_relation(const TreeSum& r, int x) {
  auto labels = homogeneous_labels(r);
  if (!labels.count(x)) throw std::invalid_argument("bsu_relation: leaf not present");
  TreeSum out;
  for (const auto& [t, c] : r)
    for (const auto& [w, cw] : bsu_leaf(t, x)) tree_sum_add(out, w, c * cw);
  return out;
}

} // namespace opd
