#ifndef OPD_TREES_HPP
#define OPD_TREES_HPP

#include "opd/exactlin.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace opd {

enum class Mode { symmetric, nonsymmetric };

// A generator basis for the arity-2 space, optionally carrying the (12)
// involution in that basis. Replicated spaces keep the tag of each basis
// element alongside its full name.
struct GenSpace {
  std::vector<std::string> names;
  std::vector<std::string> tags; // same length as names; "" when untagged
  Mode mode = Mode::symmetric;
  std::optional<Mat> action;

  int size() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const; // -1 if absent
  void validate() const;                    // shape + involution checks
};

GenSpace make_genspace(std::vector<std::string> names, Mode mode,
                       std::optional<Mat> action);

// Vertex replica tags. The formal set-tag (dagger) and sum-tag (star) are
// expanded eagerly and never stored.
enum class Tag : unsigned char { none, dashv, vdash, perp, prec, succ, dot };

std::string tag_name(Tag t);

struct Tree;
using TreePtr = std::shared_ptr<const Tree>;

// Planar binary tree. Leaves carry distinct positive integer labels; internal
// vertices carry a generator index and an optional replica tag.
struct Tree {
  int leaf = 0; // > 0 iff this is a leaf
  int gen = -1;
  Tag tag = Tag::none;
  TreePtr left, right;

  bool is_leaf() const { return leaf > 0; }
};

TreePtr make_leaf(int label);

// Grafting t_l v t_r; throws on overlapping leaf labels.
TreePtr graft(const TreePtr& l, int gen, const TreePtr& r, Tag tag = Tag::none);

int tree_cmp(const TreePtr& a, const TreePtr& b);

struct TreeLess {
  bool operator()(const TreePtr& a, const TreePtr& b) const { return tree_cmp(a, b) < 0; }
};

// Formal rational combination of decorated trees; no zero coefficients.
using TreeSum = std::map<TreePtr, Rat, TreeLess>;

void tree_sum_add(TreeSum& s, const TreePtr& t, const Rat& c);

std::set<int> leaf_labels(const TreePtr& t);
int count_vertices(const TreePtr& t);
std::string tree_str(const TreePtr& t, const GenSpace& gens);

// Duplicator of a tree with respect to leaf x: on-path vertices are tagged by
// turn direction, off-path vertices expand over both tags.
std::vector<TreePtr> du_leaf(const TreePtr& t, int x);

// Triplicator with respect to a leaf subset J (J may be empty: full three-way
// expansion of every vertex).
std::vector<TreePtr> tri_subset(const TreePtr& t, const std::set<int>& J);

// Bisuccessor with respect to leaf x: a single formal sum, off-path vertices
// contributing prec + succ.
TreeSum bsu_leaf(const TreePtr& t, int x);

// Lift to homogeneous sums with set semantics: one output sum per independent
// choice across the terms.
std::vector<TreeSum> du_relation(const TreeSum& r, int x);
std::vector<TreeSum> tri_relation(const TreeSum& r, const std::set<int>& J);
TreeSum bsu_relation(const TreeSum& r, int x);

} // namespace opd

#endif
