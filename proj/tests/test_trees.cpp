#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <opd/trees.hpp>

#include <algorithm>

using namespace opd;

namespace {

GenSpace three_gens() {
  Mat a(3, 3);
  for (int i = 0; i < 3; ++i) a.at(i, i) = Rat(1);
  return make_genspace({"g1", "g2", "g3"}, Mode::symmetric, a);
}

// (x1 g1 x2) g2 (x3 g3 x4)
TreePtr four_leaf_tree() {
  return graft(graft(make_leaf(1), 0, make_leaf(2)), 1,
               graft(make_leaf(3), 2, make_leaf(4)));
}

// Tags of the vertices decorated by each generator, sorted per generator.
std::vector<Tag> tag_of_gen(const TreePtr& t, int gen) {
  std::vector<Tag> out;
  auto walk = [&](auto&& self, const TreePtr& u) -> void {
    if (u->is_leaf()) return;
    if (u->gen == gen) out.push_back(u->tag);
    self(self, u->left);
    self(self, u->right);
  };
  walk(walk, t);
  return out;
}

} // namespace

TEST_CASE("basic tree structure") {
  TreePtr t = four_leaf_tree();
  CHECK(leaf_labels(t) == std::set<int>{1, 2, 3, 4});
  CHECK(count_vertices(t) == 3);
  CHECK(tree_str(t, three_gens()) == "g2(g1(x,y),g3(z,4))");
  CHECK(tree_cmp(t, t) == 0);
  CHECK(tree_cmp(make_leaf(1), make_leaf(2)) != 0);
  CHECK_THROWS(graft(make_leaf(1), 0, make_leaf(1)));
  CHECK_THROWS(make_leaf(0));
}

TEST_CASE("duplicator of a tree with respect to a leaf") {
  // du_{x2} of (x1 g1 x2) g2 (x3 g3 x4): the vertex path to x2 fixes g1 to
  // the right tag and g2 to the left tag; g3 is off the path and expands.
  auto set = du_leaf(four_leaf_tree(), 2);
  REQUIRE(set.size() == 2);
  std::vector<Tag> g3tags;
  for (auto& t : set) {
    CHECK(tag_of_gen(t, 0) == std::vector<Tag>{Tag::vdash});
    CHECK(tag_of_gen(t, 1) == std::vector<Tag>{Tag::dashv});
    g3tags.push_back(tag_of_gen(t, 2)[0]);
  }
  std::sort(g3tags.begin(), g3tags.end());
  CHECK(g3tags == std::vector<Tag>{Tag::dashv, Tag::vdash});

  CHECK_THROWS(du_leaf(four_leaf_tree(), 9));
}

TEST_CASE("triplicator of a tree with respect to a leaf subset") {
  // tri_{{1,2}}: J splits at g1 (perp), stays left of g2 (dashv), and misses
  // the g3 branch entirely (three-way expansion).
  auto set = tri_subset(four_leaf_tree(), {1, 2});
  REQUIRE(set.size() == 3);
  std::vector<Tag> g3tags;
  for (auto& t : set) {
    CHECK(tag_of_gen(t, 0) == std::vector<Tag>{Tag::perp});
    CHECK(tag_of_gen(t, 1) == std::vector<Tag>{Tag::dashv});
    g3tags.push_back(tag_of_gen(t, 2)[0]);
  }
  std::sort(g3tags.begin(), g3tags.end());
  CHECK(g3tags == std::vector<Tag>{Tag::dashv, Tag::vdash, Tag::perp});
}

TEST_CASE("empty subset expands every vertex three ways") {
  CHECK(tri_subset(four_leaf_tree(), {}).size() == 27);
}

TEST_CASE("expansion counts scale with off-path vertices") {
  TreePtr t = four_leaf_tree();
  // Leaf 1: path hits g2 then g1, leaving only g3 free.
  CHECK(du_leaf(t, 1).size() == 2);
  CHECK(tri_subset(t, {1}).size() == 3);
  // A comb of four vertices with the marked leaf at the deep end leaves no
  // free vertex at all.
  TreePtr comb = graft(graft(graft(graft(make_leaf(1), 0, make_leaf(2)), 0, make_leaf(3)), 0,
                             make_leaf(4)),
                       0, make_leaf(5));
  CHECK(du_leaf(comb, 1).size() == 1);
  // Marked leaf at the top: the three lower vertices are free.
  CHECK(du_leaf(comb, 5).size() == 8);
  CHECK(tri_subset(comb, {5}).size() == 27);
}

TEST_CASE("bisuccessor of a tree is a single sum") {
  TreeSum s = bsu_leaf(four_leaf_tree(), 2);
  REQUIRE(s.size() == 2); // the off-path g3 contributes prec + succ
  for (auto& [t, c] : s) {
    CHECK(c == 1);
    CHECK(tag_of_gen(t, 0) == std::vector<Tag>{Tag::succ});
    CHECK(tag_of_gen(t, 1) == std::vector<Tag>{Tag::prec});
  }
  auto it = s.begin();
  Tag a = tag_of_gen(it->first, 2)[0];
  Tag b = tag_of_gen(std::next(it)->first, 2)[0];
  CHECK(std::minmax(a, b) == std::minmax(Tag::prec, Tag::succ));
}

TEST_CASE("relation lifts take one output per independent choice") {
  // r = t - t' with one off-path vertex in each term: 2 x 2 du outputs,
  // 3 x 3 tri outputs, a single bsu sum with 2 + 2 terms.
  TreePtr t = four_leaf_tree();
  TreePtr t2 = graft(graft(make_leaf(1), 2, make_leaf(2)), 1,
                     graft(make_leaf(3), 0, make_leaf(4)));
  TreeSum r;
  tree_sum_add(r, t, Rat(1));
  tree_sum_add(r, t2, Rat(-1));
  CHECK(du_relation(r, 2).size() == 4);
  CHECK(tri_relation(r, {2}).size() == 9);
  CHECK(bsu_relation(r, 2).size() == 4);

  // A fully on-path relation lifts to a single output.
  TreeSum jac;
  tree_sum_add(jac, graft(graft(make_leaf(1), 0, make_leaf(2)), 0, make_leaf(3)), Rat(1));
  CHECK(du_relation(jac, 3).size() == 2); // inner vertex free for leaf 3
  CHECK(du_relation(jac, 1).size() == 1);
}

TEST_CASE("relation lifts reject bad input") {
  TreeSum r;
  tree_sum_add(r, four_leaf_tree(), Rat(1));
  tree_sum_add(r, graft(make_leaf(1), 0, make_leaf(2)), Rat(1));
  CHECK_THROWS(du_relation(r, 1));   // not homogeneous
  TreeSum ok;
  tree_sum_add(ok, four_leaf_tree(), Rat(1));
  CHECK_THROWS(du_relation(ok, 7));  // leaf absent
  CHECK_THROWS(tri_relation(ok, {7}));
  CHECK_THROWS(bsu_relation(ok, 7));
  TreeSum empty;
  CHECK_THROWS(du_relation(empty, 1));
}

TEST_CASE("tree sums cancel exactly") {
  TreeSum s;
  tree_sum_add(s, four_leaf_tree(), Rat(1, 3));
  tree_sum_add(s, four_leaf_tree(), Rat(-1, 3));
  CHECK(s.empty());
}

TEST_CASE("tagged trees refuse further replication") {
  auto tagged = du_leaf(four_leaf_tree(), 2);
  CHECK_THROWS(du_leaf(tagged[0], 2));
}
