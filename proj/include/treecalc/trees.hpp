#pragma once

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treecalc/grid.hpp"

namespace treecalc {

class InvalidTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strictly ordered binary tree on labels 1..2n+1, rooted at 1.
/// Child pairs are stored smaller label first.
class Tree {
 public:
  using Children = std::map<int, std::pair<int, int>>;

  Tree() : Tree(0, {}) {}
  // Throws InvalidTree when the axioms fail.
  Tree(int n, const Children& children);

  int n() const { return n_; }
  int size() const { return 2 * n_ + 1; }
  int max_label() const { return 2 * n_ + 1; }

  bool is_leaf(int label) const { return kids_[label][0] == 0; }
  // {smaller, larger}; {0, 0} for a leaf.
  const std::array<int, 2>& children(int label) const { return kids_[label]; }
  // 0 for the root.
  int parent(int label) const { return parent_[label]; }

  bool in_subtree(int label, int root) const;

  Children children_map() const;

  // "n=<n>; p:(a,b);q:(c,d);" with parents in increasing order.
  std::string serialize() const;
  static Tree parse(const std::string& text);

  friend bool operator==(const Tree& a, const Tree& b) { return a.n_ == b.n_ && a.kids_ == b.kids_; }

 private:
  friend class TreeBuilder;
  Tree(int n, std::vector<std::array<int, 2>> kids, std::vector<int> parent)
      : n_(n), kids_(std::move(kids)), parent_(std::move(parent)) {}

  int n_;
  std::vector<std::array<int, 2>> kids_;
  std::vector<int> parent_;
};

using TreeVisitor = std::function<void(const Tree&)>;

/// Every tree on 2n+1 nodes, once each, in a fixed order. The tree passed to
/// the visitor is only valid during the call.
void enumerate_trees(int n, const TreeVisitor& visit);

BigInt tree_count(int n);

// Reject the one-node tree with std::invalid_argument.
std::vector<int> minimal_chain(const Tree& t);
int eoc(const Tree& t);
int pom(const Tree& t);

inline constexpr int kDefaultEnumerationLimit = 7;

/// (2n)x(2n) grid, cell (m-1, k-1) = #{t : eoc(t) = m, pom(t) = k}.
/// Throws ResourceLimit when n exceeds the limit.
Grid joint_distribution(int n, int limit = kDefaultEnumerationLimit);

Tree ha12_map(const Tree& t);

enum class CensusCondition { r1_witness, r2_outside, r2_inside };

const char* to_string(CensusCondition c);
// Throws std::invalid_argument on an unknown tag.
CensusCondition parse_census_condition(const std::string& tag);

BigInt structural_census(int n, int m, int k, CensusCondition condition,
                         int limit = kDefaultEnumerationLimit);

/// All (m, k) at once; cell (m-1, k-1), cells outside the grid dropped.
Grid census_matrix(int n, CensusCondition condition, int limit = kDefaultEnumerationLimit);

}  // namespace treecalc
