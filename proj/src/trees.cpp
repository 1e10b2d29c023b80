#include "treecalc/trees.hpp"

#include <bit>
#include <cstdint>
#include <regex>
#include <sstream>

#include "treecalc/poupard.hpp"

namespace treecalc {

Tree::Tree(int n, const Children& children) : n_(n) {
  if (n < 0) throw InvalidTree("n must be nonnegative");
  const int size = 2 * n + 1;
  kids_.assign(size + 1, {0, 0});
  parent_.assign(size + 1, 0);
  if (static_cast<int>(children.size()) != n)
    throw InvalidTree("expected " + std::to_string(n) + " internal nodes");
  for (const auto& [p, pair] : children) {
    auto [a, b] = pair;
    if (a > b) std::swap(a, b);
    for (int label : {p, a, b})
      if (label < 1 || label > size) throw InvalidTree("label out of range: " + std::to_string(label));
    if (a == b) throw InvalidTree("node " + std::to_string(p) + " has a repeated child");
    if (p >= a) throw InvalidTree("child " + std::to_string(a) + " is not above parent " + std::to_string(p));
    kids_[p] = {a, b};
    for (int c : {a, b}) {
      if (parent_[c] != 0) throw InvalidTree("node " + std::to_string(c) + " has two parents");
      parent_[c] = p;
    }
  }
  if (parent_[1] != 0) throw InvalidTree("label 1 must be the root");
  for (int l = 2; l <= size; ++l)
    if (parent_[l] == 0) throw InvalidTree("node " + std::to_string(l) + " has no parent");
}

bool Tree::in_subtree(int label, int root) const {
  // labels increase downward, so the walk stops once it passes below root
  while (label > root) label = parent_[label];
  return label == root;
}

Tree::Children Tree::children_map() const {
  Children out;
  for (int p = 1; p <= max_label(); ++p)
    if (!is_leaf(p)) out[p] = {kids_[p][0], kids_[p][1]};
  return out;
}

std::string Tree::serialize() const {
  std::ostringstream os;
  os << "n=" << n_ << ";";
  bool first = true;
  for (int p = 1; p <= max_label(); ++p) {
    if (is_leaf(p)) continue;
    os << (first ? " " : "") << p << ":(" << kids_[p][0] << "," << kids_[p][1] << ");";
    first = false;
  }
  return os.str();
}

Tree Tree::parse(const std::string& text) {
  static const std::regex head(R"(^\s*n\s*=\s*(\d+)\s*;)");
  static const std::regex entry(R"(^\s*(\d+)\s*:\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*;?)");
  std::smatch mt;
  if (!std::regex_search(text, mt, head)) throw InvalidTree("missing n=<n>; header");
  const int n = std::stoi(mt[1]);
  Children children;
  auto it = mt[0].second;
  while (true) {
    std::string rest(it, text.end());
    if (rest.find_first_not_of(" \t\r\n") == std::string::npos) break;
    std::smatch me;
    if (!std::regex_search(rest, me, entry)) throw InvalidTree("malformed entry: " + rest);
    const int p = std::stoi(me[1]);
    if (children.count(p)) throw InvalidTree("node " + std::to_string(p) + " listed twice");
    children[p] = {std::stoi(me[2]), std::stoi(me[3])};
    it += me[0].length();
  }
  return Tree(n, children);
}

// ---------------------------------------------------------------------------

class TreeBuilder {
 public:
  TreeBuilder(int n, const TreeVisitor& visit)
      : tree_(n, std::vector<std::array<int, 2>>(2 * n + 2, {0, 0}), std::vector<int>(2 * n + 2, 0)),
        visit_(visit) {}

  void run() {
    const int size = tree_.size();
    pending_.push_back(size == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << size) - 1);
    expand();
  }

 private:
  static int label_of(std::uint32_t bit_set) { return std::countr_zero(bit_set) + 1; }

  // Builds the subtree on the last pending label set, then continues with the rest.
  void expand() {
    if (pending_.empty()) {
      visit_(tree_);
      return;
    }
    const std::uint32_t set = pending_.back();
    pending_.pop_back();
    const int root = label_of(set);
    const std::uint32_t rest = set & (set - 1);
    if (rest == 0) {
      tree_.kids_[root] = {0, 0};
      expand();
    } else {
      const std::uint32_t low = rest & (~rest + 1);
      const std::uint32_t free = rest ^ low;
      // A = low + s for submasks s of free, in increasing order of s
      std::uint32_t s = 0;
      while (true) {
        const std::uint32_t a = low | s;
        const std::uint32_t b = rest ^ a;
        if (b != 0 && (std::popcount(a) & 1) && (std::popcount(b) & 1)) {
          const int ca = label_of(a), cb = label_of(b);
          tree_.kids_[root] = {ca, cb};
          tree_.parent_[ca] = root;
          tree_.parent_[cb] = root;
          pending_.push_back(b);
          pending_.push_back(a);
          expand();
          pending_.pop_back();
          pending_.pop_back();
        }
        if (s == free) break;
        s = (s - free) & free;
      }
      tree_.kids_[root] = {0, 0};
    }
    pending_.push_back(set);
  }

  Tree tree_;
  const TreeVisitor& visit_;
  std::vector<std::uint32_t> pending_;
};

void enumerate_trees(int n, const TreeVisitor& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (2 * n + 1 > 31) throw ResourceLimit("enumeration supports at most 31 labels");
  TreeBuilder(n, visit).run();
}

BigInt tree_count(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const BigInt t = tangent_numbers(n + 1).back();
  BigInt power = 1;
  power <<= n;
  if (t % power != 0) throw std::logic_error("tangent number not divisible by 2^n");
  return t / power;
}

namespace {

void require_nonempty(const Tree& t) {
  if (t.n() < 1) throw std::invalid_argument("eoc and pom are undefined for the one-node tree");
}

}  // namespace

std::vector<int> minimal_chain(const Tree& t) {
  require_nonempty(t);
  std::vector<int> chain{1};
  while (!t.is_leaf(chain.back())) chain.push_back(t.children(chain.back())[0]);
  return chain;
}

int eoc(const Tree& t) {
  require_nonempty(t);
  int a = 1;
  while (!t.is_leaf(a)) a = t.children(a)[0];
  return a;
}

int pom(const Tree& t) {
  require_nonempty(t);
  return t.parent(t.max_label());
}

namespace {

void check_limit(int n, int limit) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > limit)
    throw ResourceLimit("enumeration for n=" + std::to_string(n) + " exceeds the limit n<=" +
                        std::to_string(limit));
}

// Tree counts fit in 64 bits far beyond any feasible enumeration.
Grid to_grid(int n, const std::vector<unsigned long long>& cells) {
  const int size = 2 * n;
  Grid g(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) g.at(r, c) = static_cast<unsigned long>(cells[r * size + c]);
  return g;
}

}  // namespace

Grid joint_distribution(int n, int limit) {
  check_limit(n, limit);
  const int size = 2 * n;
  std::vector<unsigned long long> cells(size * size, 0);
  enumerate_trees(n, [&](const Tree& t) { ++cells[(eoc(t) - 1) * size + pom(t) - 1]; });
  return to_grid(n, cells);
}

Tree ha12_map(const Tree& t) {
  const std::vector<int> chain = minimal_chain(t);
  std::vector<int> relabel(t.max_label() + 1);
  for (int a = 2; a <= t.max_label(); ++a) relabel[a] = a - 1;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) relabel[chain[i]] = chain[i + 1] - 1;
  relabel[chain.back()] = t.max_label();
  Tree::Children out;
  for (const auto& [p, pair] : t.children_map())
    out[relabel[p]] = {relabel[pair.first], relabel[pair.second]};
  return Tree(t.n(), out);
}

const char* to_string(CensusCondition c) {
  switch (c) {
    case CensusCondition::r1_witness: return "R1Witness";
    case CensusCondition::r2_outside: return "R2WitnessOutside";
    case CensusCondition::r2_inside: return "R2WitnessInside";
  }
  return "unknown";
}

CensusCondition parse_census_condition(const std::string& tag) {
  for (auto c : {CensusCondition::r1_witness, CensusCondition::r2_outside, CensusCondition::r2_inside})
    if (tag == to_string(c)) return c;
  throw std::invalid_argument("unknown census condition: " + tag);
}

namespace {

// The (m, k) cell a tree is counted in, or {0, 0} when it does not qualify.
std::pair<int, int> census_cell(const Tree& t, CensusCondition condition) {
  const int e = eoc(t);
  const int p = pom(t);
  const int top = t.max_label();
  auto leaf_child = [&](int child, int parent) {
    return child <= top && t.parent(child) == parent && t.is_leaf(child);
  };
  if (condition == CensusCondition::r1_witness) {
    // m is the parent of the leaves m+1 = eoc and m+2
    const int m = e - 1;
    if (t.parent(e) == m && leaf_child(m + 2, m)) return {m, p};
    return {0, 0};
  }
  const int k = p - 1;
  if (k < 1) return {0, 0};
  if (condition == CensusCondition::r2_outside) {
    // k -> k+1 -> leaf k+2, chain end outside the subtree of k
    if (t.parent(k + 1) == k && leaf_child(k + 2, k + 1) && !t.in_subtree(e, k)) return {e, k};
    return {0, 0};
  }
  // k+1 and leaf k+2 are both children of k; k+1 holds 2n+1 and the chain end
  if (t.parent(k + 1) == k && leaf_child(k + 2, k) && t.in_subtree(e, k + 1)) return {e, k};
  return {0, 0};
}

}  // namespace

Grid census_matrix(int n, CensusCondition condition, int limit) {
  check_limit(n, limit);
  const int size = 2 * n;
  std::vector<unsigned long long> cells(size * size, 0);
  enumerate_trees(n, [&](const Tree& t) {
    auto [m, k] = census_cell(t, condition);
    if (m >= 1 && m <= size && k >= 1 && k <= size) ++cells[(m - 1) * size + k - 1];
  });
  return to_grid(n, cells);
}

BigInt structural_census(int n, int m, int k, CensusCondition condition, int limit) {
  check_limit(n, limit);
  unsigned long long count = 0;
  enumerate_trees(n, [&](const Tree& t) {
    if (census_cell(t, condition) == std::pair{m, k}) ++count;
  });
  return static_cast<unsigned long>(count);
}

}  // namespace treecalc
