#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "springer/dihedral.hpp"
#include "springer/gchar.hpp"

namespace springer {

// Reflexive transitive relation on {0..m-1}; element k is IrrLabel::from_index(k).
// Stored as up-set bitmasks: bit j of up[i] set iff i <= j.
class Preorder {
 public:
  Preorder() = default;
  // Validates reflexivity and transitivity.
  explicit Preorder(std::vector<std::uint32_t> up);
  static Preorder from_matrix(const std::vector<std::vector<bool>>& rel);
  static Preorder discrete(int m);
  static Preorder complete(int m);
  // Reflexive-transitive closure of the given edges.
  static Preorder closure(int m, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int i, int j) const { return (up_[i] >> j) & 1u; }
  bool less(int i, int j) const { return leq(i, j) && !leq(j, i); }
  bool equiv(int i, int j) const { return leq(i, j) && leq(j, i); }
  std::uint32_t up_mask(int i) const { return up_[i]; }
  std::uint32_t strict_up_mask(int i) const;
  std::uint32_t class_mask(int i) const;

  // Canonical key: the up-set signature.
  const std::vector<std::uint32_t>& signature() const { return up_; }
  std::string key() const;

  friend bool operator==(const Preorder& a, const Preorder& b) { return a.up_ == b.up_; }
  friend bool operator<(const Preorder& a, const Preorder& b) { return a.up_ < b.up_; }

 private:
  std::vector<std::uint32_t> up_;
};

struct UpSetSignature {
  std::vector<LabelSet> up, strict_up;  // indexed by label index
};

UpSetSignature up_sets(const GroupParams& g, const Preorder& p);

// Every preorder on m points exactly once, in a deterministic order.
void for_each_preorder(int m, const std::function<void(const Preorder&)>& f);
std::vector<Preorder> enumerate_preorders(int m);

// Closure of the edges lambda -> mu for mu in D[lambda].
Preorder precsim_K(const GroupParams& g, const std::map<IrrLabel, LabelSet>& D);

std::vector<Preorder> theorem_patterns(const GroupParams& g);
// Which theorem case a preorder belongs to: 1, 2, 3, or 0 if none.
int theorem_case(const GroupParams& g, const Preorder& p);

Preorder swap_triv_sgn(const GroupParams& g, const Preorder& p);

// "triv<=chi1" pairs for all non-reflexive relations, and the inverse.
std::vector<std::string> to_pairs(const GroupParams& g, const Preorder& p);
std::string to_string(const GroupParams& g, const Preorder& p);
Preorder parse_preorder(const GroupParams& g, const std::vector<std::string>& pairs);
// Chain notation such as "triv<chi1~chi2<sgn" when the preorder is total; pairs otherwise.
std::string describe(const GroupParams& g, const Preorder& p);

}  // namespace springer
