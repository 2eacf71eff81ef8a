#include <set>

#include "doctest.h"
#include "springer/orders.hpp"

using namespace springer;

namespace {

// Count reflexive transitive relations on m points by scanning all relation bitmasks.
long brute_force_count(int m) {
  const int off = m * (m - 1);
  long count = 0;
  for (unsigned long long bits = 0; bits < (1ull << off); ++bits) {
    std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
    int k = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j)
          r[i][j] = true;
        else
          r[i][j] = (bits >> k++) & 1ull;
      }
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m && ok; ++j)
        if (r[i][j])
          for (int l = 0; l < m && ok; ++l)
            if (r[j][l] && !r[i][l]) ok = false;
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("preorder counts match a brute-force scan") {
  for (int m = 1; m <= 5; ++m) {
    auto ps = enumerate_preorders(m);
    CHECK(static_cast<long>(ps.size()) == brute_force_count(m));
    std::set<Preorder> uniq(ps.begin(), ps.end());
    CHECK(uniq.size() == ps.size());
  }
}

TEST_CASE("known preorder counts") {
  const long counts[] = {1, 4, 29, 355, 6942, 209527};
  for (int m = 1; m <= 6; ++m) {
    long c = 0;
    for_each_preorder(m, [&](const Preorder&) { ++c; });
    CHECK(c == counts[m - 1]);
  }
}

TEST_CASE("preorder validation") {
  CHECK_THROWS(Preorder(std::vector<std::uint32_t>{0b01, 0b00}));  // not reflexive
  CHECK_THROWS(Preorder(std::vector<std::uint32_t>{0b011, 0b110, 0b100}));  // 0<=1<=2 but not 0<=2
  Preorder p = Preorder::closure(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p.less(0, 2));
  CHECK(!p.leq(2, 0));
  Preorder c = Preorder::closure(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c == Preorder::complete(3));
  CHECK(c.class_mask(1) == 0b111u);
  CHECK(c.strict_up_mask(1) == 0u);
  CHECK(Preorder::discrete(4).up_mask(2) == 0b100u);
  std::vector<std::vector<bool>> rel{{true, true}, {false, true}};
  CHECK(Preorder::from_matrix(rel) == Preorder::closure(2, {{0, 1}}));
}

TEST_CASE("theorem patterns") {
  for (int n : {3, 5, 7}) {
    GroupParams g(n);
    auto pats = theorem_patterns(g);
    CHECK(static_cast<long>(pats.size()) == (1L << (g.C + 1)) + 1);
    std::set<Preorder> uniq(pats.begin(), pats.end());
    CHECK(uniq.size() == pats.size());
    for (const auto& p : pats) {
      CHECK(theorem_case(g, p) != 0);
      CHECK(theorem_case(g, swap_triv_sgn(g, p)) != 0);
      CHECK(uniq.count(swap_triv_sgn(g, p)) == 1);
    }
    CHECK(theorem_case(g, Preorder::discrete(g.num_irr())) == 0);
    // case (ii) puts sgn strictly on top
    for (const auto& p : pats)
      if (theorem_case(g, p) == 2) {
        for (int k = 0; k <= g.C; ++k) CHECK(p.less(k, g.C + 1));
      }
  }
}

TEST_CASE("up-set signatures and the Ext preorder") {
  GroupParams g(5);
  Preorder p = Preorder::closure(4, {{0, 1}, {1, 2}, {2, 3}});
  UpSetSignature s = up_sets(g, p);
  CHECK(s.up[0].size() == 4);
  CHECK(s.strict_up[3].empty());
  std::map<IrrLabel, LabelSet> D{{IrrLabel::triv(), {IrrLabel::chi(g, 1)}},
                                 {IrrLabel::chi(g, 1), {IrrLabel::chi(g, 2)}},
                                 {IrrLabel::chi(g, 2), {IrrLabel::sgn()}}};
  CHECK(precsim_K(g, D) == p);
}

TEST_CASE("serialization round trips") {
  for (int n : {3, 5}) {
    GroupParams g(n);
    for (const auto& p : enumerate_preorders(g.num_irr())) {
      CHECK(parse_preorder(g, to_pairs(g, p)) == p);
      CHECK(swap_triv_sgn(g, swap_triv_sgn(g, p)) == p);
    }
  }
  GroupParams g(5);
  CHECK(describe(g, theorem_patterns(g).front()) == "triv~chi1~chi2~sgn");
  CHECK(describe(g, Preorder::closure(4, {{0, 1}, {1, 2}, {2, 3}})) == "triv<chi1<chi2<sgn");
  CHECK_THROWS(parse_preorder(g, {"triv<chi1"}));
}
