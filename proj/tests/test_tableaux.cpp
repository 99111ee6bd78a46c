#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystal/insertion.hpp"
#include "crystal/tableau.hpp"
#include "oracles.hpp"

using namespace crystal;

namespace {

Tableau tab(std::vector<int> outer, Alphabet a, std::vector<std::vector<Letter>> rows,
            bool rotated = false, std::vector<int> inner = {}) {
  return Tableau(SkewShape(Partition(outer), Partition(inner), rotated), a, std::move(rows));
}

// The running example: S in SST_[6]((6,5,3,3,2)).
Tableau example_s() {
  return tab({6, 5, 3, 3, 2}, Alphabet::unbarred(6),
             {{1, 1, 1, 2, 2, 3}, {2, 3, 3, 5, 6}, {4, 4, 4}, {5, 5, 6}, {6, 6}});
}

Word uw(int n, std::vector<Letter> ls) { return Word(Alphabet::unbarred(n), std::move(ls)); }

}  // namespace

TEST_CASE("partition invariants") {
  CHECK_THROWS(Partition({2, 3}));
  CHECK_THROWS(Partition({3, -1}));
  CHECK_THROWS(Partition({3, 2, 1}, 2));
  CHECK(Partition({3, 2}) == Partition({3, 2, 0}));
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({4})));
}

TEST_CASE("skew shape display geometry") {
  SkewShape rot(Partition({3, 1}), Partition::empty(), true);
  CHECK(rot.rows() == 2);
  CHECK(rot.col_begin(0) == 2);
  CHECK(rot.col_end(0) == 3);
  CHECK(rot.col_begin(1) == 0);
  CHECK(rot.row_len(1) == 3);

  SkewShape skew(Partition({6, 3}), Partition({3, 1}), true);
  CHECK(skew.row_len(0) == 2);
  CHECK(skew.col_begin(0) == 3);
  CHECK(skew.row_len(1) == 3);
  CHECK(skew.col_begin(1) == 0);

  CHECK_THROWS(SkewShape(Partition({2}), Partition({3}), false));
}

TEST_CASE("semistandard validation") {
  CHECK_NOTHROW(tab({2, 1}, Alphabet::unbarred(3), {{1, 1}, {2}}));
  CHECK_THROWS(tab({2, 1}, Alphabet::unbarred(3), {{1, 1}, {1}}));   // column weak
  CHECK_THROWS(tab({2, 1}, Alphabet::unbarred(3), {{2, 1}, {3}}));   // row decreasing
  CHECK_THROWS(tab({2, 1}, Alphabet::unbarred(3), {{1, 4}, {2}}));   // outside alphabet
  CHECK_NOTHROW(tab({3, 1}, Alphabet::barred(3), {{-3}, {-2, -2, -1}}, true));
}

TEST_CASE("reading word") {
  CHECK(tab({1}, Alphabet::unbarred(2), {{1}}).reading_word() == uw(2, {1}));
  CHECK(Tableau::empty(Alphabet::unbarred(3)).reading_word() == uw(3, {}));
  CHECK(example_s().reading_word() ==
        uw(6, {3, 2, 2, 1, 1, 1, 6, 5, 3, 3, 2, 4, 4, 4, 6, 5, 5, 6, 6}));
}

TEST_CASE("word operators on two letters") {
  auto lowered = word_apply(uw(2, {1, 1}), 1, Dir::lower_op);
  REQUIRE(lowered);
  CHECK(*lowered == uw(2, {2, 1}));

  lowered = word_apply(uw(2, {2, 1}), 1, Dir::lower_op);
  REQUIRE(lowered);
  CHECK(*lowered == uw(2, {2, 2}));

  CHECK_FALSE(word_apply(uw(3, {1, 2, 3}), 1, Dir::raise_op));
  CHECK_THROWS(word_apply(uw(2, {1}), 2, Dir::lower_op));
}

TEST_CASE("word crystal axioms, exhaustive") {
  for (int n = 2; n <= 4; ++n) {
    const int max_len = 6;
    for (Alphabet a : {Alphabet::unbarred(n), Alphabet::barred(n)}) {
      std::vector<Letter> letters;
      for (int k = 1; k <= n; ++k)
        letters.push_back(a.kind == AlphabetKind::unbarred ? k : -k);
      long words = 0;
      std::vector<Letter> cur;
      std::function<void()> visit = [&] {
        ++words;
        Word w(a, cur);
        auto wt = w.weight();
        for (int i = 1; i < n; ++i) {
          auto st = word_index_stats(w, i);
          CHECK(st.phi == wt[i - 1] - wt[i] + st.eps);  // axiom (1)
          auto lo = word_apply(w, i, Dir::lower_op);
          CHECK(lo.has_value() == (st.phi > 0));
          if (lo) {
            auto ls = word_index_stats(*lo, i);
            CHECK(ls.eps == st.eps + 1);  // axiom (3)
            CHECK(ls.phi == st.phi - 1);
            auto back = word_apply(*lo, i, Dir::raise_op);
            REQUIRE(back);
            CHECK(*back == w);  // axiom (4)
          }
          auto hi = word_apply(w, i, Dir::raise_op);
          CHECK(hi.has_value() == (st.eps > 0));
          if (hi) {
            auto hs = word_index_stats(*hi, i);
            CHECK(hs.eps == st.eps - 1);  // axiom (2)
            CHECK(hs.phi == st.phi + 1);
            auto fwd = word_apply(*hi, i, Dir::lower_op);
            REQUIRE(fwd);
            CHECK(*fwd == w);
          }
        }
      };
      std::function<void(int)> gen = [&](int len) {
        visit();
        if (len == max_len) return;
        for (Letter l : letters) {
          cur.push_back(l);
          gen(len + 1);
          cur.pop_back();
        }
      };
      gen(0);
      CHECK(words > 1);
    }
  }
}

TEST_CASE("column insertion goldens") {
  Alphabet b3 = Alphabet::barred(3);
  Tableau t = column_insert(Tableau::empty(b3), -2);
  CHECK(t == tab({1}, b3, {{-2}}, true));

  // Replaying the reading word 1~ 2~ 3~ 2~ of S^- from the back rebuilds T.
  for (Letter a : {-3, -2, -1}) t = column_insert(t, a);
  CHECK(t == tab({3, 1}, b3, {{-3}, {-2, -2, -1}}, true));
}

TEST_CASE("column insertion grows one corner and keeps the Knuth class") {
  oracles::Rng rng(42);
  for (int it = 0; it < 200; ++it) {
    int n = oracles::pick(rng, 2, 5);
    Alphabet a = oracles::pick(rng, 0, 1) ? Alphabet::barred(n) : Alphabet::unbarred(n);
    Tableau base = oracles::random_sst(rng, oracles::random_partition(rng, n, 4), a,
                                       oracles::pick(rng, 0, 8));
    Tableau t = antinormalize(base);
    Letter x = a.kind == AlphabetKind::unbarred ? oracles::pick(rng, 1, n)
                                                : -oracles::pick(rng, 1, n);
    Tableau grown = column_insert(t, x);
    CHECK(grown.cells() == t.cells() + 1);
    CHECK(grown.shape().outer().contains(t.shape().outer()));

    auto word = t.row_word().letters;
    word.push_back(x);
    CHECK(oracles::knuth_class_of(grown) == oracles::knuth_class_of_word(word, a));
  }
}

TEST_CASE("rectification goldens") {
  Alphabet b3 = Alphabet::barred(3);
  Tableau t = tab({3, 1}, b3, {{-3}, {-2, -2, -1}}, true);
  CHECK(rectify(t) == tab({3, 1}, b3, {{-3, -2, -1}, {-2}}));

  Tableau sigma = sigma_complement(example_s(), 6);
  Tableau rect = rectify(sigma);
  CHECK(rect == tab({6, 4, 3, 3, 1}, Alphabet::barred(6),
                    {{-6, -6, -5, -4, -1, -1},
                     {-5, -5, -4, -2},
                     {-4, -3, -3},
                     {-3, -2, -1},
                     {-2}}));

  // A single row is its own rectification, re-oriented.
  Tableau row = tab({3}, Alphabet::unbarred(4), {{1, 2, 2}});
  CHECK(rectify(antinormalize(row)) == row);
}

TEST_CASE("rectify agrees with jeu de taquin and inverts antinormalize") {
  oracles::Rng rng(7);
  for (int it = 0; it < 300; ++it) {
    int n = oracles::pick(rng, 2, 5);
    Alphabet a = oracles::pick(rng, 0, 1) ? Alphabet::barred(n) : Alphabet::unbarred(n);
    Tableau s = oracles::random_sst(rng, oracles::random_partition(rng, n, 4), a,
                                    oracles::pick(rng, 0, 10));
    Tableau t = antinormalize(s);
    CHECK(t.shape().rotated());
    CHECK(t.shape().outer() == s.shape().outer());
    CHECK(rectify(t) == s);
    CHECK(oracles::knuth_class_of(t) == s);
    CHECK(antinormalize(rectify(t)) == t);
  }
}

TEST_CASE("sigma complement golden from the n=6 example") {
  Tableau sigma = sigma_complement(example_s(), 6);
  CHECK(sigma == Tableau(SkewShape(Partition({6, 4, 3, 3, 1, 0}), Partition::empty(), true),
                         Alphabet::barred(6),
                         {{},
                          {-6},
                          {-6, -5, -5},
                          {-4, -4, -4},
                          {-5, -3, -3, -2},
                          {-3, -2, -2, -1, -1, -1}}));
  CHECK_THROWS(sigma_complement(example_s(), 5));  // d < lambda_1
}

TEST_CASE("sigma complement single column and round trip") {
  Tableau col = tab({1, 1}, Alphabet::unbarred(4), {{1}, {3}});
  Tableau comp = sigma_complement(col, 1);
  CHECK(comp == Tableau(SkewShape(Partition({1, 1, 0, 0}), Partition::empty(), true),
                        Alphabet::barred(4), {{}, {}, {-4}, {-2}}));

  oracles::Rng rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = oracles::pick(rng, 1, 5);
    Alphabet a = oracles::pick(rng, 0, 1) ? Alphabet::barred(n) : Alphabet::unbarred(n);
    Tableau s = oracles::random_sst(rng, oracles::random_partition(rng, n, 4), a,
                                    oracles::pick(rng, 0, 8));
    int d = s.shape().outer().width() + oracles::pick(rng, 0, 2);
    CHECK(sigma_complement(sigma_complement(s, d), d) == s);
  }
}

TEST_CASE("sigma complement commutes with the crystal operators") {
  for (int n = 2; n <= 4; ++n) {
    Alphabet a = Alphabet::unbarred(n);
    for (const Partition& lambda : oracles::partitions_up_to(n == 4 ? 5 : 6, n)) {
      int d = lambda.width();
      if (d == 0) continue;
      oracles::enumerate_sst(lambda, a, [&](const Tableau& s) {
        Tableau image = sigma_complement(s, d);
        for (int i = 1; i < n; ++i)
          for (Dir dir : {Dir::raise_op, Dir::lower_op}) {
            auto moved = tableau_apply(s, i, dir);
            auto moved_image = tableau_apply(image, i, dir);
            REQUIRE(moved.has_value() == moved_image.has_value());
            if (moved) CHECK(sigma_complement(*moved, d) == *moved_image);
          }
      });
    }
  }
}

TEST_CASE("weights") {
  auto wt = example_s().weight();
  CHECK(wt == std::vector<int>{3, 3, 3, 3, 3, 4});
  auto swt = sigma_complement(example_s(), 6).weight();
  for (int k = 0; k < 6; ++k) CHECK(swt[k] == wt[k] - 6);
}

TEST_CASE("antinormalize inverts rectify on arbitrary rotated tableaux") {
  // Rotated straight-shape tableaux sampled independently of antinormalize,
  // through the rotate-and-relabel bijection.
  oracles::Rng rng(83);
  for (int it = 0; it < 200; ++it) {
    int n = oracles::pick(rng, 2, 5);
    Alphabet a = oracles::pick(rng, 0, 1) ? Alphabet::barred(n) : Alphabet::unbarred(n);
    Tableau u = oracles::random_sst(rng, oracles::random_partition(rng, n, 4), a,
                                    oracles::pick(rng, 0, 10));
    Tableau t = rotate_relabel(u);
    CHECK(t.shape().rotated());
    CHECK(rotate_relabel(t) == u);
    CHECK(antinormalize(rectify(t)) == t);
  }
}
