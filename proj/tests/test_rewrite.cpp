#include <algorithm>
#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "plength/coset_table.hpp"
#include "plength/parse.hpp"
#include "plength/rewrite.hpp"
#include "plength/two_complex.hpp"

using namespace plength;

namespace {

// Multiset of relators up to rotation and inversion, for route comparisons.
std::map<Word, int> relator_multiset(const std::vector<Word>& relators) {
  std::map<Word, int> m;
  for (const Word& r : relators) m[canonical_cyclic(r)] += 1;
  return m;
}

long long presentation_chi(const Presentation& p) {
  return 1 - p.generator_count() + static_cast<long long>(p.relators.size());
}

}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("index-one transversal is the empty representative") {
    CosetTable t(1, 2);
    t.set(0, 1, 0);
    t.set(0, 2, 0);
    SchreierTransversal tr = schreier_transversal(t);
    REQUIRE(tr.representative_word.size() == 1);
    CHECK(tr.representative_word[0].empty());
    CHECK(tr.tree_edges.empty());
  }

  TEST_CASE("cyclic cover of the line gives power representatives") {
    Presentation f1 = parse_presentation("< x | >");
    CosetTable t = todd_coxeter(f1, [&] {
      SubgroupSpec s;
      s.generator_words.push_back(parse_word("x^3", f1));
      return s;
    }(), 20);
    SchreierTransversal tr = schreier_transversal(t);
    REQUIRE(tr.representative_word.size() == 3);
    CHECK(tr.representative_word[0] == Word{});
    CHECK(tr.representative_word[1] == Word{1});
    CHECK(tr.representative_word[2] == Word{1, 1});
    CHECK(tr.tree_edges.size() == 2);
  }

  TEST_CASE("index-two table of the free pair uses the sole non-loop edge") {
    CosetTable t(2, 2);
    t.set(0, 1, 1);  // a swaps the cosets
    t.set(1, 1, 0);
    t.set(0, 2, 0);  // b fixes both
    t.set(1, 2, 1);
    SchreierTransversal tr = schreier_transversal(t);
    REQUIRE(tr.representative_word.size() == 2);
    CHECK(tr.representative_word[0] == Word{});
    CHECK(tr.representative_word[1] == Word{1});
    REQUIRE(tr.tree_edges.size() == 1);
    CHECK(tr.tree_edges[0] == std::pair<int, Letter>{0, 1});
  }

  TEST_CASE("index-one rewriting returns the presentation up to reduction") {
    for (const auto& f : fixtures::corpus()) {
      CAPTURE(f.name);
      const Presentation& p = f.presentation;
      CosetTable t(1, p.generator_count());
      for (int g = 0; g < p.generator_count(); ++g) t.set(0, g + 1, 0);
      Presentation r = rewrite_presentation(p, t);
      CHECK(r.generator_count() == p.generator_count());
      std::vector<Word> reduced;
      for (const Word& w : p.relators) reduced.push_back(cyclic_reduce(w));
      CHECK(relator_multiset(r.relators) == relator_multiset(reduced));
    }
  }

  TEST_CASE("degree-two cover of the cyclic six group is cyclic three") {
    Presentation z6 = parse_presentation("< x | x^6 >");
    CosetTable t = todd_coxeter(z6, [&] {
      SubgroupSpec s;
      s.generator_words.push_back(parse_word("x^2", z6));
      return s;
    }(), 50);
    Presentation r = rewrite_presentation(z6, t);
    REQUIRE(r.generator_count() == 1);
    CHECK(r.generator_names[0] == "xc2");
    REQUIRE(r.relators.size() == 2);  // one rewrite of x^6 per coset
    CHECK(r.relators[0] == Word{1, 1, 1});
    CHECK(r.relators[1] == Word{1, 1, 1});
  }

  TEST_CASE("schreier generator names are distinct and suffixed by coset") {
    Presentation f2 = parse_presentation("< a, b | >");
    std::vector<CosetTable> tables = low_index_subgroups(f2, 3);
    for (const CosetTable& t : tables) {
      Presentation r = rewrite_presentation(f2, t);
      CHECK_NOTHROW(r.validate());
      // Free group covers are free: ranks follow the index formula.
      CHECK(r.generator_count() == t.index() * (2 - 1) + 1);
      CHECK(r.relators.empty());
    }
  }

  TEST_CASE("euler characteristic scales by the index") {
    for (const auto& f : fixtures::corpus()) {
      if (f.name == "figure8_base") continue;  // exercised in the acceptance run
      CAPTURE(f.name);
      const Presentation& p = f.presentation;
      for (const CosetTable& t : low_index_subgroups(p, 3)) {
        Presentation r = rewrite_presentation(p, t);
        CHECK(presentation_chi(r) == t.index() * presentation_chi(p));
        CHECK_NOTHROW(r.validate());
      }
    }
  }

  TEST_CASE("rewritten cost respects the index bound on triangulated input") {
    for (const auto& f : fixtures::corpus()) {
      if (f.name == "figure8_base") continue;
      CAPTURE(f.name);
      Triangulation tri = triangulate_full(f.presentation);
      for (const CosetTable& t : low_index_subgroups(f.presentation, 3)) {
        CosetTable full = extend_table(t, tri.aux_definitions, tri.presentation.generator_count());
        Presentation r = rewrite_presentation(tri.presentation, full);
        CHECK(tcost(r) <= t.index() * tcost(tri.presentation));
      }
    }
  }

  TEST_CASE("algebraic and geometric routes agree") {
    for (const auto& f : fixtures::corpus()) {
      if (f.name == "figure8_base") continue;
      CAPTURE(f.name);
      Triangulation tri = triangulate_full(f.presentation);
      const Presentation& pt = tri.presentation;
      TwoComplex base = from_presentation(pt);
      for (const CosetTable& t : low_index_subgroups(f.presentation, 3)) {
        CosetTable full = extend_table(t, tri.aux_definitions, pt.generator_count());
        Presentation algebraic = rewrite_presentation(pt, full);

        TwoComplex lifted = cover(base, full);
        SchreierTransversal tr = schreier_transversal(full);
        std::vector<int> tree;
        for (const auto& [coset, letter] : tr.tree_edges)
          tree.push_back(gen_of(letter) * full.index() + coset);
        ContractResult contracted = contract_tree(lifted, tree);
        Presentation geometric = one_vertex_presentation(contracted.complex);

        CHECK(geometric.generator_count() == algebraic.generator_count());
        std::vector<Word> geometric_relators = geometric.relators;
        for (const Word& w : contracted.dropped_face_words) geometric_relators.push_back(w);
        CHECK(relator_multiset(geometric_relators) == relator_multiset(algebraic.relators));
        CHECK(tcost(geometric) == tcost(algebraic));
      }
    }
  }

  TEST_CASE("transversal rejects tables that are not transitive") {
    CosetTable t(2, 1);
    t.set(0, 1, 0);
    t.set(1, 1, 1);
    CHECK_THROWS_AS(schreier_transversal(t), std::invalid_argument);
  }
}
