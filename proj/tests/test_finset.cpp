#include "doctest.h"

#include "ct/finset.hpp"

using namespace ct;

TEST_CASE("FinFunction composition and identity") {
  FinFunction f(3, 2, {0, 1, 0});
  FinFunction g(2, 4, {3, 1});
  FinFunction gf = g.after(f);
  CHECK(gf.src_size == 3);
  CHECK(gf.dst_size == 4);
  CHECK(gf.map == std::vector<std::size_t>{3, 1, 3});
  CHECK(g.after(FinFunction::identity(2)) == g);
  CHECK(FinFunction::identity(4).after(g) == g);
  CHECK_THROWS_AS(f.after(g), std::invalid_argument);
}

TEST_CASE("FinFunction validation") {
  CHECK_THROWS_AS(FinFunction(2, 2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(FinFunction(2, 2, {0, 2}), std::invalid_argument);
}

TEST_CASE("FinFunction bijections and inverses") {
  FinFunction p(3, 3, {2, 0, 1});
  CHECK(p.is_bijection());
  CHECK(p.inverse().after(p) == FinFunction::identity(3));
  CHECK(p.after(p.inverse()) == FinFunction::identity(3));
  FinFunction c(2, 2, {0, 0});
  CHECK(!c.is_bijection());
  CHECK_THROWS_AS(c.inverse(), std::logic_error);
  CHECK(!FinFunction(2, 3, {0, 1}).is_bijection());
}

TEST_CASE("all_functions enumerates in lexicographic order") {
  auto fs = all_functions(2, 3);
  REQUIRE(fs.size() == 9);
  CHECK(fs.front().map == std::vector<std::size_t>{0, 0});
  CHECK(fs[1].map == std::vector<std::size_t>{0, 1});
  CHECK(fs.back().map == std::vector<std::size_t>{2, 2});
  CHECK(all_functions(0, 3).size() == 1);  // the empty map
  CHECK(all_functions(2, 0).empty());
  CHECK(all_functions(0, 0).size() == 1);
}

TEST_CASE("UnionFind quotient numbering follows first occurrence") {
  UnionFind uf(5);
  uf.unite(3, 0);
  uf.unite(4, 1);
  CHECK(uf.same(0, 3));
  CHECK(!uf.same(0, 1));
  FinFunction q = uf.quotient_map();
  CHECK(q.src_size == 5);
  CHECK(q.dst_size == 3);
  CHECK(q.map == std::vector<std::size_t>{0, 1, 2, 0, 1});
}

TEST_CASE("FinSet naming") {
  FinSet s(3, "a");
  CHECK(s.size() == 3);
  CHECK(s.name(1) == "a1");
  CHECK(FinSet().empty());
}
