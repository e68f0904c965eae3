#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "builders.hpp"
#include "qhh/alt.hpp"
#include "qhh/generator.hpp"
#include "qhh/oracle.hpp"

using namespace qhh;

namespace {

int class_of_pair(const NeatClassTable& table, const PathBasis& b, const Path& alpha,
                  const Path& beta) {
  auto i = b.index_of(alpha);
  auto j = b.index_of(beta);
  REQUIRE(i.has_value());
  REQUIRE(j.has_value());
  for (std::size_t id = 0; id < table.pairs.size(); ++id)
    if (table.pairs[id] == std::pair{*i, *j}) return table.class_of[id];
  FAIL("pair not in B⊙B");
  return -1;
}

}  // namespace

TEST_CASE("neatness of individual pairs") {
  auto point = fixtures::point();
  auto pb = enumerate_basis(point);
  CHECK(is_neat(point->quiver, pb, trivial_path(0), trivial_path(0)));

  auto a2 = fixtures::a2();
  auto ab = enumerate_basis(a2);
  int v = a2->quiver.find_vertex("v");
  CHECK_FALSE(is_neat(a2->quiver, ab, trivial_path(v), trivial_path(v)));

  auto z7 = fixtures::z7_crown();
  auto zb = enumerate_basis(z7);
  Path alpha = fixtures::walk(z7->quiver, {"a3", "a4", "a5", "a6", "a0", "a1"});
  Path beta = fixtures::walk(z7->quiver, {"a2"});
  CHECK(is_neat(z7->quiver, zb, alpha, beta));
}

TEST_CASE("neat classes of the Z7 crown") {
  auto vp = fixtures::z7_crown();
  auto b = enumerate_basis(vp);
  auto table = neat_classes(vp, b);
  CHECK(table.r == 2);
  CHECK(table.sym == 0);
  CHECK(dim_hom_da_a(table) == 2);
  for (long p : {0L, 2L, 3L, 7L}) CHECK(dim_alt(table, CharSpec::of(p)) == 1);

  const Quiver& q = vp->quiver;
  // the three listed representatives fall into one class
  int c1 = class_of_pair(table, b, fixtures::walk(q, {"a1", "a2", "a3"}),
                         fixtures::walk(q, {"a4", "a5", "a6", "a0"}));
  int c2 = class_of_pair(table, b, fixtures::walk(q, {"a2", "a3", "a4"}),
                         fixtures::walk(q, {"a5", "a6", "a0", "a1"}));
  int c3 = class_of_pair(table, b, fixtures::walk(q, {"a6", "a0", "a1", "a2"}),
                         fixtures::walk(q, {"a3", "a4", "a5"}));
  CHECK(c1 == c2);
  CHECK(c2 == c3);
  int c4 = class_of_pair(table, b, fixtures::walk(q, {"a3", "a4", "a5", "a6", "a0", "a1"}),
                         fixtures::walk(q, {"a2"}));
  CHECK(c4 != c1);
  CHECK(table.classes[c1].neat);
  CHECK(table.classes[c4].neat);
  // the flip swaps the two neat classes
  CHECK(table.classes[c1].flip_class == c4);
  CHECK(table.classes[c4].flip_class == c1);
}

TEST_CASE("neat classes of the point and of A2") {
  auto point = fixtures::point();
  auto table = neat_classes(point, enumerate_basis(point));
  CHECK(table.r == 1);
  CHECK(table.sym == 1);
  CHECK(dim_hom_da_a(table) == 1);
  CHECK(dim_alt(table, CharSpec::of(0)) == 0);
  CHECK(dim_alt(table, CharSpec::of(2)) == 1);

  auto a2 = fixtures::a2();
  auto t2 = neat_classes(a2, enumerate_basis(a2));
  CHECK(t2.r == 0);
  CHECK(dim_hom_da_a(t2) == 0);
  CHECK(dim_alt(t2, CharSpec::of(0)) == 0);
}

TEST_CASE("neat classes of the crown family are all symmetric") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 2; m <= 4; ++m) {
      auto vp = crown_presentation(n, m);
      auto b = enumerate_basis(vp);
      auto table = neat_classes(vp, b);
      CHECK(table.r == m - 1);
      CHECK(table.sym == m - 1);
      CHECK(dim_alt(table, CharSpec::of(0)) == 0);
      CHECK(dim_alt(table, CharSpec::of(2)) == m - 1);
    }
  // representatives (γ^{m-1}β, a_0 γ^i) for the n = 2, m = 3 crown: walking
  // γ^{m-1}β means β first, then the full cycle m-1 times
  auto vp = crown_presentation(2, 3);
  auto b = enumerate_basis(vp);
  auto table = neat_classes(vp, b);
  const Quiver& q = vp->quiver;
  Path left = fixtures::walk(q, {"a1", "a0", "a1", "a0", "a1"});
  Path right0 = fixtures::walk(q, {"a0"});
  Path right1 = fixtures::walk(q, {"a0", "a1", "a0"});
  REQUIRE(b.contains(left));
  int k0 = class_of_pair(table, b, left, right0);
  int k1 = class_of_pair(table, b, left, right1);
  CHECK(k0 != k1);
  CHECK(table.classes[k0].neat);
  CHECK(table.classes[k1].neat);
  CHECK(table.classes[k0].flip_class == k0);
  CHECK(table.classes[k1].flip_class == k1);
}

TEST_CASE("2-nilpotent loop has the two symmetric classes") {
  auto vp = fixtures::loop_aa();
  auto table = neat_classes(vp, enumerate_basis(vp));
  CHECK(table.r == 2);
  CHECK(table.sym == 2);
  CHECK(dim_alt(table, CharSpec::of(0)) == 0);
  CHECK(dim_alt(table, CharSpec::of(2)) == 2);
  CHECK(dim_alt(table, CharSpec::of(3)) == 0);
}

TEST_CASE("classes respect circuits and the flip is an involution") {
  PresentationGenerator gen(GenConfig{.seed = 53});
  for (int i = 0; i < 50; ++i) {
    auto vp = gen.next();
    for (const auto& component : connected_components(vp).components) {
      auto b = enumerate_basis(component);
      auto table = neat_classes(component, b);  // construction asserts both
      CHECK((table.r - table.sym) % 2 == 0);
      long r_by_circuit = 0;
      std::set<CircuitKey> keys;
      for (const auto& cls : table.classes)
        if (cls.neat) {
          ++r_by_circuit;
          keys.insert(cls.circuit);
        }
      CHECK(r_by_circuit == table.r);
    }
  }
}

TEST_CASE("psi matrices") {
  auto point = fixtures::point();
  auto pb = enumerate_basis(point);
  auto pt = neat_classes(point, pb);
  auto m = psi_matrix(pt, 0, pb);
  CHECK(m.rows() == 1);
  CHECK(m.entry(0, 0) == 1);

  auto vp = fixtures::z7_crown();
  auto b = enumerate_basis(vp);
  auto table = neat_classes(vp, b);
  int non_neat = -1;
  for (int c = 0; c < static_cast<int>(table.classes.size()); ++c) {
    if (!table.classes[c].neat) non_neat = c;
    if (table.classes[c].neat) {
      auto m = psi_matrix(table, c, b);
      // characteristic function: one 1 per member pair
      CHECK(m.nonzeros() == static_cast<long long>(table.classes[c].members.size()));
      for (int r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) CHECK(e.value == 1);
    }
  }
  REQUIRE(non_neat >= 0);
  CHECK_THROWS_AS(psi_matrix(table, non_neat, b), DomainError);

  // each psi_N satisfies every bimodule constraint over the integers, hence
  // over every field
  auto constraints = bimodule_constraint_matrix(vp, b);
  for (int c = 0; c < static_cast<int>(table.classes.size()); ++c) {
    if (!table.classes[c].neat) continue;
    auto psi = psi_matrix(table, c, b);
    std::vector<long long> flat(static_cast<std::size_t>(b.size()) * b.size(), 0);
    for (int r = 0; r < psi.rows(); ++r)
      for (const auto& e : psi.row(r)) flat[static_cast<std::size_t>(r) * b.size() + e.col] = e.value;
    for (int r = 0; r < constraints.rows(); ++r) {
      long long dot = 0;
      for (const auto& e : constraints.row(r)) dot += e.value * flat[e.col];
      REQUIRE(dot == 0);
    }
  }
}

TEST_CASE("neat class count matches the nullspace dimension") {
  PresentationGenerator gen(GenConfig{.max_vertices = 3, .max_arrows = 4, .seed = 59});
  for (int i = 0; i < 25; ++i) {
    auto vp = gen.next();
    for (const auto& component : connected_components(vp).components) {
      auto b = enumerate_basis(component);
      auto table = neat_classes(component, b);
      for (long p : {0L, 2L, 3L}) {
        ExactField f = p == 0 ? ExactField::rationals() : ExactField::prime(p);
        auto dims = hom_and_alt_dims(component, b, f);
        CHECK(dims.hom == table.r);
        CHECK(dims.alt == dim_alt(table, CharSpec::of(p)));
      }
    }
  }
}
