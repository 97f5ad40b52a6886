#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <doctest.h>

#include "idkit/linsolve.hpp"
#include "idkit/lp.hpp"
#include "idkit/polyhedron.hpp"
#include "idkit/rng.hpp"
#include "test_util.hpp"

using namespace idkit;

namespace {

Polyhedron orthant2() {
  return make_polyhedron(M(2, {{"-1", "0"}, {"0", "-1"}}), V({"0", "0"}));
}

// rows: x1<=1, x2<=1, -x1<=0, -x2<=0
Polyhedron square2() {
  return make_polyhedron(M(2, {{"1", "0"}, {"0", "1"}, {"-1", "0"}, {"0", "-1"}}),
                         V({"1", "1", "0", "0"}));
}

Polyhedron empty2() {
  return make_polyhedron(M(2, {{"1", "0"}, {"-1", "0"}}), V({"-1", "0"}));
}

GenCone rays(std::initializer_list<std::initializer_list<std::string>> rs) {
  GenCone C;
  for (const auto& r : rs) C.ray_gens.push_back(V(r));
  return C;
}

Polyhedron random_boxed(Sampler& rng, std::size_t n, std::size_t extra) {
  Mat A(n);
  Vec b;
  for (std::size_t j = 0; j < n; ++j) {
    A.add_row(unit_vec(n, j));
    b.e.push_back(Rat(3));
    A.add_row(-unit_vec(n, j));
    b.e.push_back(Rat(3));
  }
  for (std::size_t i = 0; i < extra; ++i) {
    Vec row(n);
    bool all_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      row.e[j] = Rat(rng.int_in(-3, 3));
      if (row.e[j] != 0) all_zero = false;
    }
    if (all_zero) row.e[0] = Rat(1);
    A.add_row(row);
    b.e.push_back(Rat(rng.int_in(-2, 5)));
  }
  return make_polyhedron(std::move(A), std::move(b));
}

}  // namespace

TEST_CASE("polyhedron construction guards") {
  CHECK_THROWS_AS(make_polyhedron(M(2, {{"1", "0"}}), V({"1", "2"})), DimensionMismatch);
  CHECK_THROWS_AS(make_polyhedron(M(2, {{"0", "0"}}), V({"-1"})), ParseError);
  CHECK_NOTHROW(make_polyhedron(M(2, {{"0", "0"}}), V({"0"})));
}

TEST_CASE("active sets") {
  const auto Q = orthant2();
  CHECK(active_set(Q, V({"0", "0"})) == std::vector<std::size_t>{0, 1});
  CHECK(active_set(Q, V({"0", "3"})) == std::vector<std::size_t>{0});
  CHECK(active_set(square2(), V({"1/2", "1/2"})).empty());
  CHECK_THROWS_AS(active_set(Q, V({"-1", "0"})), PointNotInSet);
}

TEST_CASE("normal and tangent cones") {
  const auto Q = orthant2();
  auto N = normal_cone(Q, V({"0", "0"}));
  REQUIRE(N.ray_gens.size() == 2);
  CHECK(N.ray_gens[0] == V({"-1", "0"}));
  CHECK(N.ray_gens[1] == V({"0", "-1"}));
  CHECK(N.conv_gens.empty());
  CHECK(normal_cone(Q, V({"1", "1"})).ray_gens.empty());

  auto Nc = normal_cone(square2(), V({"1", "1"}));
  CHECK(cone_member(V({"1", "1"}), Nc));
  CHECK(cone_member(V({"1", "0"}), Nc));
  CHECK(!cone_member(V({"-1", "0"}), Nc));

  auto T = tangent_cone(Q, V({"0", "0"}));
  CHECK(T.nrows() == 2);
  CHECK(poly_contains(T, V({"2", "5"})));
  CHECK(!poly_contains(T, V({"-1", "0"})));
  auto T1 = tangent_cone(Q, V({"0", "3"}));
  CHECK(T1.nrows() == 1);
  CHECK(poly_contains(T1, V({"0", "-7"})));
  CHECK(tangent_cone(square2(), V({"1/2", "1/2"})).nrows() == 0);
}

TEST_CASE("cone membership") {
  const auto C = rays({{"-1", "0"}, {"0", "-1"}});
  CHECK(cone_member(V({"-1", "0"}), C));
  CHECK(!cone_member(V({"1", "1"}), C));
  CHECK(cone_member(V({"-1", "-2"}), C));
  CHECK(cone_member(V({"0", "0"}), C));
  GenCone trivial;
  CHECK(cone_member(V({"0", "0"}), trivial));
  CHECK(!cone_member(V({"1", "0"}), trivial));
  GenCone mixed;  // segment from (1,0) to (2,0) plus ray (0,1)
  mixed.conv_gens = {V({"1", "0"}), V({"2", "0"})};
  mixed.ray_gens = {V({"0", "1"})};
  CHECK(cone_member(V({"3/2", "5"}), mixed));
  CHECK(!cone_member(V({"0", "0"}), mixed));
  CHECK(!cone_member(V({"3", "0"}), mixed));
}

TEST_CASE("relative interior membership") {
  const auto C = rays({{"-1", "0"}, {"0", "-1"}});
  CHECK(relative_interior_member(V({"-1", "-1"}), C));
  CHECK(!relative_interior_member(V({"-1", "0"}), C));
  GenCone trivial;
  CHECK(relative_interior_member(V({"0", "0"}), trivial));
  CHECK(!relative_interior_member(V({"1", "0"}), trivial));
  // Lower-dimensional cone: ri of a single ray is the open ray.
  const auto R = rays({{"1", "1"}});
  CHECK(relative_interior_member(V({"2", "2"}), R));
  CHECK(!relative_interior_member(V({"0", "0"}), R));
  CHECK(!relative_interior_member(V({"1", "2"}), R));
}

TEST_CASE("projection fixtures") {
  CHECK(project(orthant2(), V({"-1", "2"})) == V({"0", "2"}));
  CHECK(project(square2(), V({"2", "2"})) == V({"1", "1"}));
  const auto S = make_polyhedron(M(2, {{"1", "1"}, {"-1", "0"}, {"0", "-1"}}),
                                 V({"1", "0", "0"}));
  CHECK(project(S, V({"1", "1"})) == V({"1/2", "1/2"}));
  CHECK(project(square2(), V({"1/4", "3/4"})) == V({"1/4", "3/4"}));
  CHECK_THROWS_AS(project(empty2(), V({"0", "0"})), EmptyPolyhedron);
}

TEST_CASE("projection budget guard") {
  Mat A(1);
  Vec b;
  for (int i = 0; i < 21; ++i) {
    A.add_row(V({"1"}));
    b.e.push_back(Rat(i));
  }
  CHECK_THROWS_AS(project(Polyhedron{A, b}, V({"0"})), FaceBudgetExceeded);
  CHECK_THROWS_AS(faces_enumerate(Polyhedron{A, b}), FaceBudgetExceeded);
}

TEST_CASE("argmax faces") {
  const auto sq = square2();
  CHECK(face_of_maximizers(sq, V({"1", "0"})).tight == std::vector<std::size_t>{0});
  CHECK(face_of_maximizers(orthant2(), V({"-1", "0"})).tight ==
        std::vector<std::size_t>{0});
  CHECK(face_of_maximizers(sq, V({"0", "0"})).tight.empty());
  CHECK(face_of_maximizers(sq, V({"1", "1"})).tight == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(face_of_maximizers(orthant2(), V({"1", "0"})), Unbounded);
  CHECK_THROWS_AS(face_of_maximizers(empty2(), V({"1", "0"})), EmptyPolyhedron);
}

TEST_CASE("face enumeration counts") {
  CHECK(faces_enumerate(square2()).size() == 9);
  CHECK(faces_enumerate(orthant2()).size() == 4);
  CHECK(faces_enumerate(empty2()).empty());
  const auto point = make_polyhedron(M(1, {{"1"}, {"-1"}}), V({"0", "0"}));
  CHECK(faces_enumerate(point).size() == 1);
}

TEST_CASE("face dimensions") {
  const auto sq = square2();
  std::vector<std::size_t> dims;
  for (const auto& F : faces_enumerate(sq)) dims.push_back(face_dim(sq, F));
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{0, 0, 0, 0, 1, 1, 1, 1, 2});
}

TEST_CASE("prefix projection by elimination") {
  const auto sq = square2();
  const auto p = fm_project_prefix(sq, 1);
  CHECK(poly_contains(p, V({"1/2"})));
  CHECK(poly_contains(p, V({"0"})));
  CHECK(poly_contains(p, V({"1"})));
  CHECK(!poly_contains(p, V({"-1/4"})));
  CHECK(!poly_contains(p, V({"5/4"})));
  const auto e = fm_project_prefix(empty2(), 1);
  CHECK(poly_empty(e));
}

TEST_CASE("elimination matches slice feasibility") {
  Sampler rng(31);
  for (int t = 0; t < 8; ++t) {
    const auto P = random_boxed(rng, 3, 3);
    const auto p = fm_project_prefix(P, 2);
    for (int s = 0; s < 12; ++s) {
      const Vec w = V({rat_format(Rat(rng.int_in(-8, 8)) / 2),
                       rat_format(Rat(rng.int_in(-8, 8)) / 2)});
      Polyhedron slice = P;
      Vec lift(3);
      lift.e[0] = w[0];
      lift.e[1] = w[1];
      slice.A.add_row(V({"1", "0", "0"}));
      slice.b.e.push_back(w[0]);
      slice.A.add_row(V({"-1", "0", "0"}));
      slice.b.e.push_back(-w[0]);
      slice.A.add_row(V({"0", "1", "0"}));
      slice.b.e.push_back(w[1]);
      slice.A.add_row(V({"0", "-1", "0"}));
      slice.b.e.push_back(-w[1]);
      CHECK(poly_contains(p, w) == !poly_empty(slice));
    }
  }
}

TEST_CASE("generated cone to inequalities") {
  const auto C = rays({{"-1", "0"}, {"0", "-1"}});
  const auto H = cone_hrep(C, 2);
  Sampler rng(41);
  for (int s = 0; s < 40; ++s) {
    const Vec v = V({rat_format(Rat(rng.int_in(-4, 4))), rat_format(Rat(rng.int_in(-4, 4)))});
    CHECK(poly_contains(H, v) == cone_member(v, C));
  }
  GenCone mixed;
  mixed.conv_gens = {V({"1", "0"}), V({"2", "0"})};
  mixed.ray_gens = {V({"0", "1"})};
  const auto Hm = cone_hrep(mixed, 2);
  for (int s = 0; s < 40; ++s) {
    const Vec v = V({rat_format(Rat(rng.int_in(-6, 6)) / 2),
                     rat_format(Rat(rng.int_in(-6, 6)) / 2)});
    CHECK(poly_contains(Hm, v) == cone_member(v, mixed));
  }
}

TEST_CASE("normal cone graph pieces") {
  const auto R = make_polyhedron(M(1, {{"-1"}}), V({"0"}));
  const auto G = normal_cone_graph(R);
  REQUIRE(G.pieces.size() == 2);
  int with_origin_negv = 0, with_posx_zerov = 0;
  for (const auto& piece : G.pieces) {
    if (poly_contains(piece, V({"0", "-2"}))) ++with_origin_negv;
    if (poly_contains(piece, V({"3", "0"}))) ++with_posx_zerov;
    CHECK(!poly_contains(piece, V({"1", "-1"})));
    CHECK(!poly_contains(piece, V({"-1", "0"})));
  }
  CHECK(with_origin_negv == 1);
  CHECK(with_posx_zerov == 1);
}

TEST_CASE("pieces through a graph point project to the stable sets") {
  const auto R = make_polyhedron(M(1, {{"-1"}}), V({"0"}));
  const auto G = normal_cone_graph(R);

  auto in_union = [](const std::vector<Polyhedron>& u, const Vec& x) {
    for (const auto& P : u)
      if (poly_contains(P, x)) return true;
    return false;
  };

  auto u1 = ppm_minimal_identifiable(G, V({"0"}), V({"-1"}));
  CHECK(u1.size() == 1);
  CHECK(in_union(u1, V({"0"})));
  CHECK(!in_union(u1, V({"1"})));
  CHECK(!in_union(u1, V({"-1"})));

  auto u2 = ppm_minimal_identifiable(G, V({"0"}), V({"0"}));
  CHECK(u2.size() == 2);
  CHECK(in_union(u2, V({"0"})));
  CHECK(in_union(u2, V({"5"})));
  CHECK(!in_union(u2, V({"-1/2"})));

  PiecewisePolyhedralMapping constant;
  constant.n = 2;
  constant.m = 1;
  Polyhedron piece;
  piece.A = Mat(3);
  piece.A.add_row(V({"0", "0", "1"}));
  piece.b.e.push_back(Rat(0));
  piece.A.add_row(V({"0", "0", "-1"}));
  piece.b.e.push_back(Rat(0));
  constant.pieces.push_back(piece);
  auto u3 = ppm_minimal_identifiable(constant, V({"7", "-2"}), V({"0"}));
  CHECK(u3.size() == 1);
  CHECK(in_union(u3, V({"-100", "100"})));

  CHECK_THROWS_AS(ppm_minimal_identifiable(G, V({"1"}), V({"1"})), PairNotInGraph);
}

TEST_CASE("projection properties on random polytopes") {
  Sampler rng(53);
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 2 + rng.below(2);
    const auto Q = random_boxed(rng, n, 2);
    if (poly_empty(Q)) continue;
    const auto faces = faces_enumerate(Q);
    Vec prev_z, prev_x;
    for (int s = 0; s < 6; ++s) {
      Vec z(n);
      for (std::size_t j = 0; j < n; ++j) z.e[j] = Rat(rng.int_in(-12, 12)) / Rat(2);
      const Vec x = project(Q, z, faces);
      CHECK(poly_contains(Q, x));
      CHECK(cone_member(z - x, normal_cone(Q, x)));
      if (s > 0) CHECK(norm_sq(x - prev_x) <= norm_sq(z - prev_z));
      prev_z = z;
      prev_x = x;
    }
  }
}

TEST_CASE("argmax face agrees with enumeration oracle") {
  Sampler rng(61);
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 2 + rng.below(2);
    const auto Q = random_boxed(rng, n, 2);
    if (poly_empty(Q)) continue;
    const auto faces = faces_enumerate(Q);
    for (int s = 0; s < 4; ++s) {
      Vec v(n);
      for (std::size_t j = 0; j < n; ++j) v.e[j] = Rat(rng.int_in(-3, 3));
      const auto F = face_of_maximizers(Q, v);
      // Oracle: the largest face whose relative interior maximizes <v, .>,
      // found by scanning every enumerated face for constant optimal value.
      const auto r = lp_solve(v, Q.A, Q.b, true);
      REQUIRE(r.status == LPStatus::OPTIMAL);
      std::vector<std::size_t> best;
      bool found = false;
      for (const auto& G : faces) {
        const auto FP = face_polyhedron(Q, G);
        const auto hi = lp_solve(v, FP.A, FP.b, true);
        if (hi.status != LPStatus::OPTIMAL || hi.optimum != r.optimum) continue;
        const auto lo = lp_solve(v, FP.A, FP.b, false);
        if (lo.status != LPStatus::OPTIMAL || lo.optimum != r.optimum) continue;
        if (!found || G.tight.size() < best.size()) {
          best = G.tight;
          found = true;
        }
      }
      REQUIRE(found);
      CHECK(F.tight == best);
    }
  }
}
