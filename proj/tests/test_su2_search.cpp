#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "generators.hpp"
#include "slopecert/presentation.hpp"
#include "slopecert/su2_search.hpp"

using namespace slopecert;

namespace {

// Ambient central differences, projected to the tangent space.
std::vector<Quaternion> fd_gradient(const GroupPresentation& pres, const QuaternionAssignment& a, double h = 1e-5) {
  std::vector<Quaternion> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double g[4];
    for (int c = 0; c < 4; ++c) {
      auto plus = a, minus = a;
      double* pp[4] = {&plus[i].w, &plus[i].x, &plus[i].y, &plus[i].z};
      double* mm[4] = {&minus[i].w, &minus[i].x, &minus[i].y, &minus[i].z};
      *pp[c] += h;
      *mm[c] -= h;
      g[c] = (defect(pres, plus) - defect(pres, minus)) / (2 * h);
    }
    out[i] = project_tangent(a[i], {g[0], g[1], g[2], g[3]});
  }
  return out;
}

double relative_error(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]).norm_squared();
    den += a[i].norm_squared();
  }
  return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

}  // namespace

TEST_CASE("quaternion algebra") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(i * i == Quaternion{-1, 0, 0, 0});
  CHECK((i * j - j * i).norm() == doctest::Approx(2.0));
  for (int n = 0; n < 100; ++n) {
    const auto a = random_assignment(2, 3, static_cast<std::uint64_t>(n));
    CHECK((a[0] * a[1]).norm() == doctest::Approx(1.0));
    CHECK((a[0] * a[0].conj() - Quaternion::identity()).norm() < 1e-12);
  }
  CHECK_THROWS_AS((Quaternion{0, 0, 0, 0}).normalized(), std::domain_error);
  CHECK(std::abs(exp_i(std::numbers::pi / 2).x - 1.0) < 1e-15);
}

TEST_CASE("defect examples") {
  const auto lens5 = lens_presentation(5);
  CHECK(defect(lens5, {exp_i(2 * std::numbers::pi / 5)}) < 1e-24);
  CHECK(defect(lens5, {Quaternion::j()}) == doctest::Approx(2.0));
  const auto tref = surgery_presentation(2, 3, Slope(1, 1));
  CHECK(defect(tref, {Quaternion::identity(), Quaternion::identity()}) == 0.0);
  CHECK_THROWS_AS(defect(tref, {Quaternion::identity()}), std::invalid_argument);
  CHECK(evaluate_word({1, -1}, {Quaternion::i()}) == Quaternion::identity());
  CHECK(evaluate_word({1, 2}, {Quaternion::i(), Quaternion::j()}) == Quaternion::k());
  CHECK(evaluate_word({}, {Quaternion::i()}) == Quaternion::identity());
}

TEST_CASE("gradient matches central differences") {
  const std::vector<GroupPresentation> samples{
      lens_presentation(3), lens_presentation(5), surgery_presentation(2, 3, Slope(1, 1)),
      surgery_presentation(2, 3, Slope(5, 1)), surgery_presentation(2, 5, Slope(7, 2)),
      GroupPresentation(3, {{1, 2, -3, -1}, {3, 3, 2}, {-2, -2, 1, 3, 3}})};
  for (int n = 0; n < 120; ++n) {
    const auto& pres = samples[static_cast<std::size_t>(n) % samples.size()];
    const auto point = random_assignment(pres.generator_count, 17, static_cast<std::uint64_t>(n));
    const auto grad = defect_gradient(pres, point);
    CHECK(relative_error(grad, fd_gradient(pres, point)) < 1e-5);
    for (std::size_t i = 0; i < grad.size(); ++i) CHECK(std::abs(dot(grad[i], point[i])) < 1e-10);
  }
}

TEST_CASE("gradient vanishes at a representation") {
  const auto lens5 = lens_presentation(5);
  const auto grad = defect_gradient(lens5, {exp_i(2 * std::numbers::pi / 5)});
  CHECK(grad[0].norm() < 1e-8);
}

TEST_CASE("irreducibility test") {
  CHECK(is_irreducible({Quaternion::i(), Quaternion::j()}, 0.5));
  CHECK_FALSE(is_irreducible({Quaternion::i(), Quaternion::i()}, 0.5));
  CHECK_FALSE(is_irreducible({Quaternion::j()}, 1e-9));
  CHECK(commutator_margin({Quaternion::i(), Quaternion::j()}) == doctest::Approx(2.0));
  CHECK(commutator_margin({}) == 0.0);
}

TEST_CASE("image heuristic") {
  CHECK(classify_image({Quaternion::i(), exp_i(0.3)}, 1e-2) == "abelian");
  CHECK(classify_image({Quaternion::i(), Quaternion::j()}, 1e-2) == "binary_dihedral");
  // A circle element and an element orthogonal to its axis.
  CHECK(classify_image({exp_i(0.7), Quaternion{0, 0, std::cos(0.4), std::sin(0.4)}}, 1e-2) == "binary_dihedral");
  // Two rotations about skew axes by non-right angles.
  const Quaternion a{std::cos(0.5), std::sin(0.5), 0, 0};
  const Quaternion b{std::cos(0.5), 0, std::sin(0.5), 0};
  CHECK(classify_image({a, b}, 1e-2) == "non_binary_dihedral");
}

TEST_CASE("random starting points") {
  const auto a = random_assignment(3, 5, 7);
  CHECK(a == random_assignment(3, 5, 7));
  CHECK_FALSE(a == random_assignment(3, 5, 8));
  CHECK_FALSE(a == random_assignment(3, 6, 7));
  for (const auto& q : a) CHECK(std::abs(q.norm() - 1.0) < 1e-12);
  // Uniform on S^3: each coordinate has mean 0 and variance 1/4.
  double mean = 0.0, sq = 0.0;
  const int n = 4000;
  for (int r = 0; r < n; ++r) {
    const Quaternion q = random_assignment(1, 99, static_cast<std::uint64_t>(r))[0];
    mean += q.z;
    sq += q.z * q.z;
  }
  CHECK(std::abs(mean / n) < 0.03);
  CHECK(std::abs(sq / n - 0.25) < 0.02);
}

TEST_CASE("descent lowers the defect and keeps unit norm") {
  const auto pres = surgery_presentation(2, 3, Slope(1, 1));
  for (std::uint64_t r = 0; r < 20; ++r) {
    const auto start = random_assignment(2, 4, r);
    const auto end = minimize_defect(pres, start, 1e-10, 2000);
    CHECK(defect(pres, end) <= defect(pres, start));
    for (const auto& q : end) CHECK(std::abs(q.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("search outcomes") {
  SearchOptions opts;
  const auto hit = search_irreducible(surgery_presentation(2, 3, Slope(1, 1)), opts);
  REQUIRE(hit.found);
  CHECK(hit.defect < 1e-8);
  CHECK(hit.irreducibility_margin > opts.eps);
  CHECK(hit.seed == 1);
  CHECK(hit.restarts_used >= 1);
  CHECK(hit.image_heuristic == "non_binary_dihedral");

  const auto lens = search_irreducible(lens_presentation(5), opts);
  CHECK_FALSE(lens.found);
  CHECK_FALSE(lens.assignment.has_value());
  CHECK(lens.restarts_used == opts.restarts);

  opts.restarts = 0;
  CHECK_THROWS_AS(search_irreducible(lens_presentation(5), opts), std::invalid_argument);
  opts.restarts = 5;
  opts.tol = 0.0;
  CHECK_THROWS_AS(search_irreducible(lens_presentation(5), opts), std::invalid_argument);
  opts.tol = 1e-10;
  opts.eps = -1.0;
  CHECK_THROWS_AS(search_irreducible(lens_presentation(5), opts), std::invalid_argument);
}

TEST_CASE("search is reproducible") {
  SearchOptions opts;
  opts.seed = 42;
  const auto pres = surgery_presentation(2, 3, Slope(7, 2));
  const auto a = search_irreducible(pres, opts);
  const auto b = search_irreducible(pres, opts);
  CHECK(a.found == b.found);
  CHECK(a.defect == b.defect);
  CHECK(a.restarts_used == b.restarts_used);
  CHECK(a.assignment == b.assignment);
}

TEST_CASE("trefoil surgeries with hyperbolic-type base orbifolds carry irreducibles") {
  SearchOptions opts;
  for (std::int64_t q = 1; q <= 3; ++q)
    for (std::int64_t p = 1; p <= 12; ++p) {
      if (std::gcd(p, q) != 1 || std::llabs(6 * q - p) < 2) continue;
      const auto pres = surgery_presentation(2, 3, Slope(p, q));
      const auto res = search_irreducible(pres, opts);
      INFO("slope ", p, "/", q);
      REQUIRE(res.found);
      CHECK(res.defect < 1e-8);
      // Each relator individually within sqrt(tol).
      for (const auto& w : pres.relators)
        CHECK((evaluate_word(w, *res.assignment) - Quaternion::identity()).norm() <= std::sqrt(opts.tol));
    }
}
