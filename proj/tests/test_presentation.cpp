#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numeric>

#include "generators.hpp"
#include "slopecert/poly_text.hpp"
#include "slopecert/presentation.hpp"

using namespace slopecert;

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

BigInt minor_det(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix sub(rows.size(), std::vector<BigInt>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[rows[i]][cols[j]];
  return testgen::bareiss_determinant(sub);
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors d_k = gcd of k x k minors,
// in the same normalization as abelianization_smith.
std::vector<BigInt> determinantal_factors(const Matrix& m, std::size_t rows, std::size_t cols) {
  std::vector<BigInt> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(minor_det(m, r, c)));
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < d.size(); ++k)
    if (d[k] / d[k - 1] != 1) out.push_back(d[k] / d[k - 1]);
  for (std::size_t k = d.size() - 1; k < cols; ++k) out.emplace_back(0);
  if (out.empty()) out.emplace_back(1);
  return out;
}

Word word_with_exponents(const std::vector<BigInt>& row) {
  Word w;
  for (std::size_t g = 0; g < row.size(); ++g) {
    const int gen = static_cast<int>(g) + 1;
    const int e = row[g].convert_to<int>();
    for (int k = 0; k < std::abs(e); ++k) w.push_back(e > 0 ? gen : -gen);
  }
  // A conjugating letter and a cancelling pair do not change the exponent sums.
  if (!row.empty()) {
    w.insert(w.begin(), 1);
    w.push_back(-1);
  }
  return w;
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_NOTHROW(GroupPresentation(2, {{1, -2}}));
  CHECK_THROWS_AS(GroupPresentation(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(GroupPresentation(2, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(GroupPresentation(-1, {}), std::invalid_argument);
}

TEST_CASE("word helpers") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce({1, -1, 1}) == Word{1});
  CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(power({1, 2}, 2) == Word{1, 2, 1, 2});
  CHECK(power({1, 2}, -1) == Word{-2, -1});
  CHECK(power({1}, 0).empty());
  CHECK(concat({1, 2}, {-2, 3}) == Word{1, 3});
  for (int i = 0; i < 200; ++i) {
    Word w;
    const auto n = testgen::uniform(0, 10);
    for (int k = 0; k < n; ++k) {
      int letter = static_cast<int>(testgen::uniform(1, 3));
      if (testgen::uniform(0, 1)) letter = -letter;
      w.push_back(letter);
    }
    CHECK(free_reduce(concat(w, inverse(w))).empty());
    CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
  }
}

TEST_CASE("torus peripheral system") {
  for (std::int64_t a = 2; a <= 7; ++a)
    for (std::int64_t b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const TorusPeripheral per = torus_peripheral(a, b);
      CHECK(per.r * a - per.s * b == 1);
      CHECK(per.r >= 0);
      CHECK(per.r < b);
    }
  CHECK_THROWS_AS(torus_peripheral(2, 4), std::invalid_argument);
}

TEST_CASE("abelianization examples") {
  CHECK(abelianization_smith(GroupPresentation(1, {{1, 1, 1, 1, 1}})) == std::vector<BigInt>{5});
  CHECK(abelianization_smith(GroupPresentation(2, {{1, 1, 1, 1, 1, -2, -2}})) == std::vector<BigInt>{0});
  CHECK(abelianization_smith(GroupPresentation(2, {})) == std::vector<BigInt>{0, 0});
  CHECK(abelianization_smith(lens_presentation(5)) == std::vector<BigInt>{5});
  CHECK(abelianization_smith(lens_presentation(3)) == std::vector<BigInt>{3});
  CHECK(abelianization_smith(lens_presentation(1)) == std::vector<BigInt>{1});
  CHECK(abelianization_smith(GroupPresentation(2, {{1, 1}, {2, 2, 2, 2}})) == std::vector<BigInt>{2, 4});
  CHECK(abelianization_smith(GroupPresentation(2, {{1, 1}, {2, 2, 2}})) == std::vector<BigInt>{6});
  CHECK_THROWS_AS(lens_presentation(0), std::invalid_argument);
}

TEST_CASE("Smith form matches determinantal divisors") {
  for (int i = 0; i < 300; ++i) {
    const auto rows = static_cast<std::size_t>(testgen::uniform(0, 3));
    const auto cols = static_cast<std::size_t>(testgen::uniform(1, 3));
    Matrix m(rows, std::vector<BigInt>(cols));
    for (auto& row : m)
      for (auto& x : row) x = testgen::uniform(-6, 6);
    std::vector<Word> relators;
    for (const auto& row : m) relators.push_back(word_with_exponents(row));
    const GroupPresentation pres(static_cast<int>(cols), relators);
    CHECK(abelianization_smith(pres) == determinantal_factors(m, rows, cols));
  }
}

TEST_CASE("surgery presentations") {
  CHECK(abelianization_smith(surgery_presentation(2, 3, Slope(5, 1))) == std::vector<BigInt>{5});
  CHECK(abelianization_smith(surgery_presentation(2, 3, Slope(1, 1))) == std::vector<BigInt>{1});
  CHECK(abelianization_smith(surgery_presentation(5, 2, Slope(0, 1), true)) == std::vector<BigInt>{0});
  const auto pres = surgery_presentation(2, 3, Slope(7, 2));
  CHECK(pres.generator_count == 2);
  CHECK(pres.relators.size() == 2);
  CHECK(pres.relators[0] == Word{1, 1, -2, -2, -2});
  CHECK(surgery_presentation(2, 3, Slope(1, 1), true).relators.size() == 1);
  CHECK_THROWS_AS(surgery_presentation(2, 4, Slope(1, 1)), std::invalid_argument);

  for (std::int64_t a = 2; a <= 7; ++a)
    for (std::int64_t b = a + 1; b <= 7; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t p = 0; p <= 20; ++p)
        for (std::int64_t q = 1; q <= 20; ++q)
          if (std::gcd(p, q) == 1)
            CHECK(abelianization_smith(surgery_presentation(a, b, Slope(p, q))) == std::vector<BigInt>{BigInt(p)});
    }
}

TEST_CASE("presentation text format") {
  const GroupPresentation pres = parse_presentation("# trefoil\ngens 2\n\nrel x1 x1 X2 X2 X2\nrel x1 x2\n");
  CHECK(pres.generator_count == 2);
  CHECK(pres.relators == std::vector<Word>{{1, 1, -2, -2, -2}, {1, 2}});
  CHECK(format_presentation(pres) == "gens 2\nrel x1 x1 X2 X2 X2\nrel x1 x2\n");
  for (std::int64_t p = 1; p <= 9; ++p) {
    const auto s = surgery_presentation(2, 5, Slope::reduced(p, 2));
    CHECK(parse_presentation(format_presentation(s)) == s);
  }
  CHECK(parse_presentation("gens 0\n").generator_count == 0);

  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("rel x1\n") == 0);
  CHECK(position_of("gens 2\nrel x1 x3\n") == 14);
  CHECK(position_of("gens 2\nrel x1 y2\n") == 14);
  CHECK(position_of("gens 2\nrel x1 x\n") == 14);
  CHECK(position_of("gens 2\nrel x1 x1z\n") == 14);
  CHECK(position_of("gens two\n") == 0);
  CHECK(position_of("gens 1\ngens 1\n") == 7);
  CHECK(position_of("gens 1\nfoo x1\n") == 7);
}

TEST_CASE("presentation files") {
  const std::string path = "presentation_file_test.txt";
  {
    std::ofstream out(path);
    out << "gens 1\nrel x1 x1 x1\n";
  }
  CHECK(abelianization_smith(read_presentation_file(path)) == std::vector<BigInt>{3});
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_presentation_file("/nonexistent/presentation.txt"), std::runtime_error);
}
