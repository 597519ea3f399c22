#include "slopecert/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "slopecert/poly_text.hpp"

namespace slopecert {

GroupPresentation::GroupPresentation(int generator_count_, std::vector<Word> relators_)
    : generator_count(generator_count_), relators(std::move(relators_)) {
  if (generator_count < 0) throw std::invalid_argument("generator count must be nonnegative");
  for (const auto& w : relators)
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > generator_count)
        throw std::invalid_argument("relator letter " + std::to_string(letter) + " out of range");
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word power(const Word& w, std::int64_t n) {
  const Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (std::int64_t i = 0; i < std::llabs(n); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

TorusPeripheral torus_peripheral(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1)
    throw std::invalid_argument("torus knot parameters must be positive and coprime");
  std::int64_t r = 0;
  while ((r * a - 1) % b != 0) ++r;
  const std::int64_t s = (r * a - 1) / b;
  const Word x{1};
  const Word y{2};
  TorusPeripheral per;
  per.r = r;
  per.s = s;
  per.meridian = concat(power(x, -s), power(y, r));
  per.longitude = concat(power(x, a), power(per.meridian, -a * b));
  return per;
}

GroupPresentation surgery_presentation(std::int64_t a, std::int64_t b, const Slope& slope, bool unfilled) {
  const TorusPeripheral per = torus_peripheral(a, b);
  std::vector<Word> relators;
  relators.push_back(concat(power(Word{1}, a), power(Word{2}, -b)));
  if (!unfilled)
    relators.push_back(concat(power(per.meridian, slope.p()), power(per.longitude, slope.q())));
  GroupPresentation pres(2, std::move(relators));

  const std::vector<BigInt> expected{unfilled ? BigInt(0) : BigInt(slope.p())};
  if (abelianization_smith(pres) != expected)
    throw std::logic_error("surgery presentation has the wrong abelianization");
  return pres;
}

GroupPresentation lens_presentation(std::int64_t p) {
  if (p < 1) throw std::invalid_argument("lens presentation needs p >= 1");
  return GroupPresentation(1, {power(Word{1}, p)});
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Reduces m in place to a diagonal whose entries divide one another.
std::vector<BigInt> smith_diagonal(Matrix m, std::size_t rows, std::size_t cols) {
  std::vector<BigInt> diag;
  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    while (true) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || boost::multiprecision::abs(m[i][j]) <
                                                  boost::multiprecision::abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;  // remaining block is zero
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt f = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt f = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with a non-multiple into the pivot row.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(boost::multiprecision::abs(m[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<BigInt> abelianization_smith(const GroupPresentation& pres) {
  const auto cols = static_cast<std::size_t>(pres.generator_count);
  const std::size_t rows = pres.relators.size();
  Matrix m(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (int letter : pres.relators[i]) m[i][static_cast<std::size_t>(std::abs(letter) - 1)] += letter > 0 ? 1 : -1;

  std::vector<BigInt> diag = smith_diagonal(std::move(m), rows, cols);
  std::vector<BigInt> factors;
  for (const auto& d : diag)
    if (d != 1) factors.push_back(d);
  for (std::size_t k = diag.size(); k < cols; ++k) factors.emplace_back(0);
  if (factors.empty()) factors.emplace_back(1);
  return factors;
}

GroupPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int gens = -1;
  std::vector<Word> relators;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword) || keyword[0] == '#') continue;
    if (keyword == "gens") {
      if (gens >= 0) throw ParseError("duplicate 'gens' line", line_start);
      if (!(tokens >> gens) || gens < 0) throw ParseError("expected a generator count", line_start);
      continue;
    }
    if (keyword != "rel") throw ParseError("unknown keyword '" + keyword + "'", line_start);
    if (gens < 0) throw ParseError("'rel' before 'gens'", line_start);
    Word w;
    std::string tok;
    std::size_t column = line.find(keyword) + keyword.size();
    while (tokens >> tok) {
      column = line.find(tok, column);
      const std::size_t at = line_start + column;
      column += tok.size();
      if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
        throw ParseError("bad letter '" + tok + "'", at);
      int index = 0;
      try {
        std::size_t used = 0;
        index = std::stoi(tok.substr(1), &used);
        if (used != tok.size() - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("bad letter '" + tok + "'", at);
      }
      if (index < 1 || index > gens) throw ParseError("generator index out of range in '" + tok + "'", at);
      w.push_back(tok[0] == 'x' ? index : -index);
    }
    relators.push_back(std::move(w));
  }
  if (gens < 0) throw ParseError("missing 'gens' line", 0);
  return GroupPresentation(gens, std::move(relators));
}

GroupPresentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string format_presentation(const GroupPresentation& pres) {
  std::ostringstream out;
  out << "gens " << pres.generator_count << '\n';
  for (const auto& w : pres.relators) {
    out << "rel";
    for (int letter : w) out << ' ' << (letter > 0 ? 'x' : 'X') << std::abs(letter);
    out << '\n';
  }
  return out.str();
}

}  // namespace slopecert
