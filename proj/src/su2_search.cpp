#include "slopecert/su2_search.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

namespace slopecert {

namespace {

Quaternion letter_value(int letter, const QuaternionAssignment& a) {
  const Quaternion& g = a[static_cast<std::size_t>(std::abs(letter) - 1)];
  return letter > 0 ? g : g.conj();
}

void require_matching(const GroupPresentation& pres, const QuaternionAssignment& a) {
  if (static_cast<int>(a.size()) != pres.generator_count)
    throw std::invalid_argument("assignment size does not match the generator count");
}

Quaternion retract(const Quaternion& q) { return q.normalized(); }

}  // namespace

Quaternion evaluate_word(const Word& w, const QuaternionAssignment& a) {
  Quaternion acc = Quaternion::identity();
  for (int letter : w) acc = acc * letter_value(letter, a);
  return acc;
}

double defect(const GroupPresentation& pres, const QuaternionAssignment& a) {
  require_matching(pres, a);
  double total = 0.0;
  for (const auto& w : pres.relators) total += (evaluate_word(w, a) - Quaternion::identity()).norm_squared();
  return total;
}

std::vector<Quaternion> defect_gradient(const GroupPresentation& pres, const QuaternionAssignment& a) {
  require_matching(pres, a);
  std::vector<Quaternion> grad(a.size(), Quaternion{0.0, 0.0, 0.0, 0.0});
  std::vector<Quaternion> suffix;
  for (const auto& w : pres.relators) {
    const std::size_t len = w.size();
    // suffix[k] = l_k ... l_{len-1}
    suffix.assign(len + 1, Quaternion::identity());
    for (std::size_t k = len; k-- > 0;) suffix[k] = letter_value(w[k], a) * suffix[k + 1];
    const Quaternion residual = suffix[0] - Quaternion::identity();

    // d|W - 1|^2 = 2 <R, P dl S> = 2 <conj(P) R conj(S), dl>
    Quaternion prefix = Quaternion::identity();
    for (std::size_t k = 0; k < len; ++k) {
      const int letter = w[k];
      const Quaternion g = prefix.conj() * residual * suffix[k + 1].conj();
      auto& slot = grad[static_cast<std::size_t>(std::abs(letter) - 1)];
      slot += (letter > 0 ? g : g.conj()) * 2.0;
      prefix = prefix * letter_value(letter, a);
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) grad[i] = project_tangent(a[i], grad[i]);
  return grad;
}

double commutator_margin(const QuaternionAssignment& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      best = std::max(best, (a[i] * a[j] - a[j] * a[i]).norm());
  return best;
}

bool is_irreducible(const QuaternionAssignment& a, double eps) { return commutator_margin(a) > eps; }

std::string classify_image(const QuaternionAssignment& a, double eps, double tol) {
  if (!is_irreducible(a, eps)) return "abelian";
  auto imag = [](const Quaternion& q) { return Quaternion{0.0, q.x, q.y, q.z}; };
  auto cross = [](const Quaternion& u, const Quaternion& v) {
    return Quaternion{0.0, u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
  };

  // Binary dihedral groups: a circle exp(u t) together with unit pure
  // quaternions orthogonal to u. Candidate axes come from the images.
  std::vector<Quaternion> axes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Quaternion im = imag(a[i]);
    if (im.norm() > tol) axes.push_back(im.normalized());
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Quaternion c = cross(imag(a[i]), imag(a[j]));
      if (c.norm() > tol) axes.push_back(c.normalized());
    }
  }
  for (const auto& u : axes) {
    bool fits = true;
    for (const auto& g : a) {
      const Quaternion im = imag(g);
      const bool on_circle = cross(im, u).norm() < tol;
      const bool off_circle = std::abs(g.w) < tol && std::abs(dot(im, u)) < tol;
      if (!on_circle && !off_circle) {
        fits = false;
        break;
      }
    }
    if (fits) return "binary_dihedral";
  }
  return "non_binary_dihedral";
}

QuaternionAssignment random_assignment(int generators, std::uint64_t seed, std::uint64_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  QuaternionAssignment out;
  out.reserve(static_cast<std::size_t>(generators));
  for (int i = 0; i < generators; ++i) {
    Quaternion q;
    do {
      q = {normal(rng), normal(rng), normal(rng), normal(rng)};
    } while (q.norm_squared() < 1e-12);
    out.push_back(q.normalized());
  }
  return out;
}

QuaternionAssignment minimize_defect(const GroupPresentation& pres, QuaternionAssignment x,
                                     double tol, std::size_t max_iterations) {
  constexpr double kArmijo = 1e-4;
  constexpr double kMinStep = 1e-14;
  constexpr double kMaxStep = 10.0;
  double step = 0.1;
  double f = defect(pres, x);
  QuaternionAssignment trial(x.size());

  for (std::size_t it = 0; it < max_iterations && f >= tol; ++it) {
    const auto grad = defect_gradient(pres, x);
    double g2 = 0.0;
    for (const auto& g : grad) g2 += g.norm_squared();
    if (g2 < 1e-28) break;

    bool accepted = false;
    for (double t = step; t >= kMinStep; t *= 0.5) {
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = retract(x[i] - grad[i] * t);
      const double ft = defect(pres, trial);
      if (ft <= f - kArmijo * t * g2) {
        x.swap(trial);
        f = ft;
        step = std::min(2.0 * t, kMaxStep);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return x;
}

RepSearchResult search_irreducible(const GroupPresentation& pres, const SearchOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (!(options.tol > 0.0) || !(options.eps > 0.0))
    throw std::invalid_argument("tol and eps must be positive");

  RepSearchResult result;
  result.seed = options.seed;
  result.defect = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k < options.restarts; ++k) {
    QuaternionAssignment x = minimize_defect(pres, random_assignment(pres.generator_count, options.seed, k),
                                             options.tol, options.max_iterations);
    const double f = defect(pres, x);
    const double margin = commutator_margin(x);
    if (f < options.tol && margin > options.eps) {
      result.found = true;
      result.defect = f;
      result.irreducibility_margin = margin;
      result.restarts_used = k + 1;
      result.image_heuristic = classify_image(x, options.eps);
      result.assignment = std::move(x);
      return result;
    }
    if (f < result.defect) {
      result.defect = f;
      result.irreducibility_margin = margin;
    }
  }
  result.restarts_used = options.restarts;
  return result;
}

}  // namespace slopecert
