#pragma once

// Numerical search for irreducible SU(2) representations of a finitely
// presented group. A hit (small defect, non-commuting images) is evidence that
// an irreducible exists; a miss proves nothing.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopecert/presentation.hpp"
#include "slopecert/quaternion.hpp"

namespace slopecert {

/// One unit quaternion per generator.
using QuaternionAssignment = std::vector<Quaternion>;

/// Product of the word's letters, inverses taken as conjugates.
Quaternion evaluate_word(const Word& w, const QuaternionAssignment& a);

/// Sum over relators of |evaluate(word) - 1|^2.
double defect(const GroupPresentation& pres, const QuaternionAssignment& a);

/// Riemannian gradient of defect on the product of unit 3-spheres: one
/// tangent vector per generator.
std::vector<Quaternion> defect_gradient(const GroupPresentation& pres, const QuaternionAssignment& a);

/// Largest |gh - hg| over pairs of generator images; 0 with fewer than two.
double commutator_margin(const QuaternionAssignment& a);

/// Some pair of images fails to commute by more than eps.
bool is_irreducible(const QuaternionAssignment& a, double eps);

/// Nearest-subgroup guess for the image of a representation: "abelian",
/// "binary_dihedral" or "non_binary_dihedral". Heuristic only.
std::string classify_image(const QuaternionAssignment& a, double eps, double tol = 1e-6);

struct SearchOptions {
  std::uint64_t restarts = 200;
  std::uint64_t seed = 1;
  double tol = 1e-10;  // on defect
  double eps = 1e-2;   // on commutator norm
  std::size_t max_iterations = 20000;
};

struct RepSearchResult {
  bool found = false;
  std::optional<QuaternionAssignment> assignment;
  double defect = 0.0;                 // of the reported trial
  double irreducibility_margin = 0.0;  // commutator margin of that trial
  std::uint64_t restarts_used = 0;
  std::uint64_t seed = 0;
  std::string image_heuristic;  // set when found
};

/// Deterministic starting point for a restart: each generator uniform on S^3,
/// drawn from a stream keyed by (seed, restart).
QuaternionAssignment random_assignment(int generators, std::uint64_t seed, std::uint64_t restart);

/// Projected gradient descent with backtracking from one starting point.
/// Stops at defect < tol, at a stationary point, or after max_iterations.
QuaternionAssignment minimize_defect(const GroupPresentation& pres, QuaternionAssignment start,
                                     double tol, std::size_t max_iterations);

/// Restarts in index order; returns the first trial ending with defect < tol
/// and commutator margin > eps. When none qualifies, reports the lowest
/// defect seen.
RepSearchResult search_irreducible(const GroupPresentation& pres, const SearchOptions& options);

/// Printed with every negative search result.
inline constexpr const char* kNoRepDisclaimer =
    "no irreducible found: numerical evidence only, not a proof of nonexistence";

}  // namespace slopecert
