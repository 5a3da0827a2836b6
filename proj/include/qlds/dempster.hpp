#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlds {

// Finite frame of discernment. Subsets are bitmasks over element indices, so
// the size is capped at 24 to keep exhaustive sweeps cheap.
struct Frame {
  int size = 0;

  explicit Frame(int n);
  std::uint32_t full_mask() const { return (std::uint32_t{1} << size) - 1u; }
};

// Normalized basic probability assignment: nonnegative weights on nonempty
// subsets summing to one. Stored sparse as (subset mask, weight) focal pairs.
class MassFunction {
 public:
  MassFunction(Frame frame,
               std::vector<std::pair<std::uint32_t, double>> focal_weights,
               double tol = 1e-9);

  const Frame& frame() const { return frame_; }
  const std::vector<std::pair<std::uint32_t, double>>& focal() const {
    return focal_;
  }
  double mass(std::uint32_t subset) const;

 private:
  Frame frame_;
  std::vector<std::pair<std::uint32_t, double>> focal_;  // sorted by mask
};

// l(a) = sum of masses of subsets contained in a.
double belief(const MassFunction& m, std::uint32_t a);

// u(a) = sum of masses of subsets meeting a; equals 1 - l(complement of a).
double plausibility(const MassFunction& m, std::uint32_t a);

// Additivity defect q(a|b) - q(a) - q(b) + q(a&b) of a set function q.
// Nonnegative for belief, nonpositive for plausibility, zero for measures.
template <typename SetFunction>
double delta(SetFunction&& q, std::uint32_t a, std::uint32_t b) {
  return q(a | b) - q(a) - q(b) + q(a & b);
}

struct Table1Row {
  std::string name;
  bool holds = true;
  // Subset pair violating the row, when one exists.
  std::optional<std::array<std::uint32_t, 2>> witness;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  bool all_pass = true;
  // Informational: belief may fail the union bound l(a) + l(b) >= l(a|b);
  // a pair showing that failure is recorded here when found.
  std::optional<std::array<std::uint32_t, 2>> lower_boole_counterexample;
};

// Checks every row of the belief/plausibility property table on subset pairs:
// monotonicity, normalization at the empty set and the frame, sign of the
// additivity defect, l(a) + l(not a) <= 1, u(a) + u(not a) >= 1, and the union
// bound for u. Enumerates all pairs when 4^frame_size <= trials, otherwise
// samples `trials` seeded random pairs.
Table1Report check_table1(const MassFunction& m, int trials = 200,
                          std::uint64_t seed = 0, double tol = 1e-9);

// Two-element frame {0 = under35, 1 = over35} with counts n1 (under), n2
// (over), n3 (age unknown, mass on the whole frame).
MassFunction employee_mass(int n1, int n2, int n3);

// Additive measure: all mass on singletons, weights given per element.
MassFunction kolmogorov_mass(const std::vector<double>& probabilities);

// Normalized combination of independent evidence. Errors on total conflict.
MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2,
                              double tol = 1e-9);

}  // namespace qlds
