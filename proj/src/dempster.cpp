#include "qlds/dempster.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qlds {

Frame::Frame(int n) : size(n) {
  if (n < 1 || n > 24) {
    throw std::invalid_argument("Frame: size must be in 1..24");
  }
}

MassFunction::MassFunction(Frame frame,
                           std::vector<std::pair<std::uint32_t, double>> focal_weights,
                           double tol)
    : frame_(frame), focal_(std::move(focal_weights)) {
  std::sort(focal_.begin(), focal_.end());
  double total = 0.0;
  std::uint32_t previous_mask = 0;
  bool first = true;
  for (const auto& [mask, weight] : focal_) {
    if (mask == 0) {
      throw std::invalid_argument("MassFunction: empty set carries no mass");
    }
    if (mask > frame_.full_mask()) {
      throw std::invalid_argument("MassFunction: subset outside the frame");
    }
    if (!first && mask == previous_mask) {
      throw std::invalid_argument("MassFunction: duplicate focal subset");
    }
    if (!(weight >= 0.0) || weight > 1.0 + tol || !std::isfinite(weight)) {
      throw std::invalid_argument("MassFunction: weight outside [0, 1]");
    }
    total += weight;
    previous_mask = mask;
    first = false;
  }
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument("MassFunction: weights must sum to one");
  }
}

double MassFunction::mass(std::uint32_t subset) const {
  auto it = std::lower_bound(
      focal_.begin(), focal_.end(), subset,
      [](const auto& entry, std::uint32_t key) { return entry.first < key; });
  if (it != focal_.end() && it->first == subset) return it->second;
  return 0.0;
}

double belief(const MassFunction& m, std::uint32_t a) {
  if (a > m.frame().full_mask()) {
    throw std::invalid_argument("belief: subset outside the frame");
  }
  double total = 0.0;
  for (const auto& [mask, weight] : m.focal()) {
    if ((mask & ~a) == 0) total += weight;
  }
  return total;
}

double plausibility(const MassFunction& m, std::uint32_t a) {
  if (a > m.frame().full_mask()) {
    throw std::invalid_argument("plausibility: subset outside the frame");
  }
  double total = 0.0;
  for (const auto& [mask, weight] : m.focal()) {
    if ((mask & a) != 0) total += weight;
  }
  return total;
}

namespace {

struct RowCheck {
  const char* name;
  // Evaluates the row on one subset pair; false means violated.
  bool (*holds)(const MassFunction&, std::uint32_t, std::uint32_t, double);
};

double ell(const MassFunction& m, std::uint32_t a) { return belief(m, a); }
double upl(const MassFunction& m, std::uint32_t a) { return plausibility(m, a); }

const RowCheck kRows[] = {
    {"belief_monotone",
     [](const MassFunction& m, std::uint32_t a, std::uint32_t b, double tol) {
       const std::uint32_t sub = a & b;  // sub is contained in b
       return ell(m, sub) <= ell(m, b) + tol;
     }},
    {"belief_normalized",
     [](const MassFunction& m, std::uint32_t, std::uint32_t, double tol) {
       return std::abs(ell(m, 0)) <= tol &&
              std::abs(ell(m, m.frame().full_mask()) - 1.0) <= tol;
     }},
    {"belief_superadditive_delta",
     [](const MassFunction& m, std::uint32_t a, std::uint32_t b, double tol) {
       return delta([&](std::uint32_t s) { return ell(m, s); }, a, b) >= -tol;
     }},
    {"belief_complement_sum_below_one",
     [](const MassFunction& m, std::uint32_t a, std::uint32_t, double tol) {
       return ell(m, a) + ell(m, m.frame().full_mask() & ~a) <= 1.0 + tol;
     }},
    {"plausibility_monotone",
     [](const MassFunction& m, std::uint32_t a, std::uint32_t b, double tol) {
       const std::uint32_t sub = a & b;
       return upl(m, sub) <= upl(m, b) + tol;
     }},
    {"plausibility_normalized",
     [](const MassFunction& m, std::uint32_t, std::uint32_t, double tol) {
       return std::abs(upl(m, 0)) <= tol &&
              std::abs(upl(m, m.frame().full_mask()) - 1.0) <= tol;
     }},
    {"plausibility_subadditive_delta",
     [](const MassFunction& m, std::uint32_t a, std::uint32_t b, double tol) {
       return delta([&](std::uint32_t s) { return upl(m, s); }, a, b) <= tol;
     }},
    {"plausibility_complement_sum_above_one",
     [](const MassFunction& m, std::uint32_t a, std::uint32_t, double tol) {
       return upl(m, a) + upl(m, m.frame().full_mask() & ~a) >= 1.0 - tol;
     }},
    {"plausibility_union_bound",
     [](const MassFunction& m, std::uint32_t a, std::uint32_t b, double tol) {
       return upl(m, a) + upl(m, b) >= upl(m, a | b) - tol;
     }},
};

}  // namespace

Table1Report check_table1(const MassFunction& m, int trials, std::uint64_t seed,
                          double tol) {
  if (trials < 1) {
    throw std::invalid_argument("check_table1: trials must be positive");
  }
  Table1Report report;
  for (const auto& row : kRows) {
    report.rows.push_back(Table1Row{row.name, true, std::nullopt});
  }

  const std::uint32_t full = m.frame().full_mask();
  const std::uint64_t pair_count = (std::uint64_t{full} + 1) * (std::uint64_t{full} + 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, full);

  const bool exhaustive = pair_count <= static_cast<std::uint64_t>(trials);
  const std::uint64_t steps = exhaustive ? pair_count : static_cast<std::uint64_t>(trials);
  for (std::uint64_t step = 0; step < steps; ++step) {
    std::uint32_t a, b;
    if (exhaustive) {
      a = static_cast<std::uint32_t>(step % (std::uint64_t{full} + 1));
      b = static_cast<std::uint32_t>(step / (std::uint64_t{full} + 1));
    } else {
      a = pick(rng);
      b = pick(rng);
    }
    for (std::size_t i = 0; i < std::size(kRows); ++i) {
      if (report.rows[i].holds && !kRows[i].holds(m, a, b, tol)) {
        report.rows[i].holds = false;
        report.rows[i].witness = {{a, b}};
      }
    }
    if (!report.lower_boole_counterexample &&
        belief(m, a) + belief(m, b) < belief(m, a | b) - tol) {
      report.lower_boole_counterexample = {{a, b}};
    }
  }
  report.all_pass = std::all_of(report.rows.begin(), report.rows.end(),
                                [](const Table1Row& r) { return r.holds; });
  return report;
}

MassFunction employee_mass(int n1, int n2, int n3) {
  if (n1 < 0 || n2 < 0 || n3 < 0 || n1 + n2 + n3 <= 0) {
    throw std::invalid_argument("employee_mass: counts must be nonnegative");
  }
  const double n = n1 + n2 + n3;
  std::vector<std::pair<std::uint32_t, double>> focal;
  if (n1 > 0) focal.emplace_back(0b01u, n1 / n);
  if (n2 > 0) focal.emplace_back(0b10u, n2 / n);
  if (n3 > 0) focal.emplace_back(0b11u, n3 / n);
  return MassFunction(Frame(2), std::move(focal));
}

MassFunction kolmogorov_mass(const std::vector<double>& probabilities) {
  Frame frame(static_cast<int>(probabilities.size()));
  std::vector<std::pair<std::uint32_t, double>> focal;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] > 0.0) {
      focal.emplace_back(std::uint32_t{1} << i, probabilities[i]);
    }
  }
  return MassFunction(frame, std::move(focal));
}

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2,
                              double tol) {
  if (m1.frame().size != m2.frame().size) {
    throw std::invalid_argument("dempster_combine: frames differ");
  }
  std::vector<std::pair<std::uint32_t, double>> raw;
  double conflict = 0.0;
  for (const auto& [s1, w1] : m1.focal()) {
    for (const auto& [s2, w2] : m2.focal()) {
      const std::uint32_t meet = s1 & s2;
      if (meet == 0) {
        conflict += w1 * w2;
      } else {
        auto it = std::find_if(raw.begin(), raw.end(),
                               [meet](const auto& e) { return e.first == meet; });
        if (it == raw.end()) {
          raw.emplace_back(meet, w1 * w2);
        } else {
          it->second += w1 * w2;
        }
      }
    }
  }
  if (conflict >= 1.0 - tol) {
    throw std::invalid_argument("dempster_combine: total conflict");
  }
  for (auto& [mask, weight] : raw) weight /= (1.0 - conflict);
  return MassFunction(m1.frame(), std::move(raw), tol);
}

}  // namespace qlds
