#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "singulact/rational.hpp"

namespace singulact::lp {

/// minimize objective . z  subject to  A z = b,  z >= 0.
struct LinearProgram {
  std::vector<Rat> objective;
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;

  std::size_t num_vars() const noexcept { return objective.size(); }
  std::size_t num_rows() const noexcept { return A.size(); }
};

enum class Status { optimal, infeasible, unbounded };

std::string to_string(Status s);

struct LpResult {
  Status status = Status::infeasible;
  Rat value;                // objective at `primal` (optimal only)
  std::vector<Rat> primal;  // feasible vertex (optimal only)
  std::vector<Rat> dual;    // y with A^T y <= c and b . y = value (optimal only)
  std::size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's rule. The entering
/// column is the lowest-indexed one with negative reduced cost and ties in the
/// ratio test go to the lowest basic variable index, so the pivot sequence is a
/// deterministic function of the program.
/// Throws InputError on inconsistent dimensions.
LpResult solve(const LinearProgram& lp);

}  // namespace singulact::lp
