#pragma once

#include "dfc/chebpoly.hpp"
#include "dfc/chebrec.hpp"
#include "dfc/oreops.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dfc {

struct SolveOptions {
    std::optional<long> N;  ///< start index; chosen from the growth model when absent
    int max_retries = -1;   ///< negative: DFC_MAX_RETRIES or 5
    bool keep_sequence = false;
};

struct SolveOutput {
    ChebPoly poly;                  ///< degree <= d, standard coefficients
    long N_used = 0;
    int retries = 0;
    std::map<long, Rational> eta;   ///< eta_i for test sequences normalized by f_{i,i-s} = 1
    std::vector<Rational> sequence; ///< untruncated symmetric coefficients (keep_sequence only)
    RecOp P;
    std::vector<long> singular;     ///< S
};

/// Retry cap from DFC_MAX_RETRIES (default 5).
int default_max_retries();

/// Start index used when none is given: the growth model is asked for an
/// accuracy equal to the square of its own estimate at degree d.
long auto_start_index(const RecOp& P, int d);

/// Degree-d Chebyshev approximation of the solution of the problem by backward
/// unrolling of test sequences and an exact selection system.
SolveOutput approximate(const IvpProblem& ivp, int d, const SolveOptions& opts = {});

/// Exact value of the linear form of a condition on p.
Rational eval_condition(const BoundaryCondition& c, const ChebPoly& p);

} // namespace dfc
