#pragma once

#include <functional>
#include <string>
#include <vector>

#include "foodrec/matrix.hpp"

namespace foodrec {

// One named parameter block under test: the live tensor the loss closure
// reads from, and the analytic gradient claimed for it.
struct GradCheckBlock {
    std::string name;
    Matrix* params = nullptr;
    Matrix analytic;
};

struct GradCheckBlockReport {
    std::string name;
    double max_rel_error = 0.0;
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;
    bool pass = true;
};

struct GradCheckReport {
    std::vector<GradCheckBlockReport> blocks;
    double max_rel_error = 0.0;
    bool pass = true;

    std::string summary() const;
};

// Central-difference check: perturbs every element of every block by +/-eps,
// re-evaluates loss_fn, and compares (f+ - f-)/(2 eps) against the analytic
// entry. Relative error uses |g - fd| / max(|g| + |fd|, 1e-6) so exactly-zero
// gradients (e.g. non-argmax pooled positions) compare absolutely.
//
// loss_fn must be pure: identical parameters imply an identical loss. Throws
// NumericError if loss_fn returns a non-finite value, InputError if eps <= 0.
GradCheckReport grad_check(const std::function<double()>& loss_fn,
                           std::vector<GradCheckBlock> blocks,
                           double epsilon,
                           double tolerance);

} // namespace foodrec
