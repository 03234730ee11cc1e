#include "foodrec/grad_check.hpp"

#include <cmath>
#include <sstream>

namespace foodrec {

std::string GradCheckReport::summary() const {
    std::ostringstream out;
    for (const auto& b : blocks) {
        out << (b.pass ? "  ok  " : " FAIL ") << b.name << "  max_rel_error=" << b.max_rel_error
            << " at (" << b.worst_row << "," << b.worst_col << ")\n";
    }
    out << (pass ? "grad_check: pass" : "grad_check: FAIL") << " (max_rel_error=" << max_rel_error
        << ")\n";
    return out.str();
}

GradCheckReport grad_check(const std::function<double()>& loss_fn,
                           std::vector<GradCheckBlock> blocks,
                           double epsilon,
                           double tolerance) {
    if (epsilon <= 0.0) throw InputError("grad_check: epsilon must be > 0");

    auto eval = [&loss_fn]() {
        const double v = loss_fn();
        if (!std::isfinite(v)) throw NumericError("grad_check: loss_fn returned non-finite value");
        return v;
    };

    GradCheckReport report;
    for (auto& block : blocks) {
        if (block.params == nullptr) throw UsageError("grad_check: null params in block " + block.name);
        if (!block.params->same_shape(block.analytic)) {
            throw ShapeError("grad_check[" + block.name + "]: analytic " + block.analytic.shape_str() +
                             " vs params " + block.params->shape_str());
        }
        GradCheckBlockReport br;
        br.name = block.name;
        Matrix& p = *block.params;
        for (std::size_t r = 0; r < p.rows(); ++r) {
            for (std::size_t c = 0; c < p.cols(); ++c) {
                const double saved = p(r, c);
                p(r, c) = saved + epsilon;
                const double f_plus = eval();
                p(r, c) = saved - epsilon;
                const double f_minus = eval();
                p(r, c) = saved;
                const double fd = (f_plus - f_minus) / (2.0 * epsilon);
                const double g = block.analytic(r, c);
                const double rel = std::abs(g - fd) / std::max(std::abs(g) + std::abs(fd), 1e-6);
                if (rel > br.max_rel_error) {
                    br.max_rel_error = rel;
                    br.worst_row = r;
                    br.worst_col = c;
                }
            }
        }
        br.pass = br.max_rel_error <= tolerance;
        report.pass = report.pass && br.pass;
        report.max_rel_error = std::max(report.max_rel_error, br.max_rel_error);
        report.blocks.push_back(std::move(br));
    }
    return report;
}

} // namespace foodrec
