#pragma once

#include <string>

#include "foodrec/matrix.hpp"

namespace foodrec {

struct AdamConfig {
    double learning_rate = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

// Adam optimizer state for one parameter tensor: first/second moment
// estimates plus the step counter used for bias correction.
class AdamState {
public:
    AdamState(std::string name, std::size_t rows, std::size_t cols, AdamConfig config = {})
        : name_(std::move(name)), m_(rows, cols), v_(rows, cols), config_(config) {}

    // Bias-corrected update applied in place:
    //   m <- b1*m + (1-b1)*g,  v <- b2*v + (1-b2)*g^2
    //   p <- p - lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps)
    // Throws NumericError naming this tensor if any gradient entry is
    // non-finite, and ShapeError if shapes disagree.
    void step(Matrix& params, const Matrix& grads);

    long step_count() const { return t_; }
    const std::string& name() const { return name_; }
    const AdamConfig& config() const { return config_; }

private:
    std::string name_;
    Matrix m_;
    Matrix v_;
    long t_ = 0;
    AdamConfig config_;
};

} // namespace foodrec
