#include "foodrec/adam.hpp"

#include <cmath>

namespace foodrec {

void AdamState::step(Matrix& params, const Matrix& grads) {
    if (!params.same_shape(m_) || !grads.same_shape(m_)) {
        throw ShapeError("adam_step[" + name_ + "]: params " + params.shape_str() + ", grads " +
                         grads.shape_str() + ", state " + m_.shape_str());
    }
    if (!grads.all_finite()) {
        throw NumericError("adam_step[" + name_ + "]: non-finite gradient");
    }
    ++t_;
    const double b1 = config_.beta1;
    const double b2 = config_.beta2;
    const double corr1 = 1.0 - std::pow(b1, static_cast<double>(t_));
    const double corr2 = 1.0 - std::pow(b2, static_cast<double>(t_));
    double* p = params.data();
    const double* g = grads.data();
    double* m = m_.data();
    double* v = v_.data();
    for (std::size_t i = 0; i < params.size(); ++i) {
        m[i] = b1 * m[i] + (1.0 - b1) * g[i];
        v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
        const double m_hat = m[i] / corr1;
        const double v_hat = v[i] / corr2;
        p[i] -= config_.learning_rate * m_hat / (std::sqrt(v_hat) + config_.epsilon);
    }
}

} // namespace foodrec
