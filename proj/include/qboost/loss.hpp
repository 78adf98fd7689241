#pragma once
#include <span>
#include <string>
#include <vector>

#include "qboost/common.hpp"

namespace qboost {

enum class Objective { squared_error, binary_logloss };
enum class Metric { rmse, auc };

// Per-sample first and second derivatives of the loss at the current scores.
struct GradientBuffer {
    std::vector<double> g;
    std::vector<double> h;        // empty when constant_hessian
    bool constant_hessian = false;
    double hessian_value = 1.0;   // shared h when constant_hessian

    std::size_t size() const { return g.size(); }
    double hess(std::size_t i) const { return constant_hessian ? hessian_value : h[i]; }
};

// squared error: l = 0.5*(p-y)^2, g = p-y, h = 1
// binary logloss on raw margins: g = sigmoid(p)-y, h = sigmoid(p)*(1-sigmoid(p))
GradientBuffer compute_gradients(Objective objective, std::span<const double> predictions,
                                 std::span<const double> labels);

// rmse, or auc (ties count 1/2; throws if only one class is present)
double evaluate(Metric metric, std::span<const double> predictions,
                std::span<const double> labels);

// mean label for squared error, log-odds of the base rate for logloss
double initial_score(Objective objective, std::span<const double> labels);

double sigmoid(double x);

Metric default_metric(Objective objective);
bool metric_higher_is_better(Metric metric);

const char* objective_name(Objective objective);
Objective objective_from_name(const std::string& name);
const char* metric_name(Metric metric);

}  // namespace qboost
