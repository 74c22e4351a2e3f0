#pragma once

#include <vector>

#include "lprips/metric.hpp"
#include "lprips/norms.hpp"

namespace lprips {

// weight of an ordered tuple of point indices (repeats allowed): the norm of
// the tuple's distance matrix, via the quadratic dynamic program
double tuple_weight(const NormDescriptor& nu, const FiniteMetricSpace& X,
                    const std::vector<int>& t);

// slow reference for fixed-order norms: enumerates every strictly increasing
// subsequence by bitmask and accumulates entries left to right, so it must
// agree with tuple_weight bit for bit; tuples longer than 20 are refused
double tuple_weight_oracle(const NormDescriptor& nu, const FiniteMetricSpace& X,
                           const std::vector<int>& t);

// weight of a vertex set (strictly increasing indices): the minimum tuple
// weight over orderings; for p=inf this is the diameter and no search runs
double subset_weight(const NormDescriptor& nu, const FiniteMetricSpace& X,
                     const std::vector<int>& s);

// least admissible blur radii along the tuple, composed in power space; the
// greedy recurrence works one entry at a time and never looks ahead
double cho_value(const FiniteMetricSpace& X, const std::vector<int>& t, double p);

// whether the composed radii fit under r, equivalent to tuple_weight <= r
bool cho_membership(const FiniteMetricSpace& X, const std::vector<int>& t,
                    double r, double p);

}  // namespace lprips
