#pragma once

#include <stdexcept>
#include <string>

namespace kpf {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A weight vector whose entries do not sum to zero.
class invalid_weight_error : public error {
public:
    using error::error;
};

/// An integral flow violating nonnegativity or its net-flow prescription.
class invalid_flow_error : public error {
public:
    using error::error;
};

/// An operation that needs a nonempty instance set received an empty one.
class empty_instance_error : public error {
public:
    using error::error;
};

/// log |T(h)| requested for an empty family.
class log_of_zero_error : public empty_instance_error {
public:
    using empty_instance_error::empty_instance_error;
};

/// Order queries between instances of different hook sums / weights.
class incomparable_error : public error {
public:
    using error::error;
};

/// Rank function requested on a poset that is not ranked by loop count.
class not_ranked_error : public error {
public:
    using error::error;
};

/// A candidate relation failed antisymmetry during poset construction.
class not_partial_order_error : public error {
public:
    using error::error;
};

/// Exact linear solve hit a singular system.
class singular_system_error : public error {
public:
    using error::error;
};

} // namespace kpf
