#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ngrc {

/// Point in the n-dimensional phase space of a dynamical system.
using StateVector = std::vector<double>;

inline bool all_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

/// Time-ordered sequence of states sampled at a uniform interval dt.
/// Samples are stored flat (row-major, one state per row).
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(double dt, int dim, double t0 = 0.0)
        : dt_(dt), t0_(t0), dim_(dim) {
        if (dt <= 0.0) throw std::invalid_argument("Trajectory: dt must be > 0");
        if (dim <= 0) throw std::invalid_argument("Trajectory: dim must be > 0");
    }

    double dt() const { return dt_; }
    double t0() const { return t0_; }
    int dim() const { return dim_; }
    long size() const { return dim_ == 0 ? 0 : static_cast<long>(data_.size()) / dim_; }

    double time(long i) const { return t0_ + static_cast<double>(i) * dt_; }

    std::span<const double> state(long i) const {
        return {data_.data() + i * dim_, static_cast<size_t>(dim_)};
    }
    std::span<const double> flat() const { return data_; }

    void push_back(std::span<const double> s) {
        if (static_cast<int>(s.size()) != dim_)
            throw std::invalid_argument("Trajectory: state dimension mismatch");
        data_.insert(data_.end(), s.begin(), s.end());
    }
    void reserve(long n) { data_.reserve(static_cast<size_t>(n) * dim_); }

    bool operator==(const Trajectory&) const = default;

private:
    double dt_ = 0.0;
    double t0_ = 0.0;
    int dim_ = 0;
    std::vector<double> data_;
};

} // namespace ngrc
