#pragma once

#include <cmath>

namespace teich {

// Neumaier compensated accumulator. All reductions in the library use this
// in a fixed index order, so results do not depend on how work was
// partitioned across threads.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace teich
