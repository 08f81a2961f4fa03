#pragma once

#include <array>

namespace gridcast::core {

/// Chronological train/validation/test index ranges: contiguous, disjoint,
/// covering [0, T), train before validation before test.
struct SplitSpec {
    int train_begin = 0, train_end = 0;
    int val_begin = 0, val_end = 0;
    int test_begin = 0, test_end = 0;

    int train_size() const { return train_end - train_begin; }
    int val_size() const { return val_end - val_begin; }
    int test_size() const { return test_end - test_begin; }
};

/// Allocates floor(T * fraction) per block and gives the remainder to train.
/// Throws std::invalid_argument unless all fractions are positive and sum to 1.
SplitSpec chronological_split(int T, const std::array<double, 3>& fractions);

}  // namespace gridcast::core
