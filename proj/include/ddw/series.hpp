#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ddw {

/// One channel of a candidate template or a recorded cycle: a nonempty
/// chain of finite samples. Construction validates; the contents are then
/// immutable, so every Series in the program satisfies the invariants.
class Series {
public:
    /// Throws InvalidInput when `values` is empty or holds NaN/inf.
    explicit Series(std::vector<double> values);
    Series(std::initializer_list<double> values) : Series(std::vector<double>(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    const std::vector<double>& vector() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<double> values_;
};

/// Throws InvalidInput unless `values` is nonempty and finite.
void require_valid_series(std::span<const double> values);

}  // namespace ddw
