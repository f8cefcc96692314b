#include "mop/indexed_sequence.hpp"

#include "mop/errors.hpp"

namespace mop {

IndexedSeq::IndexedSeq(std::string label, int lo, int hi)
    : label_(std::move(label))
    , lo_(lo)
    , hi_(hi)
    , values_(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0)
{
}

bool IndexedSeq::has(int n) const
{
    return in_range(n) && values_[static_cast<std::size_t>(n - lo_)].has_value();
}

const Rational& IndexedSeq::at(int n) const
{
    if (!in_range(n)) {
        throw RangeError(label_ + "[" + std::to_string(n) + "] outside covered range [" + std::to_string(lo_) + ", "
                         + std::to_string(hi_) + "]");
    }
    const auto& slot = values_[static_cast<std::size_t>(n - lo_)];
    if (!slot) {
        throw RangeError(label_ + "[" + std::to_string(n) + "] read before it was computed");
    }
    return *slot;
}

void IndexedSeq::set(int n, Rational value)
{
    if (!in_range(n)) {
        throw RangeError(label_ + "[" + std::to_string(n) + "] outside covered range [" + std::to_string(lo_) + ", "
                         + std::to_string(hi_) + "]");
    }
    values_[static_cast<std::size_t>(n - lo_)] = std::move(value);
}

} // namespace mop
