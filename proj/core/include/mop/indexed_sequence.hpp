#ifndef MOP_INDEXED_SEQUENCE_HPP
#define MOP_INDEXED_SEQUENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mop/numerics.hpp"

namespace mop {

/// Dense sequence over the inclusive index range [lo, hi].
///
/// Reads outside the range, or of slots never written, throw RangeError.
class IndexedSeq {
public:
    IndexedSeq() = default;
    IndexedSeq(std::string label, int lo, int hi);

    const std::string& label() const { return label_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool empty() const { return hi_ < lo_; }

    bool in_range(int n) const { return n >= lo_ && n <= hi_; }
    bool has(int n) const;

    const Rational& at(int n) const;
    void set(int n, Rational value);

private:
    std::string label_;
    int lo_ = 0;
    int hi_ = -1;
    std::vector<std::optional<Rational>> values_;
};

} // namespace mop

#endif // MOP_INDEXED_SEQUENCE_HPP
