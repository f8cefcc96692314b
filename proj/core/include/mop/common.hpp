#ifndef MOP_COMMON_HPP
#define MOP_COMMON_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mop {

/// Lattice direction of a shifted step-line: e1 = (1,0), e2 = (0,1).
enum class Axis { e1, e2 };

std::string to_string(Axis axis);

/// Multi-index (n_1, ..., n_r) with nonnegative components.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> components);
    MultiIndex(std::initializer_list<int> components);

    static MultiIndex zero(int r);
    static MultiIndex unit(int r, int direction);

    int r() const { return static_cast<int>(components_.size()); }
    int length() const;
    int operator[](int direction) const { return components_[static_cast<std::size_t>(direction)]; }
    const std::vector<int>& components() const { return components_; }

    /// Componentwise shift by +/- e_direction; result may leave N^r (see valid()).
    MultiIndex plus(int direction) const;
    MultiIndex minus(int direction) const;
    bool valid() const;

    std::string to_string() const;

    auto operator<=>(const MultiIndex&) const = default;
    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<int> components_;
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& index) const noexcept;
};

/// All multi-indices of given length in N^r, in lexicographically descending order.
std::vector<MultiIndex> multi_indices_of_length(int r, int length);

} // namespace mop

#endif // MOP_COMMON_HPP
