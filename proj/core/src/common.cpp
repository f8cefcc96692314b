#include "mop/common.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "mop/errors.hpp"

namespace mop {

std::string to_string(Axis axis)
{
    return axis == Axis::e1 ? "e1" : "e2";
}

MultiIndex::MultiIndex(std::vector<int> components)
    : components_(std::move(components))
{
}

MultiIndex::MultiIndex(std::initializer_list<int> components)
    : components_(components)
{
}

MultiIndex MultiIndex::zero(int r)
{
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(r), 0));
}

MultiIndex MultiIndex::unit(int r, int direction)
{
    MultiIndex e = zero(r);
    e.components_.at(static_cast<std::size_t>(direction)) = 1;
    return e;
}

int MultiIndex::length() const
{
    return std::accumulate(components_.begin(), components_.end(), 0);
}

MultiIndex MultiIndex::plus(int direction) const
{
    MultiIndex out = *this;
    ++out.components_.at(static_cast<std::size_t>(direction));
    return out;
}

MultiIndex MultiIndex::minus(int direction) const
{
    MultiIndex out = *this;
    --out.components_.at(static_cast<std::size_t>(direction));
    return out;
}

bool MultiIndex::valid() const
{
    for (int c : components_) {
        if (c < 0) {
            return false;
        }
    }
    return true;
}

std::string MultiIndex::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(components_[i]);
    }
    return out + ")";
}

std::size_t MultiIndexHash::operator()(const MultiIndex& index) const noexcept
{
    std::size_t seed = index.components().size();
    for (int c : index.components()) {
        seed ^= std::hash<int>{}(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
}

namespace {

void enumerate(int r, int remaining, std::vector<int>& prefix, std::vector<MultiIndex>& out)
{
    if (static_cast<int>(prefix.size()) == r - 1) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        prefix.push_back(v);
        enumerate(r, remaining - v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> multi_indices_of_length(int r, int length)
{
    if (r < 1 || length < 0) {
        throw std::invalid_argument("multi_indices_of_length: r >= 1 and length >= 0 required");
    }
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    enumerate(r, length, prefix, out);
    return out;
}

InitError::InitError(Axis axis, int level, std::string what)
    : Error(std::move(what))
    , axis_(axis)
    , level_(level)
{
}

NormalityError::NormalityError(Axis axis, int level, int n, int index, std::string denominator)
    : Error("normality breakdown on axis " + mop::to_string(axis) + " at shift level " + std::to_string(level)
            + ", n = " + std::to_string(n) + ": denominator " + denominator + " vanishes")
    , axis_(axis)
    , level_(level)
    , n_(n)
    , index_(index)
    , denominator_(std::move(denominator))
{
}

SingularSweepError::SingularSweepError(MultiIndex index, int i, int j)
    : Error("singular sweep at " + index.to_string() + ": b_{n," + std::to_string(i + 1) + "} = b_{n,"
            + std::to_string(j + 1) + "}")
    , index_(std::move(index))
    , i_(i)
    , j_(j)
{
}

NonNormalIndexError::NonNormalIndexError(MultiIndex index)
    : Error("multi-index " + index.to_string() + " is not normal: moment system is singular")
    , index_(std::move(index))
{
}

ParseError::ParseError(int line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
    , line_(line)
{
}

} // namespace mop
