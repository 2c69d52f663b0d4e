#include "orbigenus/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbigenus {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image))
{
    std::vector<bool> seen(image_.size(), false);
    for (auto x : image_) {
        if (x >= image_.size() || seen[x])
            throw std::invalid_argument("permutation: image is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t degree)
{
    std::vector<std::uint32_t> image(degree);
    std::iota(image.begin(), image.end(), 0u);
    return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles)
{
    std::vector<std::uint32_t> image(degree);
    std::iota(image.begin(), image.end(), 0u);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles)
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const auto x = cycle[i];
            if (x >= degree || used[x])
                throw std::invalid_argument("permutation: invalid cycle");
            used[x] = true;
            image[x] = cycle[(i + 1) % cycle.size()];
        }
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i)
            return false;
    return true;
}

std::uint64_t Permutation::order() const
{
    std::vector<bool> seen(image_.size(), false);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i])
            continue;
        std::uint64_t len = 0;
        for (auto x = static_cast<std::uint32_t>(i); !seen[x]; x = image_[x]) {
            seen[x] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

Permutation Permutation::inverse() const
{
    std::vector<std::uint32_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        inv[image_[i]] = static_cast<std::uint32_t>(i);
    Permutation p;
    p.image_ = std::move(inv);
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.degree() != b.degree())
        throw std::invalid_argument("permutation degree mismatch");
    Permutation p;
    p.image_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i)
        p.image_[i] = a.image_[b.image_[i]];
    return p;
}

Permutation Permutation::conjugated_by(const Permutation& g) const
{
    // (g p g^-1)(g(x)) = g(p(x)).
    Permutation p;
    p.image_.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x)
        p.image_[g.image_[x]] = g.image_[image_[x]];
    return p;
}

bool Permutation::commutes_with(const Permutation& other) const
{
    if (degree() != other.degree())
        return false;
    for (std::size_t x = 0; x < degree(); ++x)
        if (image_[other.image_[x]] != other.image_[image_[x]])
            return false;
    return true;
}

std::string Permutation::to_string() const
{
    std::ostringstream os;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i] || image_[i] == i)
            continue;
        os << '(';
        bool first = true;
        for (auto x = static_cast<std::uint32_t>(i); !seen[x]; x = image_[x]) {
            seen[x] = true;
            os << (first ? "" : " ") << x;
            first = false;
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : std::string("()");
}

CommutingTuple::CommutingTuple(std::vector<Permutation> entries, const OrderMode& mode)
    : entries_(std::move(entries))
{
    if (entries_.empty())
        throw std::invalid_argument("commuting tuple: h must be >= 1");
    degree_ = entries_.front().degree();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].degree() != degree_)
            throw std::invalid_argument("commuting tuple: entries have different degrees");
        if (!mode.admits(entries_[i].order()))
            throw std::invalid_argument("commuting tuple: entry " + std::to_string(i) +
                                        " does not have p-power order");
        for (std::size_t j = 0; j < i; ++j)
            if (!entries_[i].commutes_with(entries_[j]))
                throw std::invalid_argument("commuting tuple: entries do not commute");
    }
}

} // namespace orbigenus
