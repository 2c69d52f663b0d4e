#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbigenus/lattice.hpp"

namespace orbigenus {

/// A bijection of {0, ..., l-1}, stored by its image array.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless image is a bijection.
    explicit Permutation(std::vector<std::uint32_t> image);
    static Permutation identity(std::size_t degree);
    /// Cycle notation over {0..degree-1}, e.g. {{0,1,2}}.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

    std::size_t degree() const { return image_.size(); }
    std::uint32_t operator()(std::uint32_t point) const { return image_[point]; }
    const std::vector<std::uint32_t>& image() const { return image_; }

    bool is_identity() const;
    std::uint64_t order() const;
    Permutation inverse() const;
    /// (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    /// g p g^-1.
    Permutation conjugated_by(const Permutation& g) const;
    bool commutes_with(const Permutation& other) const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> image_;
};

/// h pairwise-commuting permutations of one degree: a homomorphism Z^h -> Sigma_l.
class CommutingTuple {
public:
    /// Throws std::invalid_argument if the entries have different degrees,
    /// fail to commute, or (in PPower mode) have non-p-power order.
    CommutingTuple(std::vector<Permutation> entries, const OrderMode& mode);

    int rank() const { return static_cast<int>(entries_.size()); }
    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& entries() const { return entries_; }
    const Permutation& operator[](std::size_t i) const { return entries_[i]; }

private:
    std::vector<Permutation> entries_;
    std::size_t degree_ = 0;
};

} // namespace orbigenus
