#pragma once

// Finite transitive Z^h-sets (and Z_p^h-sets) up to isomorphism.
//
// A transitive Z^h-set T is Z^h/L for its stabilizer sublattice L, and two
// such sets are isomorphic iff their stabilizers agree (Z^h is abelian, so
// the stabilizer does not depend on the basepoint).  L is stored by its
// row-style Hermite normal form: an upper-triangular h x h matrix whose rows
// generate L, with positive diagonal and 0 <= a[i][j] < a[j][j] for i < j.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbigenus/rational.hpp"

namespace orbigenus {

using LatticeVector = std::vector<std::int64_t>;

/// Z^h-sets of every finite order, or only Z_p^h-sets (p-power orders).
class OrderMode {
public:
    static OrderMode all_orders() { return OrderMode(0); }
    /// Throws std::invalid_argument unless p is prime.
    static OrderMode p_power(std::uint64_t p);

    bool is_all_orders() const { return p_ == 0; }
    bool is_p_power() const { return p_ != 0; }
    /// The prime; 0 in AllOrders mode.
    std::uint64_t prime() const { return p_; }

    /// Whether n >= 1 is an admissible orbit size / permutation order.
    bool admits(std::uint64_t n) const;

    std::string to_string() const;

    friend bool operator==(const OrderMode&, const OrderMode&) = default;

private:
    explicit OrderMode(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

class TransitiveOrbit {
public:
    /// The one-point orbit (L = Z^h).
    static TransitiveOrbit trivial(int h);

    /// Validates canonical form; throws std::invalid_argument otherwise.
    static TransitiveOrbit from_hnf(int h, std::vector<std::int64_t> row_major);
    static TransitiveOrbit from_rows(const std::vector<LatticeVector>& rows);

    int rank() const { return h_; }
    std::int64_t entry(int row, int col) const { return hnf_[row * h_ + col]; }
    std::span<const std::int64_t> hnf() const { return hnf_; }
    std::vector<LatticeVector> rows() const;
    std::vector<std::int64_t> diagonal() const;

    const Integer& size() const { return size_; }
    /// size() as a machine integer; sizes are small at working scale.
    std::uint64_t order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    /// Reduces v modulo L to the representative with 0 <= v[j] < a[j][j].
    LatticeVector reduce(LatticeVector v) const;
    /// All reduced coset representatives of Z^h/L, lexicographic.
    std::vector<LatticeVector> elements() const;
    /// Position of a reduced vector in elements().
    std::size_t index_of(const LatticeVector& reduced) const;

    /// Compact text form, e.g. "[1,1;0,2]".
    std::string to_string() const;

    friend bool operator==(const TransitiveOrbit& a, const TransitiveOrbit& b)
    {
        return a.h_ == b.h_ && a.hnf_ == b.hnf_;
    }
    /// Rank, then size, then diagonal, then off-diagonal entries.
    friend std::strong_ordering operator<=>(const TransitiveOrbit& a, const TransitiveOrbit& b);

private:
    TransitiveOrbit(int h, std::vector<std::int64_t> hnf);

    int h_ = 0;
    std::vector<std::int64_t> hnf_;
    Integer size_;
    std::uint64_t order_ = 0;
};

/// Every transitive Z^h-set of order n, one per isomorphism class, sorted by
/// diagonal then off-diagonal entries.  Throws std::invalid_argument when
/// h < 1, n < 1, or n is not admissible for the mode.
std::vector<TransitiveOrbit> enumerate_orbits(int h, std::uint64_t n, const OrderMode& mode);

/// All orbits of admissible size <= max_size, in size order.
std::vector<TransitiveOrbit> orbits_up_to(int h, std::uint64_t max_size, const OrderMode& mode);

/// Canonical HNF of the lattice spanned by the generators.  Throws
/// std::invalid_argument if they do not span a finite-index sublattice.
TransitiveOrbit canonicalize(int h, const std::vector<LatticeVector>& generators);

/// |Aut_{Z^h}(T)| = |T|.
inline Integer aut_order(const TransitiveOrbit& orbit) { return orbit.size(); }

} // namespace orbigenus
