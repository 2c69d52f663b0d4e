#pragma once

// Conjugacy classes of commuting h-tuples in Sigma_l.
//
// A commuting tuple makes {0..l-1} a Z^h-set; its conjugacy class is the
// multiset of isomorphism types of the orbits, sum a_T * T with
// sum a_T |T| = l.  The centralizer of such a tuple is
// prod_T Aut(T)^{a_T} x| Sigma_{a_T}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbigenus/lattice.hpp"
#include "orbigenus/permutation.hpp"
#include "orbigenus/rational.hpp"

namespace orbigenus {

class OrbitTypeMultiset {
public:
    using Entry = std::pair<TransitiveOrbit, std::uint32_t>;

    /// The empty type (the unique class of degree 0).
    OrbitTypeMultiset(int h, const OrderMode& mode) : h_(h), mode_(mode) {}

    /// Merges repeated orbits and sorts.  Throws std::invalid_argument if an
    /// orbit has the wrong rank or an inadmissible size for the mode.
    static OrbitTypeMultiset from_entries(int h, const OrderMode& mode, std::vector<Entry> entries);

    int rank() const { return h_; }
    const OrderMode& mode() const { return mode_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// l = sum a_T |T|.
    std::uint64_t degree() const;
    /// sum a_T.
    std::uint64_t orbit_count() const;

    /// Disjoint union.
    friend OrbitTypeMultiset operator+(const OrbitTypeMultiset& a, const OrbitTypeMultiset& b);

    /// E.g. "2*[1,0;0,1] + [1,1;0,2]"; "0" when empty.
    std::string to_string() const;

    friend bool operator==(const OrbitTypeMultiset& a, const OrbitTypeMultiset& b)
    {
        return a.h_ == b.h_ && a.mode_ == b.mode_ && a.entries_ == b.entries_;
    }
    /// Degree first, then entries lexicographically.
    friend std::strong_ordering operator<=>(const OrbitTypeMultiset& a, const OrbitTypeMultiset& b);

private:
    int h_;
    OrderMode mode_;
    std::vector<Entry> entries_;
};

/// Every conjugacy class of commuting h-tuples (of p-power-order elements in
/// PPower mode) in Sigma_l, once each, sorted.
std::vector<OrbitTypeMultiset> enumerate_classes(int h, std::uint64_t l, const OrderMode& mode);

/// prod_T |T|^{a_T} a_T!.
Integer centralizer_order(const OrbitTypeMultiset& type);

/// l! / centralizer_order.
Integer class_size(const OrbitTypeMultiset& type);

/// Orbit decomposition of the Z^h-action generated by the tuple.  The
/// stabilizer of the smallest point of each orbit is read off a breadth-first
/// traversal (Schreier generators) and canonicalized.
OrbitTypeMultiset orbit_type_of_tuple(const CommutingTuple& tuple, const OrderMode& mode);

/// A tuple of the given type, acting on the orbits in entry order with each
/// orbit realized as Z^h/L on its reduced coset representatives.
CommutingTuple representative_tuple(const OrbitTypeMultiset& type);

/// Raised by the exhaustive oracles instead of running past their size limit.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default brute-force limit on l: 6 for h <= 2, 5 for h = 3, 4 beyond.
std::uint64_t default_guard(int h);

struct BruteForceClass {
    OrbitTypeMultiset type;
    Integer tuple_count;
};

/// Exhaustive oracle: runs over all commuting h-tuples of mode-admissible
/// permutations of degree l and buckets them by orbit type.  Result sorted
/// by type; tuple counts sum to |Hom(Z^h, Sigma_l)| (resp. Z_p^h).
/// Throws GuardExceeded when l exceeds the guard.
std::vector<BruteForceClass> brute_force_classes(int h, std::uint64_t l, const OrderMode& mode,
                                                 std::optional<std::uint64_t> guard = std::nullopt);

/// All permutations of degree l whose order is admissible for the mode.
std::vector<Permutation> admissible_permutations(std::uint64_t l, const OrderMode& mode);

} // namespace orbigenus
