#include "orbigenus/classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace orbigenus {

OrbitTypeMultiset OrbitTypeMultiset::from_entries(int h, const OrderMode& mode, std::vector<Entry> entries)
{
    for (const auto& [orbit, mult] : entries) {
        if (orbit.rank() != h)
            throw std::invalid_argument("orbit type: orbit rank differs from h");
        if (!mode.admits(orbit.order()))
            throw std::invalid_argument("orbit type: orbit size " + std::to_string(orbit.order()) +
                                        " not admissible for mode " + mode.to_string());
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    OrbitTypeMultiset out(h, mode);
    for (auto& e : entries) {
        if (e.second == 0)
            continue;
        if (!out.entries_.empty() && out.entries_.back().first == e.first)
            out.entries_.back().second += e.second;
        else
            out.entries_.push_back(std::move(e));
    }
    return out;
}

std::uint64_t OrbitTypeMultiset::degree() const
{
    std::uint64_t l = 0;
    for (const auto& [orbit, mult] : entries_)
        l += orbit.order() * mult;
    return l;
}

std::uint64_t OrbitTypeMultiset::orbit_count() const
{
    std::uint64_t n = 0;
    for (const auto& e : entries_)
        n += e.second;
    return n;
}

OrbitTypeMultiset operator+(const OrbitTypeMultiset& a, const OrbitTypeMultiset& b)
{
    if (a.h_ != b.h_ || !(a.mode_ == b.mode_))
        throw std::invalid_argument("orbit type union: parameter mismatch");
    auto entries = a.entries_;
    entries.insert(entries.end(), b.entries_.begin(), b.entries_.end());
    return OrbitTypeMultiset::from_entries(a.h_, a.mode_, std::move(entries));
}

std::string OrbitTypeMultiset::to_string() const
{
    if (entries_.empty())
        return "0";
    std::string out;
    for (const auto& [orbit, mult] : entries_) {
        if (!out.empty())
            out += " + ";
        if (mult > 1)
            out += std::to_string(mult) + "*";
        out += orbit.to_string();
    }
    return out;
}

std::strong_ordering operator<=>(const OrbitTypeMultiset& a, const OrbitTypeMultiset& b)
{
    if (auto c = a.h_ <=> b.h_; c != 0)
        return c;
    if (auto c = a.mode_.prime() <=> b.mode_.prime(); c != 0)
        return c;
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

namespace {

void collect_classes(const std::vector<TransitiveOrbit>& orbits, std::size_t index, std::uint64_t remaining,
                     std::vector<OrbitTypeMultiset::Entry>& chosen, int h, const OrderMode& mode,
                     std::vector<OrbitTypeMultiset>& out)
{
    if (remaining == 0) {
        out.push_back(OrbitTypeMultiset::from_entries(h, mode, chosen));
        return;
    }
    if (index == orbits.size())
        return;
    const auto& orbit = orbits[index];
    const std::uint64_t size = orbit.order();
    for (std::uint32_t mult = 0; mult * size <= remaining; ++mult) {
        if (mult > 0)
            chosen.emplace_back(orbit, mult);
        collect_classes(orbits, index + 1, remaining - mult * size, chosen, h, mode, out);
        if (mult > 0)
            chosen.pop_back();
    }
}

} // namespace

std::vector<OrbitTypeMultiset> enumerate_classes(int h, std::uint64_t l, const OrderMode& mode)
{
    if (h < 1)
        throw std::invalid_argument("enumerate_classes: h must be >= 1");
    const auto orbits = orbits_up_to(h, l, mode);
    std::vector<OrbitTypeMultiset> out;
    std::vector<OrbitTypeMultiset::Entry> chosen;
    collect_classes(orbits, 0, l, chosen, h, mode, out);
    std::sort(out.begin(), out.end());
    return out;
}

Integer centralizer_order(const OrbitTypeMultiset& type)
{
    Integer order = 1;
    for (const auto& [orbit, mult] : type.entries())
        order *= power(aut_order(orbit), mult) * factorial(mult);
    return order;
}

Integer class_size(const OrbitTypeMultiset& type)
{
    Integer n = factorial(type.degree());
    Integer c = centralizer_order(type);
    Integer q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
    return q;
}

OrbitTypeMultiset orbit_type_of_tuple(const CommutingTuple& tuple, const OrderMode& mode)
{
    const int h = tuple.rank();
    const std::size_t l = tuple.degree();
    for (const auto& g : tuple.entries())
        if (!mode.admits(g.order()))
            throw std::invalid_argument("orbit_type_of_tuple: entry order not admissible for mode");

    std::vector<bool> visited(l, false);
    std::vector<LatticeVector> exponent(l);
    std::vector<OrbitTypeMultiset::Entry> entries;
    for (std::uint32_t base = 0; base < l; ++base) {
        if (visited[base])
            continue;
        std::vector<std::uint32_t> orbit{base};
        visited[base] = true;
        exponent[base] = LatticeVector(h, 0);
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            const auto x = orbit[head];
            for (int i = 0; i < h; ++i) {
                const auto y = tuple[i](x);
                if (visited[y])
                    continue;
                visited[y] = true;
                exponent[y] = exponent[x];
                ++exponent[y][i];
                orbit.push_back(y);
            }
        }
        // Schreier generators e(x) + e_i - e(g_i x) span the stabilizer.
        std::vector<LatticeVector> generators;
        for (const auto x : orbit)
            for (int i = 0; i < h; ++i) {
                LatticeVector v = exponent[x];
                ++v[i];
                const auto& ey = exponent[tuple[i](x)];
                for (int c = 0; c < h; ++c)
                    v[c] -= ey[c];
                if (std::any_of(v.begin(), v.end(), [](auto c) { return c != 0; }))
                    generators.push_back(std::move(v));
            }
        if (orbit.size() == 1)
            entries.emplace_back(TransitiveOrbit::trivial(h), 1);
        else
            entries.emplace_back(canonicalize(h, generators), 1);
    }
    return OrbitTypeMultiset::from_entries(h, mode, std::move(entries));
}

CommutingTuple representative_tuple(const OrbitTypeMultiset& type)
{
    const int h = type.rank();
    const std::size_t l = type.degree();
    std::vector<std::vector<std::uint32_t>> images(h, std::vector<std::uint32_t>(l));
    std::uint32_t offset = 0;
    for (const auto& [orbit, mult] : type.entries()) {
        const auto elements = orbit.elements();
        for (std::uint32_t copy = 0; copy < mult; ++copy) {
            for (std::size_t k = 0; k < elements.size(); ++k)
                for (int i = 0; i < h; ++i) {
                    LatticeVector v = elements[k];
                    ++v[i];
                    images[i][offset + k] = offset + static_cast<std::uint32_t>(orbit.index_of(orbit.reduce(v)));
                }
            offset += static_cast<std::uint32_t>(elements.size());
        }
    }
    std::vector<Permutation> perms;
    for (auto& im : images)
        perms.emplace_back(std::move(im));
    return CommutingTuple(std::move(perms), type.mode());
}

std::uint64_t default_guard(int h)
{
    if (h <= 2)
        return 6;
    if (h == 3)
        return 5;
    return 4;
}

std::vector<Permutation> admissible_permutations(std::uint64_t l, const OrderMode& mode)
{
    std::vector<std::uint32_t> image(l);
    std::iota(image.begin(), image.end(), 0u);
    std::vector<Permutation> out;
    do {
        Permutation p(image);
        if (mode.admits(p.order()))
            out.push_back(std::move(p));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

namespace {

void extend_tuples(const std::vector<Permutation>& candidates, std::vector<Permutation>& prefix, int h,
                   const OrderMode& mode, std::map<OrbitTypeMultiset, Integer>& buckets)
{
    if (static_cast<int>(prefix.size()) == h) {
        const auto type = orbit_type_of_tuple(CommutingTuple(prefix, mode), mode);
        buckets[type] += 1;
        return;
    }
    for (const auto& g : candidates) {
        if (!std::all_of(prefix.begin(), prefix.end(), [&](const Permutation& f) { return f.commutes_with(g); }))
            continue;
        prefix.push_back(g);
        extend_tuples(candidates, prefix, h, mode, buckets);
        prefix.pop_back();
    }
}

} // namespace

std::vector<BruteForceClass> brute_force_classes(int h, std::uint64_t l, const OrderMode& mode,
                                                 std::optional<std::uint64_t> guard)
{
    if (h < 1)
        throw std::invalid_argument("brute_force_classes: h must be >= 1");
    const std::uint64_t limit = guard.value_or(default_guard(h));
    if (l > limit)
        throw GuardExceeded("brute-force oracle refuses l=" + std::to_string(l) + " above guard " +
                            std::to_string(limit) + " for h=" + std::to_string(h));
    const auto candidates = admissible_permutations(l, mode);
    std::map<OrbitTypeMultiset, Integer> buckets;
    std::vector<Permutation> prefix;
    extend_tuples(candidates, prefix, h, mode, buckets);
    std::vector<BruteForceClass> out;
    for (auto& [type, count] : buckets)
        out.push_back({type, count});
    return out;
}

} // namespace orbigenus
