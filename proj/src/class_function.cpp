#include "orbigenus/class_function.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <tuple>

namespace orbigenus {

ClassList::ClassList(int h, const OrderMode& mode, std::uint64_t l)
    : h_(h), mode_(mode), l_(l), classes_(enumerate_classes(h, l, mode))
{
    centralizers_.reserve(classes_.size());
    weights_.reserve(classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        centralizers_.push_back(centralizer_order(classes_[i]));
        weights_.emplace_back(Integer(1), centralizers_.back());
        index_.emplace(classes_[i], i);
    }
}

std::size_t ClassList::index_of(const OrbitTypeMultiset& type) const
{
    const auto it = index_.find(type);
    if (it == index_.end())
        throw std::out_of_range("class " + type.to_string() + " is not in the class list");
    return it->second;
}

std::shared_ptr<const ClassList> class_list(int h, std::uint64_t l, const OrderMode& mode)
{
    static std::mutex mutex;
    static std::map<std::tuple<int, std::uint64_t, std::uint64_t>, std::shared_ptr<const ClassList>> cache;
    const auto key = std::make_tuple(h, mode.prime(), l);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto built = std::make_shared<const ClassList>(h, mode, l);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(built)).first->second;
}

namespace {

// Restricts a tuple preserving {offset..offset+count-1} to that block.
CommutingTuple restrict_block(const std::vector<Permutation>& tuple, std::uint32_t offset, std::uint32_t count,
                              const OrderMode& mode)
{
    std::vector<Permutation> parts;
    for (const auto& g : tuple) {
        std::vector<std::uint32_t> image(count);
        for (std::uint32_t x = 0; x < count; ++x)
            image[x] = g(offset + x) - offset;
        parts.emplace_back(std::move(image));
    }
    return CommutingTuple(std::move(parts), mode);
}

} // namespace

ClassFunction<Rational> induction_group_sum(const ClassFunction<Rational>& chi, const ClassFunction<Rational>& xi,
                                               std::uint64_t guard)
{
    if (chi.rank() != xi.rank() || !(chi.mode() == xi.mode()))
        throw std::invalid_argument("induction_group_sum: parameter mismatch");
    const std::uint64_t j = chi.degree();
    const std::uint64_t k = xi.degree();
    const std::uint64_t l = j + k;
    if (l > guard)
        throw GuardExceeded("induction oracle refuses degree " + std::to_string(l) + " above guard " +
                            std::to_string(guard));
    const int h = chi.rank();
    const auto& mode = chi.mode();
    const auto target = class_list(h, l, mode);
    const Rational inv_h(Integer(1), factorial(j) * factorial(k));

    std::vector<Rational> values(target->size());
    for (std::size_t m = 0; m < target->size(); ++m) {
        const auto alpha = representative_tuple((*target)[m]);
        std::vector<std::uint32_t> g_image(l);
        std::iota(g_image.begin(), g_image.end(), 0u);
        Rational sum;
        do {
            const Permutation g(g_image);
            std::vector<Permutation> conj;
            bool in_young = true;
            for (const auto& a : alpha.entries()) {
                conj.push_back(a.conjugated_by(g));
                for (std::uint32_t x = 0; x < j && in_young; ++x)
                    if (conj.back()(x) >= j)
                        in_young = false;
                if (!in_young)
                    break;
            }
            if (!in_young)
                continue;
            const auto left = orbit_type_of_tuple(restrict_block(conj, 0, static_cast<std::uint32_t>(j), mode), mode);
            const auto right = orbit_type_of_tuple(
                restrict_block(conj, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), mode), mode);
            sum += chi.at(left) * xi.at(right);
        } while (std::next_permutation(g_image.begin(), g_image.end()));
        values[m] = sum * inv_h;
    }
    return ClassFunction<Rational>(target, std::move(values));
}

} // namespace orbigenus
