#pragma once

// Class functions on Hom(Z^h, Sigma_l) (or Hom(Z_p^h, Sigma_l)), stored
// densely over the canonical class list, with values in an exact ring
// (Rational or PsiPolynomial).
//
// Products Sigma_j x Sigma_k only appear through pairs of classes; see
// ProductClassFunction.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "orbigenus/classes.hpp"
#include "orbigenus/series.hpp"

namespace orbigenus {

/// The sorted classes of one (h, mode, l) together with their centralizer
/// orders and an index.
class ClassList {
public:
    ClassList(int h, const OrderMode& mode, std::uint64_t l);

    int rank() const { return h_; }
    const OrderMode& mode() const { return mode_; }
    std::uint64_t degree() const { return l_; }
    std::size_t size() const { return classes_.size(); }

    const std::vector<OrbitTypeMultiset>& classes() const { return classes_; }
    const OrbitTypeMultiset& operator[](std::size_t i) const { return classes_[i]; }
    const Integer& centralizer(std::size_t i) const { return centralizers_[i]; }
    /// 1 / centralizer(i).
    const Rational& weight(std::size_t i) const { return weights_[i]; }
    /// Throws std::out_of_range for a type that is not in the list.
    std::size_t index_of(const OrbitTypeMultiset& type) const;

    bool same_parameters(const ClassList& other) const
    {
        return h_ == other.h_ && mode_ == other.mode_ && l_ == other.l_;
    }

private:
    int h_;
    OrderMode mode_;
    std::uint64_t l_;
    std::vector<OrbitTypeMultiset> classes_;
    std::vector<Integer> centralizers_;
    std::vector<Rational> weights_;
    std::map<OrbitTypeMultiset, std::size_t> index_;
};

/// Shared, immutable class list; built once per parameter set (thread-safe).
std::shared_ptr<const ClassList> class_list(int h, std::uint64_t l, const OrderMode& mode);

template <CoefficientRing R>
class ClassFunction {
public:
    /// The zero function.
    explicit ClassFunction(std::shared_ptr<const ClassList> classes)
        : classes_(std::move(classes)), values_(classes_->size())
    {
    }

    ClassFunction(std::shared_ptr<const ClassList> classes, std::vector<R> values)
        : classes_(std::move(classes)), values_(std::move(values))
    {
        if (values_.size() != classes_->size())
            throw std::invalid_argument("class function: value count does not match class count");
    }

    static ClassFunction constant(int h, std::uint64_t l, const OrderMode& mode, const R& value)
    {
        auto list = class_list(h, l, mode);
        return ClassFunction(list, std::vector<R>(list->size(), value));
    }

    static ClassFunction one(int h, std::uint64_t l, const OrderMode& mode)
    {
        return constant(h, l, mode, R(Rational(1)));
    }

    /// Indicator of a single class.
    static ClassFunction indicator(const OrbitTypeMultiset& type)
    {
        auto list = class_list(type.rank(), type.degree(), type.mode());
        ClassFunction f(list);
        f.values_[list->index_of(type)] = R(Rational(1));
        return f;
    }

    const ClassList& classes() const { return *classes_; }
    const std::shared_ptr<const ClassList>& class_list_ptr() const { return classes_; }
    int rank() const { return classes_->rank(); }
    const OrderMode& mode() const { return classes_->mode(); }
    std::uint64_t degree() const { return classes_->degree(); }

    const std::vector<R>& values() const { return values_; }
    const R& operator[](std::size_t i) const { return values_[i]; }
    const R& at(const OrbitTypeMultiset& type) const { return values_[classes_->index_of(type)]; }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b)
    {
        a.require_same(b);
        ClassFunction out(a.classes_);
        for (std::size_t i = 0; i < a.values_.size(); ++i)
            out.values_[i] = a.values_[i] + b.values_[i];
        return out;
    }

    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b)
    {
        a.require_same(b);
        ClassFunction out(a.classes_);
        for (std::size_t i = 0; i < a.values_.size(); ++i)
            out.values_[i] = a.values_[i] * b.values_[i];
        return out;
    }

    ClassFunction scaled(const R& c) const
    {
        ClassFunction out(classes_);
        for (std::size_t i = 0; i < values_.size(); ++i)
            out.values_[i] = c * values_[i];
        return out;
    }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b)
    {
        return a.classes_->same_parameters(*b.classes_) && a.values_ == b.values_;
    }

    void require_same(const ClassFunction& other) const
    {
        if (!classes_->same_parameters(*other.classes_))
            throw std::invalid_argument("class function parameter mismatch");
    }

private:
    std::shared_ptr<const ClassList> classes_;
    std::vector<R> values_;
};

enum class PointwiseOp { add, mul, scale };

/// Valuewise add / mul of two functions, or scale of the first by c.
template <CoefficientRing R>
ClassFunction<R> cf_pointwise(PointwiseOp op, const ClassFunction<R>& a, const ClassFunction<R>& b, const R& c = R())
{
    switch (op) {
    case PointwiseOp::add:
        return a + b;
    case PointwiseOp::mul:
        return a * b;
    case PointwiseOp::scale:
        return a.scaled(c);
    }
    throw std::invalid_argument("cf_pointwise: unknown op");
}

/// (1/l!) sum over all tuples, computed as sum_classes chi(c) / |C(c)|.
template <CoefficientRing R>
R augmentation(const ClassFunction<R>& chi)
{
    R total;
    for (std::size_t i = 0; i < chi.classes().size(); ++i)
        if (!is_zero(chi[i]))
            total = total + chi[i] * chi.classes().weight(i);
    return total;
}

/// Strickland pairing b(chi, xi) = augmentation(chi * xi).
template <CoefficientRing R>
R inner_product(const ClassFunction<R>& chi, const ClassFunction<R>& xi)
{
    return augmentation(chi * xi);
}

/// A function on pairs of classes of Sigma_j x Sigma_k.
template <CoefficientRing R>
class ProductClassFunction {
public:
    ProductClassFunction(std::shared_ptr<const ClassList> left, std::shared_ptr<const ClassList> right)
        : left_(std::move(left)), right_(std::move(right)), values_(left_->size() * right_->size())
    {
        if (left_->rank() != right_->rank() || !(left_->mode() == right_->mode()))
            throw std::invalid_argument("product class function: parameter mismatch");
    }

    /// (a, b) -> chi(a) * xi(b).
    static ProductClassFunction tensor(const ClassFunction<R>& chi, const ClassFunction<R>& xi)
    {
        ProductClassFunction out(chi.class_list_ptr(), xi.class_list_ptr());
        for (std::size_t a = 0; a < chi.classes().size(); ++a)
            for (std::size_t b = 0; b < xi.classes().size(); ++b)
                out.set(a, b, chi[a] * xi[b]);
        return out;
    }

    const ClassList& left() const { return *left_; }
    const ClassList& right() const { return *right_; }
    const R& operator()(std::size_t a, std::size_t b) const { return values_[a * right_->size() + b]; }
    void set(std::size_t a, std::size_t b, R value) { values_[a * right_->size() + b] = std::move(value); }

    friend bool operator==(const ProductClassFunction& x, const ProductClassFunction& y)
    {
        return x.left_->same_parameters(*y.left_) && x.right_->same_parameters(*y.right_) && x.values_ == y.values_;
    }

private:
    std::shared_ptr<const ClassList> left_;
    std::shared_ptr<const ClassList> right_;
    std::vector<R> values_;
};

/// (1/(j! k!)) sum over pairs of tuples of f * g.
template <CoefficientRing R>
R inner_product(const ProductClassFunction<R>& f, const ProductClassFunction<R>& g)
{
    if (!f.left().same_parameters(g.left()) || !f.right().same_parameters(g.right()))
        throw std::invalid_argument("product inner product: parameter mismatch");
    R total;
    for (std::size_t a = 0; a < f.left().size(); ++a)
        for (std::size_t b = 0; b < f.right().size(); ++b) {
            const R v = f(a, b) * g(a, b);
            if (!is_zero(v))
                total = total + v * (f.left().weight(a) * f.right().weight(b));
        }
    return total;
}

/// Induction from Sigma_j x Sigma_k to Sigma_{j+k}: at a class m,
/// sum over splittings m = a + b of |C(m)| / (|C(a)| |C(b)|) chi(a) xi(b).
template <CoefficientRing R>
ClassFunction<R> induce_young(const ClassFunction<R>& chi, const ClassFunction<R>& xi)
{
    if (chi.rank() != xi.rank() || !(chi.mode() == xi.mode()))
        throw std::invalid_argument("induce_young: parameter mismatch");
    const auto target = class_list(chi.rank(), chi.degree() + xi.degree(), chi.mode());
    std::vector<R> values(target->size());
    const auto& left = chi.classes();
    const auto& right = xi.classes();
    for (std::size_t a = 0; a < left.size(); ++a) {
        if (is_zero(chi[a]))
            continue;
        for (std::size_t b = 0; b < right.size(); ++b) {
            if (is_zero(xi[b]))
                continue;
            const std::size_t m = target->index_of(left[a] + right[b]);
            const Rational ratio(target->centralizer(m), left.centralizer(a) * right.centralizer(b));
            values[m] = values[m] + (chi[a] * xi[b]) * ratio;
        }
    }
    return ClassFunction<R>(target, std::move(values));
}

/// Restriction to Sigma_j x Sigma_k: (a, b) -> zeta(a + b).
template <CoefficientRing R>
ProductClassFunction<R> restrict_young(const ClassFunction<R>& zeta, std::uint64_t j)
{
    if (j > zeta.degree())
        throw std::invalid_argument("restrict_young: j exceeds degree");
    const auto left = class_list(zeta.rank(), j, zeta.mode());
    const auto right = class_list(zeta.rank(), zeta.degree() - j, zeta.mode());
    ProductClassFunction<R> out(left, right);
    for (std::size_t a = 0; a < left->size(); ++a)
        for (std::size_t b = 0; b < right->size(); ++b)
            out.set(a, b, zeta.at((*left)[a] + (*right)[b]));
    return out;
}

/// Literal induced-character sum over the whole group,
///   ind(chi x xi)(alpha) = (1/(j! k!)) sum_{g in Sigma_{j+k}, g alpha g^-1 in H} (chi x xi)(g alpha g^-1),
/// evaluated on an explicit representative tuple per class.  Exponential in
/// j + k; throws GuardExceeded above the guard (default 6).
ClassFunction<Rational> induction_group_sum(const ClassFunction<Rational>& chi, const ClassFunction<Rational>& xi,
                                               std::uint64_t guard = 6);

} // namespace orbigenus
