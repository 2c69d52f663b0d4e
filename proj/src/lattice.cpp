#include "orbigenus/lattice.hpp"

#include <algorithm>
#include <compare>
#include <sstream>
#include <stdexcept>

namespace orbigenus {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

OrderMode OrderMode::p_power(std::uint64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("order mode: " + std::to_string(p) + " is not prime");
    return OrderMode(p);
}

bool OrderMode::admits(std::uint64_t n) const
{
    if (n == 0)
        return false;
    if (is_all_orders())
        return true;
    while (n % p_ == 0)
        n /= p_;
    return n == 1;
}

std::string OrderMode::to_string() const
{
    return is_all_orders() ? std::string("all") : "p=" + std::to_string(p_);
}

TransitiveOrbit::TransitiveOrbit(int h, std::vector<std::int64_t> hnf) : h_(h), hnf_(std::move(hnf))
{
    size_ = 1;
    for (int i = 0; i < h_; ++i)
        size_ *= Integer(static_cast<long>(entry(i, i)));
    if (!size_.fits_ulong_p())
        throw std::invalid_argument("orbit too large");
    order_ = size_.get_ui();
}

TransitiveOrbit TransitiveOrbit::trivial(int h)
{
    if (h < 1)
        throw std::invalid_argument("orbit rank must be positive");
    std::vector<std::int64_t> id(static_cast<std::size_t>(h * h), 0);
    for (int i = 0; i < h; ++i)
        id[i * h + i] = 1;
    return TransitiveOrbit(h, std::move(id));
}

TransitiveOrbit TransitiveOrbit::from_hnf(int h, std::vector<std::int64_t> row_major)
{
    if (h < 1)
        throw std::invalid_argument("orbit rank must be positive");
    if (row_major.size() != static_cast<std::size_t>(h * h))
        throw std::invalid_argument("hnf must have h*h entries");
    for (int i = 0; i < h; ++i) {
        if (row_major[i * h + i] <= 0)
            throw std::invalid_argument("hnf diagonal must be positive");
        for (int j = 0; j < i; ++j)
            if (row_major[i * h + j] != 0)
                throw std::invalid_argument("hnf must be upper triangular");
        for (int j = i + 1; j < h; ++j) {
            const auto v = row_major[i * h + j];
            if (v < 0 || v >= row_major[j * h + j])
                throw std::invalid_argument("hnf off-diagonal entry not reduced");
        }
    }
    return TransitiveOrbit(h, std::move(row_major));
}

TransitiveOrbit TransitiveOrbit::from_rows(const std::vector<LatticeVector>& rows)
{
    const int h = static_cast<int>(rows.size());
    std::vector<std::int64_t> flat;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != h)
            throw std::invalid_argument("hnf must be square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_hnf(h, std::move(flat));
}

std::vector<LatticeVector> TransitiveOrbit::rows() const
{
    std::vector<LatticeVector> out;
    for (int i = 0; i < h_; ++i)
        out.emplace_back(hnf_.begin() + i * h_, hnf_.begin() + (i + 1) * h_);
    return out;
}

std::vector<std::int64_t> TransitiveOrbit::diagonal() const
{
    std::vector<std::int64_t> d(h_);
    for (int i = 0; i < h_; ++i)
        d[i] = entry(i, i);
    return d;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

LatticeVector TransitiveOrbit::reduce(LatticeVector v) const
{
    if (static_cast<int>(v.size()) != h_)
        throw std::invalid_argument("vector rank mismatch");
    for (int j = 0; j < h_; ++j) {
        const auto q = floor_div(v[j], entry(j, j));
        if (q != 0)
            for (int c = j; c < h_; ++c)
                v[c] -= q * entry(j, c);
    }
    return v;
}

std::vector<LatticeVector> TransitiveOrbit::elements() const
{
    std::vector<LatticeVector> out;
    out.reserve(order_);
    LatticeVector v(h_, 0);
    while (true) {
        out.push_back(v);
        int pos = h_ - 1;
        while (pos >= 0 && ++v[pos] == entry(pos, pos))
            v[pos--] = 0;
        if (pos < 0)
            break;
    }
    return out;
}

std::size_t TransitiveOrbit::index_of(const LatticeVector& reduced) const
{
    std::size_t index = 0;
    for (int j = 0; j < h_; ++j)
        index = index * static_cast<std::size_t>(entry(j, j)) + static_cast<std::size_t>(reduced[j]);
    return index;
}

std::string TransitiveOrbit::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < h_; ++i) {
        if (i)
            os << ';';
        for (int j = 0; j < h_; ++j)
            os << (j ? "," : "") << entry(i, j);
    }
    os << ']';
    return os.str();
}

std::strong_ordering operator<=>(const TransitiveOrbit& a, const TransitiveOrbit& b)
{
    if (auto c = a.h_ <=> b.h_; c != 0)
        return c;
    if (auto c = a.order_ <=> b.order_; c != 0)
        return c;
    const int h = a.h_;
    for (int i = 0; i < h; ++i)
        if (auto c = a.entry(i, i) <=> b.entry(i, i); c != 0)
            return c;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            if (auto c = a.entry(i, j) <=> b.entry(i, j); c != 0)
                return c;
    return std::strong_ordering::equal;
}

namespace {

void diagonals(int h, std::uint64_t n, std::vector<std::int64_t>& prefix,
               std::vector<std::vector<std::int64_t>>& out)
{
    if (static_cast<int>(prefix.size()) == h - 1) {
        prefix.push_back(static_cast<std::int64_t>(n));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        prefix.push_back(static_cast<std::int64_t>(d));
        diagonals(h, n / d, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<TransitiveOrbit> enumerate_orbits(int h, std::uint64_t n, const OrderMode& mode)
{
    if (h < 1)
        throw std::invalid_argument("enumerate_orbits: h must be >= 1");
    if (n < 1)
        throw std::invalid_argument("enumerate_orbits: size must be >= 1");
    if (!mode.admits(n))
        throw std::invalid_argument("enumerate_orbits: " + std::to_string(n) + " is not a power of " +
                                    std::to_string(mode.prime()));

    std::vector<std::vector<std::int64_t>> diags;
    std::vector<std::int64_t> prefix;
    diagonals(h, n, prefix, diags);

    std::vector<TransitiveOrbit> out;
    for (const auto& d : diags) {
        // Odometer over the strictly-upper entries in row-major order.
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j)
                slots.emplace_back(i, j);
        std::vector<std::int64_t> m(static_cast<std::size_t>(h * h), 0);
        for (int i = 0; i < h; ++i)
            m[i * h + i] = d[i];
        while (true) {
            out.push_back(TransitiveOrbit::from_hnf(h, m));
            int pos = static_cast<int>(slots.size()) - 1;
            while (pos >= 0) {
                auto [i, j] = slots[pos];
                if (++m[i * h + j] < d[j])
                    break;
                m[i * h + j] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    }
    return out;
}

std::vector<TransitiveOrbit> orbits_up_to(int h, std::uint64_t max_size, const OrderMode& mode)
{
    std::vector<TransitiveOrbit> out;
    for (std::uint64_t n = 1; n <= max_size; ++n) {
        if (!mode.admits(n))
            continue;
        auto level = enumerate_orbits(h, n, mode);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

TransitiveOrbit canonicalize(int h, const std::vector<LatticeVector>& generators)
{
    if (h < 1)
        throw std::invalid_argument("canonicalize: h must be >= 1");
    std::vector<std::vector<Integer>> m;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != h)
            throw std::invalid_argument("canonicalize: generator has wrong length");
        std::vector<Integer> row;
        for (auto x : g)
            row.emplace_back(static_cast<long>(x));
        m.push_back(std::move(row));
    }
    const std::size_t rows = m.size();
    const auto axpy = [&](std::size_t dst, const Integer& q, std::size_t src, int from) {
        for (int c = from; c < h; ++c)
            m[dst][c] -= q * m[src][c];
    };

    for (int j = 0; j < h; ++j) {
        const std::size_t r = static_cast<std::size_t>(j);
        // Euclid on column j over rows r..end until at most one is nonzero.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m[i][j] != 0 && (best == rows || abs(m[i][j]) < abs(m[best][j])))
                    best = i;
            if (best == rows)
                throw std::invalid_argument("canonicalize: generators do not span a finite-index sublattice");
            std::swap(m[r], m[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m[i][j] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[r][j].get_mpz_t());
                axpy(i, q, r, j);
                if (m[i][j] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (m[r][j] < 0)
            for (int c = j; c < h; ++c)
                m[r][c] = -m[r][c];
    }
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < j; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[j][j].get_mpz_t());
            if (q != 0)
                axpy(static_cast<std::size_t>(i), q, static_cast<std::size_t>(j), j);
        }

    std::vector<std::int64_t> flat;
    for (int i = 0; i < h; ++i)
        for (int c = 0; c < h; ++c) {
            if (!m[i][c].fits_slong_p())
                throw std::invalid_argument("canonicalize: lattice index too large");
            flat.push_back(m[i][c].get_si());
        }
    return TransitiveOrbit::from_hnf(h, std::move(flat));
}

} // namespace orbigenus
