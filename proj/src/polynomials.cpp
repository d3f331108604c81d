#include "sgs/polynomials.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "sgs/error.hpp"

namespace sgs {

namespace {

// Checked arithmetic so the Faddeev-LeVerrier loop can run on machine
// integers and fall back to GMP when a value leaves int64 range.
bool add_to(std::int64_t& acc, std::int64_t v) { return !__builtin_add_overflow(acc, v, &acc); }
bool add_to(mpz_class& acc, const mpz_class& v) {
    acc += v;
    return true;
}
bool negate_to(std::int64_t& v) { return !__builtin_sub_overflow(std::int64_t{0}, v, &v); }
bool negate_to(mpz_class& v) {
    v = -v;
    return true;
}
std::int64_t exact_div(std::int64_t a, std::int64_t k) { return a / k; }
mpz_class exact_div(const mpz_class& a, std::int64_t k) {
    mpz_class out;
    mpz_divexact_ui(out.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

// Coefficients c_0..c_n of det(xI - A), lowest degree first.
template <typename T>
std::optional<std::vector<T>> faddeev_leverrier(const SignedGraph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    std::vector<T> m(n * n, T(0));   // M_k
    std::vector<T> am(n * n, T(0));  // A * M_k
    for (std::size_t k = 1; k <= n; ++k) {
        m = am;
        for (std::size_t i = 0; i < n; ++i)
            if (!add_to(m[i * n + i], c[n - k + 1])) return std::nullopt;
        for (auto& x : am) x = T(0);
        for (std::size_t i = 0; i < n; ++i) {
            for (Vertex j : g.neighbors(static_cast<Vertex>(i))) {
                const int s = g.sign(static_cast<Vertex>(i), j);
                const auto* row = &m[static_cast<std::size_t>(j) * n];
                auto* out = &am[i * n];
                for (std::size_t col = 0; col < n; ++col) {
                    T term = row[col];
                    if (s < 0 && !negate_to(term)) return std::nullopt;
                    if (!add_to(out[col], term)) return std::nullopt;
                }
            }
        }
        T trace(0);
        for (std::size_t i = 0; i < n; ++i)
            if (!add_to(trace, am[i * n + i])) return std::nullopt;
        if (!negate_to(trace)) return std::nullopt;
        c[n - k] = exact_div(trace, static_cast<std::int64_t>(k));
    }
    return c;
}

IntPolynomial connected_char_poly(const SignedGraph& g) {
    if (auto fast = faddeev_leverrier<std::int64_t>(g)) {
        std::vector<mpz_class> coeffs;
        coeffs.reserve(fast->size());
        for (auto c : *fast) coeffs.emplace_back(static_cast<long>(c));
        return IntPolynomial(std::move(coeffs));
    }
    return IntPolynomial(*faddeev_leverrier<mpz_class>(g));
}

// Depth-first enumeration of basic figures. Vertices are decided in
// ascending order; a cycle is placed only from its smallest vertex and in
// the orientation whose second vertex is smaller than its last.
class BasicFigureWalk {
public:
    explicit BasicFigureWalk(const SignedGraph& g)
        : g_(g), n_(g.order()), totals_(static_cast<std::size_t>(g.order()) + 1) {}

    std::vector<mpz_class> run() {
        place(0, 0, 0, 0, 0, 1);
        return totals_;
    }

private:
    void place(Vertex v, std::uint32_t used, int covered, int parts, int cycles, int sign) {
        while (v < n_ && (used >> v & 1u)) ++v;
        if (v == n_) {
            mpz_class term = 1;
            term <<= static_cast<unsigned long>(cycles);
            if (parts % 2 == 1) term = -term;
            if (sign < 0) term = -term;
            totals_[static_cast<std::size_t>(covered)] += term;
            return;
        }
        // v stays outside the figure.
        place(v + 1, used | (1u << v), covered, parts, cycles, sign);
        // v covered by a single edge.
        for (Vertex u : g_.neighbors(v)) {
            if (u > v && !(used >> u & 1u))
                place(v + 1, used | (1u << v) | (1u << u), covered + 2, parts + 1, cycles, sign);
        }
        // v is the smallest vertex of a cycle.
        path_.assign(1, v);
        extend_cycle(v, used | (1u << v), covered, parts, cycles, sign, 1);
    }

    void extend_cycle(Vertex start, std::uint32_t used, int covered, int parts, int cycles, int sign,
                      int path_sign) {
        const Vertex tail = path_.back();
        for (Vertex w : g_.neighbors(tail)) {
            if (w <= start || (used >> w & 1u)) continue;
            const int s = path_sign * g_.sign(tail, w);
            path_.push_back(w);
            if (path_.size() >= 3 && path_[1] < w && g_.adjacent(w, start)) {
                auto saved = path_;
                place(start + 1, used | (1u << w), covered + static_cast<int>(path_.size()), parts + 1,
                      cycles + 1, sign * s * g_.sign(w, start));
                path_ = std::move(saved);
            }
            extend_cycle(start, used | (1u << w), covered, parts, cycles, sign, s);
            path_.pop_back();
        }
    }

    const SignedGraph& g_;
    int n_;
    std::vector<mpz_class> totals_;
    std::vector<Vertex> path_;
};

mpz_class pow_minus_two(int p) {
    mpz_class out = 1;
    out <<= static_cast<unsigned long>(p);
    return p % 2 == 1 ? mpz_class(-out) : out;
}

IntPolynomial sum_over(const TwoRegularCatalog& catalog, MatchingPolynomials& matchings, bool odd_only) {
    IntPolynomial out;
    for (const auto& c : catalog.all) {
        if (odd_only && !c.odd()) continue;
        mpz_class factor = pow_minus_two(c.cycle_count());
        if (c.sign < 0) factor = -factor;
        out.add_scaled(matchings.without(c.vertices), factor);
    }
    return out;
}

}  // namespace

IntPolynomial char_poly(const SignedGraph& g) {
    IntPolynomial out{1};
    for (const auto& comp : g.components()) {
        if (comp.size() == static_cast<std::size_t>(g.order())) return connected_char_poly(g);
        std::vector<char> keep(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : comp) keep[static_cast<std::size_t>(v)] = 1;
        std::vector<Vertex> removed;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!keep[static_cast<std::size_t>(v)]) removed.push_back(v);
        out = out * connected_char_poly(g.remove_vertices(removed));
    }
    return out;
}

MatchingPolynomials::MatchingPolynomials(const SignedGraph& g) : n_(g.order()) {
    if (n_ > kMaxMatchingOrder)
        throw ResourceLimitError("matching polynomial supports at most " + std::to_string(kMaxMatchingOrder) +
                                 " vertices");
    nbr_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& e : g.edges()) {
        nbr_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        nbr_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
}

std::uint64_t MatchingPolynomials::full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

const IntPolynomial& MatchingPolynomials::without(std::span<const Vertex> removed) {
    std::uint64_t mask = full_mask();
    for (Vertex v : removed) mask &= ~(std::uint64_t{1} << v);
    return of_mask(mask);
}

const IntPolynomial& MatchingPolynomials::of_mask(std::uint64_t remaining) {
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    IntPolynomial value;
    if (remaining == 0) {
        value = IntPolynomial{1};
    } else {
        const int v = std::countr_zero(remaining);
        const std::uint64_t rest = remaining & ~(std::uint64_t{1} << v);
        value.add_scaled(of_mask(rest), 1, 1);
        for (std::uint64_t nb = nbr_[static_cast<std::size_t>(v)] & rest; nb != 0; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            value -= of_mask(rest & ~(std::uint64_t{1} << u));
        }
    }
    return memo_.emplace(remaining, std::move(value)).first->second;
}

IntPolynomial matching_poly(const SignedGraph& g) {
    MatchingPolynomials m(g);
    return m.whole();
}

std::vector<mpz_class> sachs_coefficients(const SignedGraph& g) {
    if (g.order() > kMaxSachsOrder)
        throw ResourceLimitError("basic-figure enumeration supports at most " + std::to_string(kMaxSachsOrder) +
                                 " vertices");
    return BasicFigureWalk(g).run();
}

mpz_class sachs_coefficient(const SignedGraph& g, int i) {
    if (i < 0 || i > g.order()) throw InputError("coefficient index out of range");
    return sachs_coefficients(g)[static_cast<std::size_t>(i)];
}

IntPolynomial odd_part(const TwoRegularCatalog& catalog, MatchingPolynomials& matchings) {
    return sum_over(catalog, matchings, true);
}

IntPolynomial odd_part(const SignedGraph& g) {
    MatchingPolynomials m(g);
    return odd_part(enumerate_two_regular(g, spanning_forest(g)), m);
}

IntPolynomial two_regular_expansion(const TwoRegularCatalog& catalog, MatchingPolynomials& matchings) {
    IntPolynomial out = matchings.whole();
    out += sum_over(catalog, matchings, false);
    return out;
}

IntPolynomial two_regular_expansion(const SignedGraph& g) {
    MatchingPolynomials m(g);
    return two_regular_expansion(enumerate_two_regular(g, spanning_forest(g)), m);
}

bool has_symmetric_spectrum(const IntPolynomial& phi) {
    const int n = phi.degree();
    for (int p = n - 1; p >= 0; p -= 2)
        if (phi.coeff(p) != 0) return false;
    return true;
}

bool is_spectrally_symmetric(const SignedGraph& g) { return has_symmetric_spectrum(char_poly(g)); }

}  // namespace sgs
