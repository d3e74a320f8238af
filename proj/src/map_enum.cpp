#include "eo/map_enum.hpp"

#include <functional>

namespace eo {

int DartMap::genus() const {
    const int darts = 4 * n;
    std::vector<bool> seen(static_cast<size_t>(darts), false);
    int faces = 0;
    for (int d = 0; d < darts; ++d) {
        if (seen[static_cast<size_t>(d)]) continue;
        ++faces;
        int cur = d;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            cur = sigma(alpha[static_cast<size_t>(cur)]);
        }
    }
    // V - E + F = 2 - 2g with V = n, E = 2n
    int euler = n - 2 * n + faces;
    return (2 - euler) / 2;
}

std::vector<DartMap> gen_quartic_maps(int n, int genus, int cap, bool allow_slow) {
    if (n < 1) throw BadParameter("need at least one vertex");
    if (n > cap && !allow_slow)
        throw CapExceeded("vertex count " + std::to_string(n) + " above cap " +
                          std::to_string(cap) + "; pass the slow flag to override");
    std::vector<DartMap> out;
    const int darts = 4 * n;
    std::vector<int> alpha(static_cast<size_t>(darts), -1);
    int blocks = 1;  // root vertex exists up front

    std::function<void(int)> rec = [&](int d) {
        int limit = 4 * blocks;
        if (d == limit) {
            if (blocks == n) {
                DartMap m;
                m.n = n;
                m.alpha = alpha;
                if (m.genus() == genus) out.push_back(std::move(m));
            }
            return;
        }
        if (alpha[static_cast<size_t>(d)] >= 0) {
            rec(d + 1);
            return;
        }
        // open a fresh vertex block, entered at its first dart
        if (blocks < n) {
            int e = 4 * blocks;
            ++blocks;
            alpha[static_cast<size_t>(d)] = e;
            alpha[static_cast<size_t>(e)] = d;
            rec(d + 1);
            alpha[static_cast<size_t>(d)] = -1;
            alpha[static_cast<size_t>(e)] = -1;
            --blocks;
        }
        // or match a later unmatched dart among existing blocks
        for (int e = d + 1; e < limit; ++e) {
            if (alpha[static_cast<size_t>(e)] >= 0) continue;
            alpha[static_cast<size_t>(d)] = e;
            alpha[static_cast<size_t>(e)] = d;
            rec(d + 1);
            alpha[static_cast<size_t>(d)] = -1;
            alpha[static_cast<size_t>(e)] = -1;
        }
    };
    rec(0);
    return out;
}

Rational planar_quartic_count_formula(int n) {
    // 2 * 3^n * (2n)! / (n! (n+2)!)
    mpz_class num = factorial_mpz(static_cast<unsigned>(2 * n)) * 2;
    mpz_class three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned>(n));
    num *= three;
    mpz_class den = factorial_mpz(static_cast<unsigned>(n)) *
                    factorial_mpz(static_cast<unsigned>(n + 2));
    return Rational(mpq_class(num) / mpq_class(den));
}

GammaPoly eo_polynomial(const DartMap& m) {
    const int edges = 2 * m.n;
    const int darts = 4 * m.n;
    // enumerate the tail dart of each edge; orientation bit per edge
    std::vector<std::pair<int, int>> edge_darts;
    edge_darts.reserve(static_cast<size_t>(edges));
    for (int d = 0; d < darts; ++d)
        if (d < m.alpha[static_cast<size_t>(d)]) edge_darts.emplace_back(d, m.alpha[static_cast<size_t>(d)]);

    std::vector<long> by_alt_count(static_cast<size_t>(m.n) + 1, 0);
    std::vector<int> outgoing(static_cast<size_t>(darts));
    for (unsigned long mask = 0; mask < (1UL << edges); ++mask) {
        for (int i = 0; i < edges; ++i) {
            auto [a, b] = edge_darts[static_cast<size_t>(i)];
            bool a_is_tail = ((mask >> i) & 1UL) == 0;
            outgoing[static_cast<size_t>(a)] = a_is_tail ? 1 : 0;
            outgoing[static_cast<size_t>(b)] = a_is_tail ? 0 : 1;
        }
        if (!outgoing[0]) continue;  // root dart must point away
        bool ok = true;
        int alternating = 0;
        for (int v = 0; v < m.n && ok; ++v) {
            int base = 4 * v;
            int deg_out = outgoing[static_cast<size_t>(base)] + outgoing[static_cast<size_t>(base + 1)] +
                          outgoing[static_cast<size_t>(base + 2)] + outgoing[static_cast<size_t>(base + 3)];
            if (deg_out != 2) {
                ok = false;
                break;
            }
            if (outgoing[static_cast<size_t>(base)] == outgoing[static_cast<size_t>(base + 2)]) ++alternating;
        }
        if (ok) ++by_alt_count[static_cast<size_t>(alternating)];
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(by_alt_count.size());
    for (long c : by_alt_count) coeffs.emplace_back(c);
    return GammaPoly(std::move(coeffs));
}

GammaPoly count_eo_gamma(int n, int cap, bool allow_slow) {
    GammaPoly total;
    for (const DartMap& m : gen_quartic_maps(n, 0, cap, allow_slow)) total += eo_polynomial(m);
    return total;
}

}  // namespace eo
