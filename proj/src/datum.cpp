#include "prym/datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "prym/error.hpp"

namespace prym {

PrymDatum validate_datum(const FiniteGroup& G, std::vector<Elem> tuple, Elem sigma) {
    if (tuple.size() < 4) throw DatumError("tuple length must be at least 4");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= G.order())
            throw DatumError("tuple entry " + std::to_string(i + 1) + " is not a group element");
        if (tuple[i] == 0) throw DatumError("identity entry in tuple (position " + std::to_string(i + 1) + ")");
    }
    if (sigma < 0 || sigma >= G.order()) throw DatumError("sigma is not a group element");

    Elem prod = 0;
    for (Elem x : tuple) prod = G.mul(prod, x);
    if (prod != 0) throw DatumError("product ≠ identity");
    if (!generates(G, tuple)) throw DatumError("tuple does not generate");
    auto invols = central_involutions(G);
    if (std::find(invols.begin(), invols.end(), sigma) == invols.end())
        throw DatumError("sigma not a central involution");

    PrymDatum d;
    d.group = G;
    d.tuple = std::move(tuple);
    d.sigma = sigma;
    d.r = static_cast<int>(d.tuple.size());
    for (Elem x : d.tuple) d.orders.push_back(G.elem_order(x));
    d.b = branch_degree_b(d);
    Genera gg = genera(d);
    d.g_tilde = gg.g_tilde;
    d.g = gg.g;
    d.p = gg.p;
    return d;
}

long branch_degree_b(const PrymDatum& d) {
    const FiniteGroup& G = d.group;
    long b = 0;
    for (Elem x : d.tuple) {
        const int m = G.elem_order(x);
        bool contains = false;
        for (int k = 0, y = 0; k < m && !contains; ++k, y = G.mul(y, x)) contains = (y == d.sigma);
        if (contains) b += G.order() / m;
    }
    return b;
}

long riemann_hurwitz_genus(int group_order, const std::vector<int>& orders) {
    long twice = -2L * group_order;
    for (int m : orders) twice += static_cast<long>(group_order / m) * (m - 1);
    if ((twice + 2) % 2) throw InternalError("odd Riemann-Hurwitz count");
    return (twice + 2) / 2;
}

long abelian_cover_genus(int N, int group_order, const std::vector<std::vector<int>>& columns) {
    const long r = static_cast<long>(columns.size());
    long gsum = 0;
    for (const auto& col : columns) {
        int g = N;
        for (int x : col) g = std::gcd(g, x);
        gsum += g;
    }
    // g~ = 1 + d((r-2)/2 - gsum/(2N))
    long num = static_cast<long>(group_order) * (N * (r - 2) - gsum);
    if (num % (2L * N)) throw InternalError("gcd genus formula is not integral");
    return 1 + num / (2L * N);
}

Genera genera(const PrymDatum& d) {
    Genera out;
    out.g_tilde = riemann_hurwitz_genus(d.group.order(), d.orders);
    if (const AbelianData* ab = d.group.abelian()) {
        std::vector<std::vector<int>> cols;
        for (Elem x : d.tuple) cols.push_back(ab->coords[x]);
        long alt = abelian_cover_genus(ab->N, d.group.order(), cols);
        if (alt != out.g_tilde)
            throw InternalError("genus formulas disagree: " + std::to_string(out.g_tilde) + " vs " + std::to_string(alt));
    }
    const long b = branch_degree_b(d);
    if (b % 2) throw DatumError("inconsistent datum: odd branch degree");
    long twice_g = out.g_tilde + 1 - b / 2;
    if (twice_g < 0 || twice_g % 2) throw DatumError("inconsistent datum: non-integral genus of the quotient");
    out.g = twice_g / 2;
    out.p = out.g_tilde - out.g;
    return out;
}

RepDecomposition hodge_decomposition(const PrymDatum& d) {
    RepDecomposition V;
    V.table = character_table(d.group);
    const CharacterTable& T = *V.table;
    const FiniteGroup& G = d.group;
    const int e = T.exponent;

    long L = 1;
    for (int m : d.orders) L = std::lcm(L, static_cast<long>(m));

    V.mult.assign(T.size(), 0);
    V.sigma_sign.assign(T.size(), 1);
    for (int chi = 0; chi < T.size(); ++chi) {
        const long deg = T.degrees[chi];
        const Cyclo& at_sigma = T.value(chi, d.sigma);
        if (!at_sigma.is_integer() || std::abs(at_sigma.to_integer()) != deg)
            throw InternalError("sigma does not act by a scalar");
        V.sigma_sign[chi] = at_sigma.to_integer() == deg ? 1 : -1;
        if (chi == 0) continue;

        // L * mult = -deg L + sum_j sum_a N_{j,a} (m_j - a) L/m_j
        long scaled = -deg * L;
        for (std::size_t j = 0; j < d.tuple.size(); ++j) {
            const Elem h = d.tuple[j];
            const int m = d.orders[j];
            std::vector<Cyclo> powers;
            for (int k = 0; k < m; ++k) powers.push_back(T.value(chi, G.pow(h, k)));
            for (int a = 1; a < m; ++a) {
                Cyclo acc(T.ctx);
                for (int k = 0; k < m; ++k)
                    acc += powers[k] * Cyclo::zeta(T.ctx, -static_cast<long>(a) * k * (e / m));
                if (!acc.is_integer()) throw InternalError("eigenvalue convention broken");
                long cnt = acc.to_integer();
                if (cnt % m) throw InternalError("eigenvalue convention broken");
                cnt /= m;
                scaled += cnt * (m - a) * (L / m);
            }
        }
        if (scaled % L) throw InternalError("eigenvalue convention broken: non-integral multiplicity");
        long mult = scaled / L;
        if (mult < 0) throw InternalError("negative multiplicity");
        V.mult[chi] = mult;
    }
    if (V.dimension(Part::all) != d.g_tilde) throw InternalError("multiplicities do not add up to the genus");
    if (V.dimension(Part::minus) != d.p) throw InternalError("anti-invariant part does not have the Prym dimension");
    return V;
}

std::vector<Elem> braid_move(const FiniteGroup& G, std::vector<Elem> tuple, int i, BraidDirection dir) {
    if (i < 1 || i >= static_cast<int>(tuple.size())) throw InputError("braid index out of range");
    Elem& a = tuple[i - 1];
    Elem& b = tuple[i];
    if (dir == BraidDirection::right) {
        Elem na = G.conj(a, b);
        b = a;
        a = na;
    } else {
        Elem nb = G.conj(G.inv(b), a);
        a = b;
        b = nb;
    }
    return tuple;
}

}  // namespace prym
