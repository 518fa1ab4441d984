#include "prym/abelian.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "prym/error.hpp"

namespace prym {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

CoverMatrix cover_matrix(const PrymDatum& d) {
    const AbelianData* ab = d.group.abelian();
    if (!ab) throw InputError("cover matrix requires an abelian group given by a matrix");
    CoverMatrix C;
    C.N = ab->N;
    C.m = ab->rank;
    C.r = d.r;
    C.A.assign(C.m, std::vector<int>(C.r));
    for (int j = 0; j < C.r; ++j)
        for (int i = 0; i < C.m; ++i) C.A[i][j] = ab->coords[d.tuple[j]][i];
    for (int i = 0; i < C.m; ++i) {
        long s = 0;
        for (int x : C.A[i]) s += x;
        if (s % C.N) throw DatumError("columns of the cover matrix do not sum to zero");
    }
    C.sigma = ab->coords[d.sigma];
    for (int x : C.sigma) C.parity_mask.push_back(C.N % 2 == 0 && x == C.N / 2);
    return C;
}

std::vector<CharacterEigen> eigen_dims(const CoverMatrix& C) {
    long total = 1;
    for (int i = 0; i < C.m; ++i) {
        total *= C.N;
        if (total > 1'000'000) throw InputError("character enumeration too large");
    }
    std::vector<CharacterEigen> out;
    std::set<std::vector<int>> seen;
    std::vector<int> n(C.m, 0);
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        for (int i = C.m - 1; i >= 0; --i) {
            n[i] = static_cast<int>(rem % C.N);
            rem /= C.N;
        }
        CharacterEigen ch;
        ch.n = n;
        std::vector<int> sig(C.r);
        for (int j = 0; j < C.r; ++j) {
            long a = 0;
            for (int i = 0; i < C.m; ++i) a += static_cast<long>(n[i]) * C.A[i][j];
            ch.alpha_lift.push_back(a);
            sig[j] = static_cast<int>(mod(a, C.N));
        }
        if (!seen.insert(sig).second) continue;

        bool trivial = std::all_of(sig.begin(), sig.end(), [](int a) { return a == 0; });
        if (!trivial) {
            long s = 0;
            for (int a : sig) s += mod(-a, C.N);
            if (s % C.N) throw InternalError("fractional parts do not sum to an integer");
            ch.dim = s / C.N - 1;
            if (ch.dim < 0) throw InternalError("negative eigenspace dimension");
        }
        long ns = 0;
        for (int i = 0; i < C.m; ++i) ns += static_cast<long>(n[i]) * C.sigma[i];
        ch.odd = C.N % 2 == 0 && mod(ns, C.N) == C.N / 2;
        out.push_back(std::move(ch));
    }
    return out;
}

std::vector<FormExponent> anti_invariant_basis(const CoverMatrix& C) {
    std::vector<FormExponent> basis;
    for (const auto& ch : eigen_dims(C)) {
        if (!ch.odd) continue;
        for (int nu = 0; nu < ch.dim; ++nu) {
            FormExponent f;
            f.n = ch.n;
            f.nu = nu;
            f.alpha_lift = ch.alpha_lift;
            for (long a : ch.alpha_lift) f.floor_exps.push_back(floor_div(-a, C.N));
            basis.push_back(std::move(f));
        }
    }
    return basis;
}

std::string ProductSystem::label(int pair) const {
    const int i = pairs[pair].i + 1;
    const int j = pairs[pair].j + 1;
    if (i < 10 && j < 10) return "a" + std::to_string(i) + std::to_string(j);
    return "a" + std::to_string(i) + "_" + std::to_string(j);
}

ProductSystem build_product_system(const CoverMatrix& C, std::optional<long> expected_dim) {
    ProductSystem P;
    P.r = C.r;
    P.basis = anti_invariant_basis(C);
    const int nb = static_cast<int>(P.basis.size());
    for (int i = 0; i < nb; ++i) {
        for (int j = i; j < nb; ++j) {
            const auto& a = P.basis[i];
            const auto& b = P.basis[j];
            bool invariant = true;
            for (int t = 0; t < C.r && invariant; ++t) invariant = mod(a.alpha_lift[t] + b.alpha_lift[t], C.N) == 0;
            if (!invariant) continue;
            ProductPair pp;
            pp.i = i;
            pp.j = j;
            pp.k = a.nu + b.nu;
            long total = pp.k;
            for (int t = 0; t < C.r; ++t) {
                long e = (a.alpha_lift[t] + b.alpha_lift[t]) / C.N + a.floor_exps[t] + b.floor_exps[t];
                if (e != 0 && e != -1) throw InternalError("product exponent outside {-1, 0}");
                pp.E.push_back(e);
                total += e;
            }
            // A holomorphic quadratic differential on the line has degree at most -4.
            if (total > -4) throw InternalError("product is not holomorphic at infinity");
            P.pairs.push_back(std::move(pp));
        }
    }
    if (expected_dim && static_cast<long>(P.pairs.size()) != *expected_dim)
        throw InternalError("product count " + std::to_string(P.pairs.size()) + " differs from invariant dimension " +
                            std::to_string(*expected_dim));
    P.shift.assign(C.r, 0);
    for (const auto& pp : P.pairs)
        for (int t = 0; t < C.r; ++t) P.shift[t] = std::min(P.shift[t], pp.E[t]);
    return P;
}

namespace {

void check_distinct(const std::vector<mpz_class>& t, int r) {
    if (static_cast<int>(t.size()) != r) throw InputError("wrong number of branch points");
    std::set<mpz_class> s(t.begin(), t.end());
    if (static_cast<int>(s.size()) != r) throw InputError("repeated branch point");
}

}  // namespace

int rank_at_sample(const ProductSystem& P, const std::vector<mpz_class>& t) {
    check_distinct(t, P.r);
    std::vector<std::vector<mpz_class>> rows;
    std::size_t width = 0;
    for (int p = 0; p < static_cast<int>(P.pairs.size()); ++p) {
        std::vector<mpz_class> poly(P.pairs[p].k + 1, 0);
        poly.back() = 1;
        for (int j = 0; j < P.r; ++j) {
            for (long e = 0; e < P.cleared_exp(p, j); ++e) {
                std::vector<mpz_class> next(poly.size() + 1, 0);
                for (std::size_t d = 0; d < poly.size(); ++d) {
                    next[d + 1] += poly[d];
                    next[d] -= t[j] * poly[d];
                }
                poly = std::move(next);
            }
        }
        width = std::max(width, poly.size());
        rows.push_back(std::move(poly));
    }
    for (auto& row : rows) row.resize(width, 0);
    return bareiss_rank(std::move(rows));
}

std::vector<mpz_class> sample_points(int r, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> dist(1, 1'000'000'000L);
    std::set<long> used;
    std::vector<mpz_class> out;
    while (static_cast<int>(out.size()) < r) {
        long v = dist(gen);
        if (used.insert(v).second) out.emplace_back(v);
    }
    return out;
}

SymbolicRank generic_rank_symbolic(const ProductSystem& P) {
    if (static_cast<int>(P.pairs.size()) > kMaxSymbolicProducts || P.r > kMaxSymbolicPoints)
        throw InputError("system too large for symbolic elimination: use sampled rank");
    const int cols = static_cast<int>(P.pairs.size());
    std::vector<std::vector<MPoly>> images;
    std::size_t height = 0;
    for (int p = 0; p < cols; ++p) {
        std::vector<MPoly> poly(P.pairs[p].k + 1);
        poly.back() = MPoly(1);
        for (int j = 0; j < P.r; ++j) {
            const MPoly tj = MPoly::var(j);
            for (long e = 0; e < P.cleared_exp(p, j); ++e) {
                std::vector<MPoly> next(poly.size() + 1);
                for (std::size_t d = 0; d < poly.size(); ++d) {
                    if (poly[d].is_zero()) continue;
                    next[d + 1] += poly[d];
                    next[d] -= tj * poly[d];
                }
                poly = std::move(next);
            }
        }
        height = std::max(height, poly.size());
        images.push_back(std::move(poly));
    }
    std::vector<std::vector<MPoly>> M(height, std::vector<MPoly>(cols));
    for (int p = 0; p < cols; ++p)
        for (std::size_t d = 0; d < images[p].size(); ++d) M[d][p] = images[p][d];

    PolyKernel K = poly_kernel(std::move(M), cols);
    SymbolicRank out;
    out.rank = K.rank;
    out.kernel = std::move(K.basis);
    for (const auto& v : out.kernel)
        if (!kernel_vanishes(P, v)) throw InternalError("kernel element does not vanish");
    return out;
}

bool kernel_vanishes(const ProductSystem& P, const std::vector<MPoly>& v) {
    if (v.size() != P.pairs.size()) return false;
    const MPoly x = MPoly::var(P.r);
    MPoly sum;
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p].is_zero()) continue;
        MPoly F = MPoly::var(P.r, P.pairs[p].k);
        for (int j = 0; j < P.r; ++j) {
            const MPoly lin = x - MPoly::var(j);
            for (long e = 0; e < P.cleared_exp(static_cast<int>(p), j); ++e) F = F * lin;
        }
        sum += v[p] * F;
    }
    return sum.is_zero();
}

std::string format_kernel_element(const ProductSystem& P, const std::vector<MPoly>& v) {
    std::vector<std::string> names;
    for (int j = 0; j < P.r; ++j) names.push_back("t" + std::to_string(j + 1));
    std::string s;
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p].is_zero()) continue;
        const std::string lab = P.label(static_cast<int>(p));
        std::string coeff;
        bool neg = false;
        if (v[p].is_constant()) {
            mpz_class c = v[p].leading().second;
            neg = c < 0;
            if (abs(c) != 1) coeff = mpz_class(abs(c)).get_str() + "*";
        } else {
            coeff = "(" + v[p].str(names) + ")*";
        }
        if (s.empty()) s = (neg ? "-" : "") + coeff + lab;
        else s += (neg ? " − " : " + ") + coeff + lab;
    }
    return s.empty() ? "0" : s;
}

}  // namespace prym
