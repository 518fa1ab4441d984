#include "prym/characters.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "prym/error.hpp"

namespace prym {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }

u64 powmod(u64 a, u64 k, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (k) {
        if (k & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        k >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

void compute_classes(CharacterTable& T) {
    const FiniteGroup& G = T.group;
    const int n = G.order();
    T.class_of.assign(n, -1);
    for (Elem x = 0; x < n; ++x) {
        if (T.class_of[x] >= 0) continue;
        ConjClass c;
        c.rep = x;
        int idx = static_cast<int>(T.classes.size());
        for (Elem g = 0; g < n; ++g) {
            Elem y = G.conj(g, x);
            if (T.class_of[y] < 0) {
                T.class_of[y] = idx;
                c.members.push_back(y);
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.size = static_cast<int>(c.members.size());
        T.classes.push_back(std::move(c));
    }
    for (const auto& c : T.classes) {
        T.inverse_class.push_back(T.class_of[G.inv(c.rep)]);
        T.square_class.push_back(T.class_of[G.mul(c.rep, c.rep)]);
    }
    T.exponent = G.exponent();
    T.ctx = cyclo_context(T.exponent);
}

void compute_duals(CharacterTable& T) {
    T.duals.assign(T.size(), -1);
    for (int i = 0; i < T.size(); ++i) {
        std::vector<Cyclo> conj;
        for (const auto& v : T.values[i]) conj.push_back(v.conj());
        for (int j = 0; j < T.size(); ++j)
            if (T.values[j] == conj) T.duals[i] = j;
        if (T.duals[i] < 0) throw InternalError("character table not closed under conjugation");
    }
}

void abelian_characters(CharacterTable& T) {
    const FiniteGroup& G = T.group;
    const AbelianData& ab = *G.abelian();
    const int n = G.order();
    const int N = ab.N;
    const int m = ab.rank;
    const int scale = N / T.exponent;

    std::map<std::vector<int>, int> seen;
    std::vector<int> v(m, 0);
    long total = 1;
    for (int i = 0; i < m; ++i) total *= N;
    for (long code = 0; code < total && static_cast<int>(T.values.size()) < n; ++code) {
        long c = code;
        for (int i = m - 1; i >= 0; --i) {
            v[i] = static_cast<int>(c % N);
            c /= N;
        }
        std::vector<int> sig;
        for (const auto& col : ab.columns) {
            long s = 0;
            for (int i = 0; i < m; ++i) s += static_cast<long>(v[i]) * col[i];
            sig.push_back(static_cast<int>(s % N));
        }
        if (!seen.emplace(sig, static_cast<int>(T.values.size())).second) continue;
        std::vector<Cyclo> row;
        for (const auto& cl : T.classes) {
            long s = 0;
            for (int i = 0; i < m; ++i) s += static_cast<long>(v[i]) * ab.coords[cl.rep][i];
            s %= N;
            if (s % scale) throw InternalError("character value outside the exponent");
            row.push_back(Cyclo::zeta(T.ctx, s / scale));
        }
        T.values.push_back(std::move(row));
        T.degrees.push_back(1);
        T.labels.push_back(v);
    }
    if (static_cast<int>(T.values.size()) != n) throw InternalError("dual group enumeration incomplete");
}

// Nullspace over F_p of a rows x cols matrix, as a list of column vectors.
std::vector<std::vector<u64>> nullspace_mod(std::vector<std::vector<u64>> a, int cols, u64 p) {
    const int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        u64 iv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = mulmod(x, iv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !a[i][c]) continue;
            u64 f = a[i][c];
            for (int k = 0; k < cols; ++k) a[i][k] = (a[i][k] + p - mulmod(f, a[r][k], p)) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<u64>> basis;
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<u64> v(cols, 0);
        v[f] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = (p - a[i][f]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

void dixon_characters(CharacterTable& T) {
    const FiniteGroup& G = T.group;
    const int n = G.order();
    const int k = static_cast<int>(T.classes.size());
    const u64 e = static_cast<u64>(T.exponent);

    u64 p = 0;
    for (u64 cand = e + 1; cand < 1'000'000; cand += e)
        if (cand > 2u * n && is_prime(cand)) {
            p = cand;
            break;
        }
    if (!p) throw Error("no admissible prime for the character table");
    u64 gen = 2;
    for (;; ++gen) {
        bool prim = true;
        for (u64 q : prime_factors(p - 1)) prim = prim && powmod(gen, (p - 1) / q, p) != 1;
        if (prim) break;
    }
    const u64 z = powmod(gen, (p - 1) / e, p);

    // c[j][kk][l] = #{x in C_j : x^-1 z_l in C_kk}
    std::vector<std::vector<std::vector<u64>>> M(k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
    for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l)
            for (Elem x : T.classes[j].members) {
                int kk = T.class_of[G.mul(G.inv(x), T.classes[l].rep)];
                M[j][kk][l] += 1;
            }

    // Common eigenvectors: refine the whole space by each class matrix.
    std::vector<std::vector<std::vector<u64>>> spaces;
    {
        std::vector<std::vector<u64>> full;
        for (int i = 0; i < k; ++i) {
            std::vector<u64> v(k, 0);
            v[i] = 1;
            full.push_back(v);
        }
        spaces.push_back(full);
    }
    for (int j = 1; j < k; ++j) {
        std::vector<std::vector<std::vector<u64>>> next;
        for (auto& S : spaces) {
            const int d = static_cast<int>(S.size());
            if (d == 1) {
                next.push_back(S);
                continue;
            }
            // images M_j b for each basis vector b
            std::vector<std::vector<u64>> img(d, std::vector<u64>(k, 0));
            for (int b = 0; b < d; ++b)
                for (int row = 0; row < k; ++row) {
                    u64 s = 0;
                    for (int col = 0; col < k; ++col) s = (s + mulmod(M[j][row][col] % p, S[b][col], p)) % p;
                    img[b][row] = s;
                }
            int total = 0;
            for (u64 lam = 0; lam < p && total < d; ++lam) {
                // solve sum_b c_b (img_b - lam S_b) = 0
                std::vector<std::vector<u64>> sys(k, std::vector<u64>(d, 0));
                for (int row = 0; row < k; ++row)
                    for (int b = 0; b < d; ++b)
                        sys[row][b] = (img[b][row] + p - mulmod(lam, S[b][row], p)) % p;
                auto ker = nullspace_mod(sys, d, p);
                if (ker.empty()) continue;
                std::vector<std::vector<u64>> sub;
                for (const auto& c : ker) {
                    std::vector<u64> v(k, 0);
                    for (int b = 0; b < d; ++b)
                        for (int i = 0; i < k; ++i) v[i] = (v[i] + mulmod(c[b], S[b][i], p)) % p;
                    sub.push_back(std::move(v));
                }
                total += static_cast<int>(sub.size());
                next.push_back(std::move(sub));
            }
            if (total != d) throw InternalError("class matrix not diagonalisable over the prime field");
        }
        spaces = std::move(next);
    }
    if (static_cast<int>(spaces.size()) != k) throw InternalError("class algebra eigenspaces did not separate");

    for (auto& S : spaces) {
        std::vector<u64> w = S[0];
        if (!w[0]) throw InternalError("central character vanishes at the identity");
        u64 iv = invmod(w[0], p);
        for (auto& x : w) x = mulmod(x, iv, p);
        u64 s = 0;
        for (int l = 0; l < k; ++l)
            s = (s + mulmod(mulmod(w[l], w[T.inverse_class[l]], p), invmod(T.classes[l].size, p), p)) % p;
        u64 d2 = mulmod(static_cast<u64>(n) % p, invmod(s, p), p);
        int d = 0;
        for (int c = 1; c * c <= n; ++c)
            if (static_cast<u64>(c * c) % p == d2) d = c;
        if (!d) throw InternalError("character degree is not a square root of the expected value");
        std::vector<u64> chi(k);
        for (int l = 0; l < k; ++l) chi[l] = mulmod(mulmod(w[l], d, p), invmod(T.classes[l].size, p), p);

        std::vector<Cyclo> row;
        for (int l = 0; l < k; ++l) {
            const Elem g = T.classes[l].rep;
            const int o = G.elem_order(g);
            const u64 zo = powmod(z, e / o, p);
            std::vector<u64> pw(o);
            for (int a = 0; a < o; ++a) pw[a] = chi[T.class_of[G.pow(g, a)]];
            Cyclo val(T.ctx);
            int msum = 0;
            for (int jj = 0; jj < o; ++jj) {
                u64 acc = 0;
                for (int a = 0; a < o; ++a)
                    acc = (acc + mulmod(pw[a], powmod(zo, (static_cast<u64>(o) - (static_cast<u64>(jj) * a) % o) % o, p), p)) % p;
                u64 mu = mulmod(acc, invmod(o, p), p);
                if (mu > static_cast<u64>(d)) throw InternalError("eigenvalue multiplicity failed to lift");
                msum += static_cast<int>(mu);
                val += Cyclo::zeta(T.ctx, static_cast<long>(jj) * static_cast<long>(e / o)) * static_cast<std::int64_t>(mu);
            }
            if (msum != d) throw InternalError("eigenvalue multiplicities do not sum to the degree");
            row.push_back(std::move(val));
        }
        T.values.push_back(std::move(row));
        T.degrees.push_back(d);
    }

    // canonical order: trivial first, then by degree, then by values
    std::vector<int> idx(T.values.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto is_trivial = [&](int i) {
        for (const auto& v : T.values[i])
            if (!(v.is_integer() && v.to_integer() == 1)) return false;
        return true;
    };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (T.degrees[a] != T.degrees[b]) return T.degrees[a] < T.degrees[b];
        for (int l = 0; l < k; ++l)
            if (T.values[a][l].coeffs() != T.values[b][l].coeffs())
                return T.values[a][l].coeffs() > T.values[b][l].coeffs();
        return false;
    });
    std::vector<std::vector<Cyclo>> vals;
    std::vector<int> degs;
    for (int i : idx) {
        vals.push_back(T.values[i]);
        degs.push_back(T.degrees[i]);
    }
    T.values = std::move(vals);
    T.degrees = std::move(degs);
}

std::string cache_key(const FiniteGroup& G) {
    const auto& t = G.table();
    std::string key(reinterpret_cast<const char*>(t.data()), t.size() * sizeof(int));
    if (const AbelianData* ab = G.abelian()) {
        key += "|ab" + std::to_string(ab->N) + ":" + std::to_string(ab->rank);
        for (const auto& col : ab->columns)
            for (int x : col) key += "," + std::to_string(x);
        for (const auto& c : ab->coords)
            for (int x : c) key += "." + std::to_string(x);
    }
    return key;
}

std::shared_ptr<const CharacterTable> build_table(const FiniteGroup& G) {
    auto T = std::make_shared<CharacterTable>();
    T->group = G;
    compute_classes(*T);
    if (G.abelian()) {
        abelian_characters(*T);
    } else {
        if (G.order() > kMaxOrder) throw Error("group too large for character table computation");
        dixon_characters(*T);
        verify_character_table(*T);
    }
    compute_duals(*T);
    return T;
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(const FiniteGroup& G) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const CharacterTable>> cache;
    std::string key = cache_key(G);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto T = build_table(G);
    // Large tables are rarely reused and dominate memory; keep only search-sized groups.
    if (G.order() > kMaxOrder) return T;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::move(key), T);
    return it->second;
}

void verify_character_table(const CharacterTable& T) {
    const int n = T.group.order();
    const int k = static_cast<int>(T.classes.size());
    if (T.size() != k) throw InternalError("number of characters differs from number of classes");
    long s = 0;
    for (int d : T.degrees) s += static_cast<long>(d) * d;
    if (s != n) throw InternalError("sum of squared degrees differs from the group order");
    for (int i = 0; i < T.size(); ++i)
        for (int j = i; j < T.size(); ++j) {
            Cyclo acc(T.ctx);
            for (int l = 0; l < k; ++l)
                acc += T.values[i][l] * T.values[j][l].conj() * static_cast<std::int64_t>(T.classes[l].size);
            std::int64_t want = (i == j) ? n : 0;
            if (!acc.is_integer() || acc.to_integer() != want)
                throw InternalError("row orthogonality fails for characters " + std::to_string(i) + "," + std::to_string(j));
        }
}

void verify_column_orthogonality(const CharacterTable& T) {
    const int n = T.group.order();
    const int k = static_cast<int>(T.classes.size());
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            Cyclo acc(T.ctx);
            for (int i = 0; i < T.size(); ++i) acc += T.values[i][a] * T.values[i][b].conj();
            std::int64_t want = (a == b) ? n / T.classes[a].size : 0;
            if (!acc.is_integer() || acc.to_integer() != want)
                throw InternalError("column orthogonality fails for classes " + std::to_string(a) + "," + std::to_string(b));
        }
}

int frobenius_schur(const CharacterTable& T, int chi) {
    Cyclo acc(T.ctx);
    for (std::size_t l = 0; l < T.classes.size(); ++l)
        acc += T.values[chi][T.square_class[l]] * static_cast<std::int64_t>(T.classes[l].size);
    if (!acc.is_integer()) throw InternalError("Frobenius-Schur sum is not rational");
    std::int64_t v = acc.to_integer();
    const int n = T.group.order();
    if (v % n) throw InternalError("Frobenius-Schur indicator is not integral");
    v /= n;
    if (v < -1 || v > 1) throw InternalError("Frobenius-Schur indicator out of range");
    return static_cast<int>(v);
}

bool RepDecomposition::in_part(int chi, Part part) const {
    switch (part) {
        case Part::plus: return sigma_sign[chi] == 1;
        case Part::minus: return sigma_sign[chi] == -1;
        case Part::all: return true;
    }
    return false;
}

long RepDecomposition::dimension(Part part) const {
    long d = 0;
    for (int i = 0; i < table->size(); ++i)
        if (in_part(i, part)) d += mult[i] * table->degrees[i];
    return d;
}

long sym2_by_character(const RepDecomposition& V, Part part) {
    const CharacterTable& T = *V.table;
    const int k = static_cast<int>(T.classes.size());
    std::vector<Cyclo> chi(k, Cyclo(T.ctx));
    for (int i = 0; i < T.size(); ++i) {
        if (!V.in_part(i, part) || V.mult[i] == 0) continue;
        for (int l = 0; l < k; ++l) chi[l] += T.values[i][l] * static_cast<std::int64_t>(V.mult[i]);
    }
    Cyclo acc(T.ctx);
    for (int l = 0; l < k; ++l)
        acc += (chi[l] * chi[l] + chi[T.square_class[l]]) * static_cast<std::int64_t>(T.classes[l].size);
    std::int64_t v = acc.to_integer();
    const std::int64_t denom = 2 * static_cast<std::int64_t>(T.group.order());
    if (v % denom) throw InternalError("symmetric-square invariant count is not integral");
    return static_cast<long>(v / denom);
}

long sym2_by_blocks(const RepDecomposition& V, Part part) {
    const CharacterTable& T = *V.table;
    long total = 0;
    for (int i = 0; i < T.size(); ++i) {
        if (!V.in_part(i, part) || V.mult[i] == 0) continue;
        const long m = V.mult[i];
        const int j = T.dual(i);
        if (j != i) {
            if (i < j && V.in_part(j, part)) total += m * V.mult[j];
            continue;
        }
        int fs = frobenius_schur(T, i);
        if (fs == 1) total += m * (m + 1) / 2;
        else if (fs == -1) total += m * (m - 1) / 2;
        else throw InternalError("self-dual character with vanishing indicator");
    }
    return total;
}

long sym2_invariant_dimension(const RepDecomposition& V, Part part) {
    long a = sym2_by_character(V, part);
    long b = sym2_by_blocks(V, part);
    if (a != b)
        throw InternalError("symmetric-square invariant dimension: character formula gives " + std::to_string(a) +
                            ", block formula gives " + std::to_string(b));
    return a;
}

}  // namespace prym
