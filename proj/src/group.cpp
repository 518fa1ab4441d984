#include "prym/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "prym/error.hpp"

namespace prym {

struct FiniteGroup::Impl {
    int n = 0;
    std::vector<int> table;
    std::vector<int> inverse;
    std::vector<int> orders;
    int exponent = 1;
    bool commutative = true;
    std::optional<AbelianData> ab;
    std::vector<long long> codes;  // abelian: sorted big-endian coordinate codes
};

namespace {

long long encode(std::span<const int> v, int N) {
    long long c = 0;
    for (int x : v) c = c * N + x;
    return c;
}

void check_axioms(int n, const std::vector<int>& t) {
    if (n < 1) throw InputError("group order must be positive");
    if (t.size() != static_cast<std::size_t>(n) * n) throw InputError("Cayley table has wrong size");
    for (int x : t)
        if (x < 0 || x >= n) throw InputError("Cayley table entry out of range");
    for (int a = 0; a < n; ++a) {
        if (t[a] != a || t[static_cast<std::size_t>(a) * n] != a)
            throw InputError("index 0 is not a two-sided identity");
    }
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int c = t[static_cast<std::size_t>(a) * n + b];
            if (seen[c]) throw InputError("Cayley table row " + std::to_string(a) + " is not a permutation");
            seen[c] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = t[static_cast<std::size_t>(a) * n + b];
            for (int c = 0; c < n; ++c) {
                int lhs = t[static_cast<std::size_t>(ab) * n + c];
                int rhs = t[static_cast<std::size_t>(a) * n + t[static_cast<std::size_t>(b) * n + c]];
                if (lhs != rhs) throw InputError("Cayley table is not associative");
            }
        }
}

}  // namespace

FiniteGroup FiniteGroup::make(int n, std::vector<int> table, std::optional<AbelianData> ab) {
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->table = std::move(table);
    const auto& t = impl->table;
    impl->inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t[static_cast<std::size_t>(a) * n + b] == 0) {
                impl->inverse[a] = b;
                break;
            }
    impl->orders.assign(n, 1);
    for (int a = 0; a < n; ++a) {
        int k = 1;
        for (int x = a; x != 0; x = t[static_cast<std::size_t>(x) * n + a]) ++k;
        impl->orders[a] = k;
    }
    for (int a = 0; a < n; ++a) impl->exponent = std::lcm(impl->exponent, impl->orders[a]);
    for (int a = 0; a < n && impl->commutative; ++a)
        for (int b = a + 1; b < n; ++b)
            if (t[static_cast<std::size_t>(a) * n + b] != t[static_cast<std::size_t>(b) * n + a]) {
                impl->commutative = false;
                break;
            }
    if (ab) {
        for (const auto& c : ab->coords) impl->codes.push_back(encode(c, ab->N));
    }
    impl->ab = std::move(ab);

    FiniteGroup G;
    G.n_ = n;
    G.table_ = std::span<const int>(impl->table);
    G.impl_ = std::move(impl);
    return G;
}

FiniteGroup FiniteGroup::from_table(int n, std::vector<int> table) {
    check_axioms(n, table);
    return make(n, std::move(table), std::nullopt);
}

Elem FiniteGroup::inv(Elem a) const { return impl_->inverse[a]; }

Elem FiniteGroup::pow(Elem a, long k) const {
    long o = impl_->orders[a];
    k %= o;
    if (k < 0) k += o;
    Elem r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::elem_order(Elem a) const { return impl_->orders[a]; }
int FiniteGroup::exponent() const { return impl_->exponent; }
bool FiniteGroup::is_commutative() const { return impl_->commutative; }

const AbelianData* FiniteGroup::abelian() const {
    return impl_ && impl_->ab ? &*impl_->ab : nullptr;
}

Elem FiniteGroup::find_coords(std::span<const int> v) const {
    const AbelianData* ab = abelian();
    if (!ab || static_cast<int>(v.size()) != ab->rank) return -1;
    std::vector<int> red(v.begin(), v.end());
    for (int& x : red) x = ((x % ab->N) + ab->N) % ab->N;
    long long c = encode(red, ab->N);
    auto it = std::lower_bound(impl_->codes.begin(), impl_->codes.end(), c);
    if (it == impl_->codes.end() || *it != c) return -1;
    return static_cast<Elem>(it - impl_->codes.begin());
}

std::string FiniteGroup::format_elem(Elem e) const {
    if (const AbelianData* ab = abelian()) {
        std::string s = "(";
        for (int i = 0; i < ab->rank; ++i) {
            if (i) s += ',';
            s += std::to_string(ab->coords[e][i]);
        }
        return s + ")";
    }
    return std::to_string(e);
}

FiniteGroup abelian_from_columns(int N, const std::vector<std::vector<int>>& A) {
    if (N < 2) throw InputError("modulus must be at least 2");
    if (A.empty() || A[0].empty()) throw InputError("no generators");
    const int m = static_cast<int>(A.size());
    const int r = static_cast<int>(A[0].size());
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != r) throw InputError("ragged cover matrix");
    double bits = m * std::log2(static_cast<double>(N));
    if (bits > 60) throw InputError("ambient group too large");

    AbelianData ab;
    ab.N = N;
    ab.rank = m;
    for (int j = 0; j < r; ++j) {
        std::vector<int> col(m);
        for (int i = 0; i < m; ++i) col[i] = ((A[i][j] % N) + N) % N;
        ab.columns.push_back(std::move(col));
    }

    std::vector<std::vector<int>> elems{std::vector<int>(m, 0)};
    std::unordered_set<long long> seen{0};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& col : ab.columns) {
            std::vector<int> v(m);
            for (int i = 0; i < m; ++i) v[i] = (elems[head][i] + col[i]) % N;
            if (seen.insert(encode(v, N)).second) elems.push_back(std::move(v));
        }
        if (elems.size() > (1u << 20)) throw InputError("abelian group too large");
    }
    std::sort(elems.begin(), elems.end());
    const int n = static_cast<int>(elems.size());
    std::vector<long long> codes(n);
    for (int a = 0; a < n; ++a) codes[a] = encode(elems[a], N);

    std::vector<int> table(static_cast<std::size_t>(n) * n);
    std::vector<int> v(m);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            for (int i = 0; i < m; ++i) v[i] = (elems[a][i] + elems[b][i]) % N;
            long long c = encode(v, N);
            int idx = static_cast<int>(std::lower_bound(codes.begin(), codes.end(), c) - codes.begin());
            table[static_cast<std::size_t>(a) * n + b] = idx;
            table[static_cast<std::size_t>(b) * n + a] = idx;
        }
    ab.coords = std::move(elems);
    return FiniteGroup::make(n, std::move(table), std::move(ab));
}

FiniteGroup parse_cayley(std::istream& in) {
    std::string word;
    int n = 0;
    if (!(in >> word) || word != "order" || !(in >> n) || n < 1)
        throw InputError("Cayley file: expected header 'order n'");
    if (n > 4096) throw InputError("Cayley file: order too large");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!(in >> table[i]))
            throw InputError("Cayley file: row " + std::to_string(i / n) + " is truncated");
    }
    return FiniteGroup::from_table(n, std::move(table));
}

FiniteGroup read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open Cayley file " + path);
    return parse_cayley(in);
}

void write_cayley(std::ostream& out, const FiniteGroup& G) {
    const int n = G.order();
    out << "order " << n << '\n';
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out << (b ? " " : "") << G.mul(a, b);
        out << '\n';
    }
}

std::vector<Elem> subgroup_closure(const FiniteGroup& G, std::span<const Elem> gens) {
    std::vector<char> in(G.order(), 0);
    std::vector<Elem> out{0};
    in[0] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (Elem g : gens) {
            Elem y = G.mul(out[head], g);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool generates(const FiniteGroup& G, std::span<const Elem> gens) {
    return static_cast<int>(subgroup_closure(G, gens).size()) == G.order();
}

std::vector<Elem> centre(const FiniteGroup& G) {
    std::vector<Elem> z;
    for (Elem a = 0; a < G.order(); ++a) {
        bool central = true;
        for (Elem b = 0; b < G.order() && central; ++b) central = G.mul(a, b) == G.mul(b, a);
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<Elem> derived_subgroup(const FiniteGroup& G) {
    std::vector<Elem> comms;
    std::vector<char> seen(G.order(), 0);
    for (Elem a = 0; a < G.order(); ++a)
        for (Elem b = 0; b < G.order(); ++b) {
            Elem c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
            if (!seen[c]) {
                seen[c] = 1;
                comms.push_back(c);
            }
        }
    return subgroup_closure(G, comms);
}

std::pair<FiniteGroup, GroupHom> quotient_by_subgroup(const FiniteGroup& G, std::span<const Elem> H) {
    const int n = G.order();
    std::vector<char> inH(n, 0);
    for (Elem h : H) {
        if (h < 0 || h >= n) throw InputError("subgroup element out of range");
        inH[h] = 1;
    }
    if (!inH[0]) throw InputError("not a subgroup: identity missing");
    std::vector<Elem> hs;
    for (Elem a = 0; a < n; ++a)
        if (inH[a]) hs.push_back(a);
    for (Elem a : hs)
        for (Elem b : hs)
            if (!inH[G.mul(a, b)]) throw InputError("not a subgroup: not closed under multiplication");
    for (Elem g = 0; g < n; ++g)
        for (Elem h : hs)
            if (!inH[G.conj(g, h)]) throw InputError("subgroup is not normal");

    std::vector<int> coset(n, -1);
    std::vector<Elem> reps;
    for (Elem g = 0; g < n; ++g) {
        if (coset[g] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (Elem h : hs) coset[G.mul(g, h)] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[static_cast<std::size_t>(a) * q + b] = coset[G.mul(reps[a], reps[b])];
    FiniteGroup Q = FiniteGroup::from_table(q, std::move(table));
    GroupHom proj{G, Q, coset};
    return {std::move(Q), std::move(proj)};
}

std::vector<Elem> central_involutions(const FiniteGroup& G) {
    std::vector<Elem> out;
    for (Elem z : centre(G))
        if (G.elem_order(z) == 2) out.push_back(z);
    return out;
}

std::vector<Elem> small_generating_set(const FiniteGroup& G) {
    std::vector<Elem> order(G.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Elem a, Elem b) { return G.elem_order(a) > G.elem_order(b); });
    std::vector<Elem> gens;
    std::vector<Elem> span{0};
    for (Elem e : order) {
        if (static_cast<int>(span.size()) == G.order()) break;
        if (std::binary_search(span.begin(), span.end(), e)) continue;
        gens.push_back(e);
        span = subgroup_closure(G, gens);
    }
    return gens;
}

namespace {

struct AutSearch {
    const FiniteGroup& G;
    Elem s;
    std::size_t max_count;
    std::vector<Elem> gens;
    std::vector<std::vector<Elem>> candidates;
    std::vector<Elem> chosen;
    std::vector<GroupHom> found;

    // Extends the partial map to the subgroup generated by gens[0..level].
    bool consistent(int level, std::vector<Elem>& img) const {
        const int n = G.order();
        img.assign(n, -1);
        std::vector<char> used(n, 0);
        img[0] = 0;
        used[0] = 1;
        std::vector<Elem> queue{0};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Elem x = queue[head];
            for (int j = 0; j <= level; ++j) {
                Elem y = G.mul(x, gens[j]);
                Elem iy = G.mul(img[x], chosen[j]);
                if (img[y] < 0) {
                    if (used[iy]) return false;
                    used[iy] = 1;
                    img[y] = iy;
                    queue.push_back(y);
                } else if (img[y] != iy) {
                    return false;
                }
            }
        }
        if (img[s] >= 0 && img[s] != s) return false;
        return true;
    }

    void run(int level) {
        std::vector<Elem> img;
        for (Elem c : candidates[level]) {
            chosen[level] = c;
            if (!consistent(level, img)) continue;
            if (level + 1 == static_cast<int>(gens.size())) {
                if (found.size() >= max_count) throw InputError("group too large for automorphism enumeration");
                found.push_back(GroupHom{G, G, img});
            } else {
                run(level + 1);
            }
        }
    }
};

}  // namespace

std::vector<GroupHom> automorphisms_fixing(const FiniteGroup& G, Elem s, int max_order, std::size_t max_count) {
    if (G.order() > max_order) throw Error("group too large for automorphism enumeration");
    if (s < 0 || s >= G.order()) throw InputError("element out of range");
    if (G.order() == 1) return {GroupHom{G, G, {0}}};

    const int n = G.order();
    std::vector<int> centralizer(n, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) centralizer[a] += G.mul(a, b) == G.mul(b, a);

    AutSearch search{G, s, max_count, small_generating_set(G), {}, {}, {}};
    for (Elem g : search.gens) {
        std::vector<Elem> cands;
        for (Elem c = 1; c < n; ++c)
            if (G.elem_order(c) == G.elem_order(g) && centralizer[c] == centralizer[g]) cands.push_back(c);
        search.candidates.push_back(std::move(cands));
    }
    search.chosen.assign(search.gens.size(), 0);
    search.run(0);
    return std::move(search.found);
}

std::vector<GroupHom> automorphism_generators(const std::vector<GroupHom>& auts) {
    if (auts.empty()) return {};
    const int n = auts[0].source.order();
    auto key = [](const std::vector<Elem>& p) { return std::string(p.begin(), p.end()); };
    std::vector<Elem> ident(n);
    std::iota(ident.begin(), ident.end(), 0);

    std::vector<GroupHom> gens;
    std::unordered_set<std::string> closure{key(ident)};
    for (const auto& a : auts) {
        if (closure.count(key(a.image))) continue;
        gens.push_back(a);
        std::vector<std::vector<Elem>> elems{ident};
        closure = {key(ident)};
        for (std::size_t head = 0; head < elems.size(); ++head)
            for (const auto& g : gens) {
                std::vector<Elem> c(n);
                for (int x = 0; x < n; ++x) c[x] = g.image[elems[head][x]];
                if (closure.insert(key(c)).second) elems.push_back(std::move(c));
            }
        if (closure.size() == auts.size()) break;
    }
    return gens;
}

std::optional<std::vector<GroupHom>> elementary_automorphisms(const FiniteGroup& G) {
    const AbelianData* ab = G.abelian();
    if (!ab) return std::nullopt;
    const int k = ab->rank;
    if (static_cast<int>(ab->columns.size()) != k) return std::nullopt;
    std::vector<Elem> basis;
    std::vector<int> d;
    long prod = 1;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            if (j != i && ab->columns[i][j] != 0) return std::nullopt;
        const int c = ab->columns[i][i];
        if (c == 0 || ab->N % c) return std::nullopt;
        d.push_back(ab->N / c);
        prod *= d.back();
        basis.push_back(G.find_coords(ab->columns[i]));
    }
    if (prod != G.order()) return std::nullopt;

    const int n = G.order();
    auto hom_from = [&](const std::vector<Elem>& images) {
        GroupHom h{G, G, std::vector<Elem>(n)};
        for (Elem x = 0; x < n; ++x) {
            Elem y = 0;
            for (int i = 0; i < k; ++i) y = G.mul(y, G.pow(images[i], ab->coords[x][i] / (ab->N / d[i])));
            h.image[x] = y;
        }
        return h;
    };
    std::vector<GroupHom> out;
    for (int i = 0; i < k; ++i) {
        for (int u = 2; u < d[i]; ++u) {
            if (std::gcd(u, d[i]) != 1) continue;
            std::vector<Elem> images = basis;
            images[i] = G.pow(basis[i], u);
            out.push_back(hom_from(images));
        }
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<Elem> images = basis;
            images[i] = G.mul(basis[i], G.pow(basis[j], d[j] / std::gcd(d[i], d[j])));
            out.push_back(hom_from(images));
        }
    }
    return out;
}

FiniteGroup relabel(const FiniteGroup& G, std::span<const int> perm) {
    const int n = G.order();
    if (static_cast<int>(perm.size()) != n || perm[0] != 0) throw InputError("bad relabelling");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[G.mul(a, b)];
    return FiniteGroup::from_table(n, std::move(table));
}

namespace {

std::vector<int> abelian_invariants_of(const FiniteGroup& A) {
    const int n = A.order();
    std::vector<int> out;
    int rest = n;
    for (int p = 2; rest > 1; ++p) {
        if (rest % p) continue;
        int top = 1;
        while (rest % p == 0) {
            rest /= p;
            top *= p;
        }
        // c[k] = log_p #{a : a^(p^k) = 1}
        std::vector<int> c{0};
        for (int pk = p; pk <= top; pk *= p) {
            int cnt = 0;
            for (Elem a = 0; a < n; ++a) cnt += (pk % A.elem_order(a) == 0);
            int l = 0;
            while (cnt > 1) {
                cnt /= p;
                ++l;
            }
            c.push_back(l);
        }
        c.push_back(c.back());
        int pk = 1;
        for (std::size_t k = 1; k + 1 < c.size(); ++k) {
            pk *= p;
            int exactly = (c[k] - c[k - 1]) - (c[k + 1] - c[k]);
            for (int i = 0; i < exactly; ++i) out.push_back(pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

GroupFingerprint fingerprint(const FiniteGroup& G) {
    GroupFingerprint fp;
    fp.order = G.order();
    auto derived = derived_subgroup(G);
    fp.derived_size = static_cast<int>(derived.size());
    fp.centre_size = static_cast<int>(centre(G).size());
    auto [ab, proj] = quotient_by_subgroup(G, derived);
    fp.abelian_invariants = abelian_invariants_of(ab);
    std::vector<int> counts(G.order() + 1, 0);
    for (Elem a = 0; a < G.order(); ++a) ++counts[G.elem_order(a)];
    for (int o = 1; o <= G.order(); ++o)
        if (counts[o]) fp.order_counts.emplace_back(o, counts[o]);
    return fp;
}

std::string format_id(const std::optional<SmallGroupId>& id) {
    if (!id) return "unknown";
    return "G(" + std::to_string(id->order) + "," + std::to_string(id->number) + ")";
}

std::optional<SmallGroupId> identify_small_group(const FiniteGroup& G) {
    GroupFingerprint fp = fingerprint(G);
    std::optional<SmallGroupId> hit;
    int matches = 0;
    for (const auto& e : small_group_catalog())
        if (e.fp == fp) {
            hit = e.id;
            ++matches;
        }
    if (matches != 1) return std::nullopt;
    return hit;
}

std::string small_group_name(const SmallGroupId& id) {
    for (const auto& e : small_group_catalog())
        if (e.id == id) return e.name;
    return format_id(id);
}

bool small_group_is_abelian(const SmallGroupId& id) {
    for (const auto& e : small_group_catalog())
        if (e.id == id) return e.abelian;
    return false;
}

namespace {

void factor_lists(int rest, int last, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    // Builds d_1 | d_2 | ... from the top: each new factor divides the previous one.
    if (rest == 1) {
        out.emplace_back(cur.rbegin(), cur.rend());
        return;
    }
    for (int d = 2; d <= rest; ++d) {
        if (rest % d || (last && last % d)) continue;
        // the remaining factors all divide d, so rest/d must be a divisor of a power of d
        cur.push_back(d);
        factor_lists(rest / d, d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> invariant_factor_lists(int order) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    factor_lists(order, 0, cur, out);
    // keep only lists whose largest factor is the exponent (first pick = largest)
    std::vector<std::vector<int>> valid;
    for (auto& l : out) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < l.size(); ++i) ok = ok && (l[i + 1] % l[i] == 0);
        if (ok) valid.push_back(std::move(l));
    }
    std::sort(valid.begin(), valid.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    valid.erase(std::unique(valid.begin(), valid.end()), valid.end());
    return valid;
}

FiniteGroup abelian_group(const std::vector<int>& invariants) {
    if (invariants.empty()) return abelian_from_columns(2, {{0}});
    const int k = static_cast<int>(invariants.size());
    const int N = invariants.back();
    std::vector<std::vector<int>> A(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) A[i][i] = N / invariants[i];
    return abelian_from_columns(N, A);
}

}  // namespace prym
