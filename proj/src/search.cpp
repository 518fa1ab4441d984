#include "prym/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <deque>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "prym/error.hpp"

namespace prym {

namespace {

constexpr int kMaxPackedLength = 10;

// Six bits per entry; needs order <= 64 and r <= 10.
std::uint64_t pack(const std::vector<Elem>& t) {
    std::uint64_t k = 0;
    for (Elem x : t) k = (k << 6) | static_cast<std::uint64_t>(x);
    return k;
}

void check_packable(const FiniteGroup& G, int r) {
    if (G.order() > kMaxOrder) throw InputError("group too large for the search");
    if (r > kMaxPackedLength) throw InputError("search supports at most 10 branch points");
}

// |G| (1 - 1/m) summed over the tuple gives 2 g~ - 2 + 2|G|.
struct GenusBudget {
    long limit;  // largest admissible sum of |G|(1 - 1/m)
    bool bounded;
};

GenusBudget genus_budget(int n, std::optional<long> max_gtilde) {
    if (!max_gtilde) return {0, false};
    return {2 * *max_gtilde - 2 + 2L * n, true};
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<Elem> apply_hom(const GroupHom& h, const std::vector<Elem>& t) {
    std::vector<Elem> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = h(t[i]);
    return out;
}

// Sorted multisets of non-identity elements with sum 0; abelian groups only.
void enumerate_multisets(const FiniteGroup& G, int r, std::optional<long> max_gtilde,
                         const std::function<void(const std::vector<Elem>&)>& visit) {
    const int n = G.order();
    const GenusBudget budget = genus_budget(n, max_gtilde);
    std::vector<long> weight(n);
    for (Elem x = 1; x < n; ++x) weight[x] = n - n / G.elem_order(x);
    std::vector<Elem> t(r);
    std::function<void(int, Elem, Elem, long)> rec = [&](int pos, Elem from, Elem sum, long w) {
        if (pos == r - 1) {
            const Elem last = G.inv(sum);
            if (last == 0 || last < from) return;
            if (budget.bounded && w + weight[last] > budget.limit) return;
            t[pos] = last;
            if (generates(G, t)) visit(t);
            return;
        }
        for (Elem x = from; x < n; ++x) {
            const long w2 = w + weight[x];
            if (budget.bounded && w2 + static_cast<long>(r - pos - 1) * (n / 2) > budget.limit) continue;
            t[pos] = x;
            rec(pos + 1, x, G.mul(sum, x), w2);
        }
    };
    if (n > 1) rec(0, 1, 0, 0);
}

std::string join_elems(const FiniteGroup& G, const std::vector<Elem>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ' ';
        s += G.format_elem(t[i]);
    }
    return s;
}

struct Candidate {
    int group = 0;
    std::vector<Elem> tuple;
    bool exact = true;
};

}  // namespace

void enumerate_tuples(const FiniteGroup& G, int r, std::optional<long> max_gtilde,
                      const std::function<void(const std::vector<Elem>&)>& visit) {
    if (r < 2) return;
    const int n = G.order();
    const GenusBudget budget = genus_budget(n, max_gtilde);
    std::vector<long> weight(n);
    for (Elem x = 1; x < n; ++x) weight[x] = n - n / G.elem_order(x);
    std::vector<Elem> t(r);
    std::function<void(int, Elem, long)> rec = [&](int pos, Elem prod, long w) {
        if (pos == r - 1) {
            const Elem last = G.inv(prod);
            if (last == 0) return;
            if (budget.bounded && w + weight[last] > budget.limit) return;
            t[pos] = last;
            if (generates(G, t)) visit(t);
            return;
        }
        for (Elem x = 1; x < n; ++x) {
            const long w2 = w + weight[x];
            if (budget.bounded && w2 + static_cast<long>(r - pos - 1) * (n / 2) > budget.limit) continue;
            t[pos] = x;
            rec(pos + 1, G.mul(prod, x), w2);
        }
    };
    if (n > 1) rec(0, 0, 0);
}

std::vector<PrymDatum> enumerate_data(const FiniteGroup& G, Elem sigma, int r, std::optional<long> max_gtilde) {
    std::vector<PrymDatum> out;
    auto invols = central_involutions(G);
    if (std::find(invols.begin(), invols.end(), sigma) == invols.end()) return out;
    enumerate_tuples(G, r, max_gtilde, [&](const std::vector<Elem>& t) { out.push_back(validate_datum(G, t, sigma)); });
    return out;
}

CanonicalForm hurwitz_canonical(const PrymDatum& d, const std::vector<GroupHom>& auts, std::size_t orbit_limit) {
    const FiniteGroup& G = d.group;
    std::vector<GroupHom> gens =
        automorphism_generators(auts.empty() ? automorphisms_fixing(G, d.sigma) : auts);
    std::set<std::vector<Elem>> seen{d.tuple};
    std::deque<std::vector<Elem>> queue{d.tuple};
    CanonicalForm out{d.tuple, true};
    while (!queue.empty()) {
        std::vector<Elem> t = std::move(queue.front());
        queue.pop_front();
        out.tuple = std::min(out.tuple, t);
        auto push = [&](std::vector<Elem> u) {
            if (seen.size() >= orbit_limit) {
                out.exact = false;
                return;
            }
            if (seen.insert(u).second) queue.push_back(std::move(u));
        };
        for (int i = 1; i < d.r; ++i) {
            push(braid_move(G, t, i, BraidDirection::right));
            push(braid_move(G, t, i, BraidDirection::left));
        }
        for (const auto& h : gens) push(apply_hom(h, t));
        if (!out.exact) break;
    }
    return out;
}

std::optional<int> order_bound(int r, long max_gtilde) {
    if (r <= 4) return std::nullopt;
    // |G| (r/2 - 2) <= 2 g~ - 2
    const long num = 4 * (max_gtilde - 1);
    return static_cast<int>(std::max(0L, num / (r - 4)));
}

std::vector<SearchGroup> collect_groups(const SearchConfig& cfg) {
    int max_order = std::min(cfg.max_order, kMaxOrder);
    if (cfg.max_gtilde) {
        int bound = 0;
        bool unbounded = false;
        for (int r : cfg.r_values) {
            auto b = order_bound(r, *cfg.max_gtilde);
            if (!b) unbounded = true;
            else bound = std::max(bound, *b);
        }
        if (!unbounded) max_order = std::min(max_order, bound);
    }
    std::vector<SearchGroup> out;
    for (int n = 2; n <= max_order; n += 2) {
        for (const auto& inv : invariant_factor_lists(n)) {
            SearchGroup sg;
            sg.group = abelian_group(inv);
            sg.id = identify_small_group(sg.group);
            if (sg.id) {
                sg.name = small_group_name(*sg.id);
            } else {
                sg.name.clear();
                for (int d : inv) sg.name += (sg.name.empty() ? "C" : "xC") + std::to_string(d);
            }
            out.push_back(std::move(sg));
        }
    }
    if (!cfg.abelian_only) {
        for (const auto& path : cfg.group_files) {
            SearchGroup sg;
            sg.group = read_cayley_file(path);
            if (sg.group.order() > max_order) continue;
            sg.id = identify_small_group(sg.group);
            sg.name = sg.id ? small_group_name(*sg.id) : std::filesystem::path(path).stem().string();
            out.push_back(std::move(sg));
        }
    }
    return out;
}

namespace {

std::vector<GroupHom> automorphism_group_generators(const FiniteGroup& G) {
    if (auto elem = elementary_automorphisms(G)) return *elem;
    return automorphism_generators(automorphisms_fixing(G, 0));
}

// Canonical tuples of one group: lexicographically least representatives of
// the orbits of braid moves and all automorphisms.
std::vector<Candidate> canonical_tuples(const SearchGroup& sg, int gi, int r, const SearchConfig& cfg) {
    const FiniteGroup& G = sg.group;
    check_packable(G, r);
    std::vector<Candidate> out;
    if (central_involutions(G).empty()) return out;
    const auto gens = automorphism_group_generators(G);
    std::unordered_set<std::uint64_t> visited;

    if (G.is_commutative()) {
        enumerate_multisets(G, r, cfg.max_gtilde, [&](const std::vector<Elem>& t) {
            if (visited.count(pack(t))) return;
            Candidate c{gi, t, true};
            std::vector<std::vector<Elem>> orbit{t};
            visited.insert(pack(t));
            for (std::size_t head = 0; head < orbit.size(); ++head) {
                for (const auto& h : gens) {
                    auto u = apply_hom(h, orbit[head]);
                    std::sort(u.begin(), u.end());
                    if (visited.insert(pack(u)).second) orbit.push_back(std::move(u));
                }
                if (orbit.size() > cfg.orbit_limit) {
                    c.exact = false;
                    break;
                }
            }
            out.push_back(std::move(c));
        });
        return out;
    }

    enumerate_tuples(G, r, cfg.max_gtilde, [&](const std::vector<Elem>& t) {
        if (visited.count(pack(t))) return;
        Candidate c{gi, t, true};
        std::deque<std::vector<Elem>> queue{t};
        std::size_t orbit = 1;
        visited.insert(pack(t));
        while (!queue.empty()) {
            std::vector<Elem> u = std::move(queue.front());
            queue.pop_front();
            auto push = [&](std::vector<Elem> v) {
                if (visited.insert(pack(v)).second) {
                    ++orbit;
                    queue.push_back(std::move(v));
                }
            };
            for (int i = 1; i < r; ++i) {
                push(braid_move(G, u, i, BraidDirection::right));
                push(braid_move(G, u, i, BraidDirection::left));
            }
            for (const auto& h : gens) push(apply_hom(h, u));
            if (orbit > cfg.orbit_limit) {
                c.exact = false;
                break;
            }
        }
        out.push_back(std::move(c));
    });
    return out;
}

// Families shown to be special by an argument outside this tool.
bool proved_elsewhere(const ReportRow& row) {
    return row.group_id == "G(48,32)" && row.r == 5 && row.g_tilde == 25 && row.g == 13 && row.b == 0;
}

}  // namespace

std::vector<ReportRow> run_search(const SearchConfig& cfg) { return run_search(cfg, collect_groups(cfg)); }

std::vector<ReportRow> run_search(const SearchConfig& cfg, const std::vector<SearchGroup>& groups) {
    for (int r : cfg.r_values)
        if (r < 4) throw InputError("r must be at least 4");

    struct Cell {
        int group;
        int r;
    };
    std::vector<Cell> cells;
    for (int r : cfg.r_values)
        for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) cells.push_back({gi, r});

    std::vector<std::vector<Candidate>> per_cell(cells.size());
    parallel_for(cells.size(), cfg.jobs, [&](std::size_t c) {
        per_cell[c] = canonical_tuples(groups[cells[c].group], cells[c].group, cells[c].r, cfg);
    });

    struct Item {
        const Candidate* cand;
        Elem sigma;
    };
    std::vector<Item> items;
    for (const auto& cell : per_cell)
        for (const auto& cand : cell)
            for (Elem s : central_involutions(groups[cand.group].group)) items.push_back({&cand, s});

    std::map<std::pair<int, Elem>, std::string> quotient_ids;
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi)
        for (Elem s : central_involutions(groups[gi].group)) {
            std::vector<Elem> H{0, s};
            auto q = quotient_by_subgroup(groups[gi].group, H).first;
            quotient_ids[{gi, s}] = format_id(identify_small_group(q));
        }

    std::vector<std::optional<ReportRow>> results(items.size());
    parallel_for(items.size(), cfg.jobs, [&](std::size_t k) {
        const Item& it = items[k];
        const SearchGroup& sg = groups[it.cand->group];
        PrymDatum d = validate_datum(sg.group, it.cand->tuple, it.sigma);
        if (cfg.max_gtilde && d.g_tilde > *cfg.max_gtilde) return;
        RepDecomposition V = hodge_decomposition(d);
        ConditionReport rep = classify_B(d, V, cfg.classify);
        if (cfg.require_A && !rep.cond_A) return;
        ReportRow row;
        row.r = d.r;
        row.g_tilde = d.g_tilde;
        row.g = d.g;
        row.b = d.b;
        row.p = d.p;
        row.group_name = sg.name;
        row.group_id = format_id(sg.id);
        row.quotient_id = quotient_ids.at({it.cand->group, it.sigma});
        row.dim_s2 = rep.dim_s2;
        row.B1 = rep.cond_B1;
        row.b_ge_6 = rep.b_ge_6;
        row.B_status = rep.status;
        row.canonical_tuple = join_elems(sg.group, it.cand->tuple);
        row.sigma = sg.group.format_elem(it.sigma);
        if (!it.cand->exact) row.note = "orbit bound exceeded";
        else if (rep.status == BStatus::inconclusive && proved_elsewhere(row)) row.note = "special by other means";
        results[k] = std::move(row);
    });

    using SortKey = std::tuple<int, long, long, long, long, int, int, std::string, std::vector<Elem>, Elem>;
    std::vector<std::pair<SortKey, ReportRow>> keyed;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (!results[k]) continue;
        const auto& row = *results[k];
        const SearchGroup& sg = groups[items[k].cand->group];
        SmallGroupId id = sg.id.value_or(SmallGroupId{sg.group.order(), 0});
        keyed.emplace_back(SortKey{row.r, row.g_tilde, row.g, row.b, row.p, id.order, id.number, sg.name,
                                   items[k].cand->tuple, items[k].sigma},
                           std::move(*results[k]));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<ReportRow> rows;
    for (std::size_t k = 0; k < keyed.size(); ++k) {
        ReportRow row = std::move(keyed[k].second);
        const bool same_block =
            !rows.empty() && std::tie(rows.back().r, rows.back().g_tilde, rows.back().g, rows.back().b, rows.back().p,
                                      rows.back().group_id, rows.back().group_name) ==
                                 std::tie(row.r, row.g_tilde, row.g, row.b, row.p, row.group_id, row.group_name);
        row.index = same_block ? rows.back().index + 1 : 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<SmallGroupId> parse_group_id(const std::string& s) {
    int a = 0, b = 0;
    if (std::sscanf(s.c_str(), "G(%d,%d)", &a, &b) == 2) return SmallGroupId{a, b};
    return std::nullopt;
}

std::vector<ReferenceRow> parse_reference_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<ReferenceRow> out;
    bool header = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != 14) throw InputError("reference line " + std::to_string(lineno) + ": expected 14 fields");
        try {
            ReferenceRow r;
            r.r = std::stoi(f[0]);
            r.g_tilde = std::stol(f[1]);
            r.g = std::stol(f[2]);
            r.b = std::stol(f[3]);
            r.p = std::stol(f[4]);
            r.count = std::stoi(f[5]);
            r.group_name = f[6];
            r.group_id = {std::stoi(f[7]), std::stoi(f[8])};
            r.quotient_id = {std::stoi(f[9]), std::stoi(f[10])};
            r.B1 = f[11] == "1";
            r.b_ge_6 = f[12] == "1";
            r.B = f[13] == "1";
            out.push_back(std::move(r));
        } catch (const std::logic_error&) {
            throw InputError("reference line " + std::to_string(lineno) + ": malformed number");
        }
    }
    return out;
}

std::string TableKey::str() const {
    std::ostringstream o;
    o << "(r=" << r << ", g~=" << g_tilde << ", g=" << g << ", b=" << b << ", p=" << p << ", "
      << (group_id.number ? format_id(group_id) : std::string("unknown")) << ", B1=" << (B1 ? "yes" : "no") << ", b>=6=" << (b_ge_6 ? "yes" : "no")
      << ", B=" << (B ? "yes" : "no") << ")";
    return o.str();
}

std::string TableDiff::summary() const {
    auto total = [](const std::vector<std::pair<TableKey, int>>& v) {
        int s = 0;
        for (const auto& [k, c] : v) s += c;
        return s;
    };
    std::ostringstream o;
    o << "diff: " << total(missing) << " missing, " << total(extra) << " extra, " << flag_mismatch.size()
      << " flag mismatches (" << compared_reference << " reference families, " << compared_ours
      << " found)";
    return o.str();
}

TableDiff diff_table(const std::vector<ReportRow>& rows, const std::vector<ReferenceRow>& reference,
                     const SearchConfig& scope, const std::vector<SmallGroupId>& searched_groups) {
    const std::set<int> rs(scope.r_values.begin(), scope.r_values.end());
    const std::set<SmallGroupId> ids(searched_groups.begin(), searched_groups.end());
    std::map<TableKey, int> ref, ours;
    TableDiff diff;
    for (const auto& row : reference) {
        if (!rs.count(row.r) || !ids.count(row.group_id)) continue;
        if (scope.max_gtilde && row.g_tilde > *scope.max_gtilde) continue;
        TableKey k{row.r, row.g_tilde, row.g, row.b, row.p, row.group_id, row.B1, row.b_ge_6, row.B};
        ref[k] += row.count;
        diff.compared_reference += row.count;
    }
    for (const auto& row : rows) {
        if (!is_certified(row.B_status)) continue;
        auto id = parse_group_id(row.group_id);
        TableKey k{row.r, row.g_tilde, row.g, row.b, row.p, id.value_or(SmallGroupId{}), row.B1, row.b_ge_6, true};
        ours[k] += 1;
        diff.compared_ours += 1;
    }
    std::map<TableKey, int> missing, extra;
    for (const auto& [k, c] : ref) {
        int o = ours.count(k) ? ours.at(k) : 0;
        if (c > o) missing[k] = c - o;
    }
    for (const auto& [k, c] : ours) {
        int f = ref.count(k) ? ref.at(k) : 0;
        if (c > f) extra[k] = c - f;
    }
    auto base = [](const TableKey& k) { return std::tie(k.r, k.g_tilde, k.g, k.b, k.p, k.group_id); };
    for (auto& [mk, mc] : missing) {
        for (auto& [ek, ec] : extra) {
            while (mc > 0 && ec > 0 && base(mk) == base(ek)) {
                diff.flag_mismatch.emplace_back(mk, ek);
                --mc;
                --ec;
            }
        }
    }
    for (const auto& [k, c] : missing)
        if (c > 0) diff.missing.emplace_back(k, c);
    for (const auto& [k, c] : extra)
        if (c > 0) diff.extra.emplace_back(k, c);
    return diff;
}

TableResult reproduce_table(const SearchConfig& scope, const std::vector<ReferenceRow>& reference) {
    auto groups = collect_groups(scope);
    TableResult out;
    out.rows = run_search(scope, groups);
    std::vector<SmallGroupId> ids;
    for (const auto& g : groups)
        if (g.id) ids.push_back(*g.id);
    out.diff = diff_table(out.rows, reference, scope, ids);
    return out;
}

}  // namespace prym
