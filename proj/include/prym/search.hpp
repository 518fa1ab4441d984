#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prym/conditions.hpp"
#include "prym/datum.hpp"
#include "prym/group.hpp"

namespace prym {

struct SearchConfig {
    std::vector<int> r_values;
    bool abelian_only = false;
    int max_order = kMaxOrder;
    std::optional<long> max_gtilde;
    // Cayley-table files searched in addition to the abelian groups.
    std::vector<std::string> group_files;
    bool require_A = true;
    ClassifyOptions classify;
    int jobs = 1;
    std::size_t orbit_limit = 10'000'000;
};

struct ReportRow {
    int r = 0;
    long g_tilde = 0;
    long g = 0;
    long b = 0;
    long p = 0;
    int index = 0;
    std::string group_name;
    std::string group_id;
    std::string quotient_id;
    long dim_s2 = 0;
    bool B1 = false;
    bool b_ge_6 = false;
    BStatus B_status = BStatus::not_applicable;
    std::string canonical_tuple;
    std::string sigma;
    std::string note;

    bool operator==(const ReportRow&) const = default;
};

// Generating tuples of non-identity elements with product 1 and cover genus
// at most max_gtilde, in lexicographic order.
void enumerate_tuples(const FiniteGroup& G, int r, std::optional<long> max_gtilde,
                      const std::function<void(const std::vector<Elem>&)>& visit);

// All valid Prym data (G, tuple, sigma) of length r.
std::vector<PrymDatum> enumerate_data(const FiniteGroup& G, Elem sigma, int r, std::optional<long> max_gtilde);

struct CanonicalForm {
    std::vector<Elem> tuple;
    bool exact = true;  // false if the orbit bound was hit
};

// Lexicographically least tuple in the orbit under braid moves and the given
// automorphisms (all automorphisms fixing sigma when auts is empty).
CanonicalForm hurwitz_canonical(const PrymDatum& d, const std::vector<GroupHom>& auts = {},
                                std::size_t orbit_limit = 10'000'000);

// Largest order of a group admitting a cover of genus <= max_gtilde with r
// branch points, or nullopt if unbounded (r = 4).
std::optional<int> order_bound(int r, long max_gtilde);

struct SearchGroup {
    FiniteGroup group;
    std::string name;
    std::optional<SmallGroupId> id;
};

// Abelian groups of even order within the bounds, then the Cayley files.
std::vector<SearchGroup> collect_groups(const SearchConfig& cfg);

std::vector<ReportRow> run_search(const SearchConfig& cfg);
std::vector<ReportRow> run_search(const SearchConfig& cfg, const std::vector<SearchGroup>& groups);

// Group id of a row as (order, number), parsed from "G(n,k)".
std::optional<SmallGroupId> parse_group_id(const std::string& s);

struct ReferenceRow {
    int r = 0;
    long g_tilde = 0;
    long g = 0;
    long b = 0;
    long p = 0;
    int count = 0;
    std::string group_name;
    SmallGroupId group_id;
    SmallGroupId quotient_id;
    bool B1 = false;
    bool b_ge_6 = false;
    bool B = false;
};

std::vector<ReferenceRow> parse_reference_csv(const std::string& text);
const std::string& embedded_reference_csv();

struct TableKey {
    int r = 0;
    long g_tilde = 0;
    long g = 0;
    long b = 0;
    long p = 0;
    SmallGroupId group_id;
    bool B1 = false;
    bool b_ge_6 = false;
    bool B = false;

    auto operator<=>(const TableKey&) const = default;
    std::string str() const;
};

struct TableDiff {
    std::vector<std::pair<TableKey, int>> missing;  // in the reference only
    std::vector<std::pair<TableKey, int>> extra;    // in the search only
    // Same (r, g~, g, b, p, group) but different flags: (reference, ours).
    std::vector<std::pair<TableKey, TableKey>> flag_mismatch;
    int compared_reference = 0;
    int compared_ours = 0;

    bool empty() const { return missing.empty() && extra.empty() && flag_mismatch.empty(); }
    std::string summary() const;
};

TableDiff diff_table(const std::vector<ReportRow>& rows, const std::vector<ReferenceRow>& reference,
                     const SearchConfig& scope, const std::vector<SmallGroupId>& searched_groups);

struct TableResult {
    std::vector<ReportRow> rows;
    TableDiff diff;
};

TableResult reproduce_table(const SearchConfig& scope, const std::vector<ReferenceRow>& reference);

}  // namespace prym
