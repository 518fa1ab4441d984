#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace prym {

using Elem = int;

// Largest group order handled by the enumeration-based algorithms.
inline constexpr int kMaxOrder = 64;

// Provenance of a group built from an abelian cover matrix: the group is the
// span of `columns` inside (Z/N)^rank and coords[e] is the vector of element e.
struct AbelianData {
    int N = 0;
    int rank = 0;
    std::vector<std::vector<int>> columns;
    std::vector<std::vector<int>> coords;
};

class FiniteGroup {
public:
    FiniteGroup() = default;

    // Builds a group from a row-major Cayley table with identity 0.
    // Checks the group axioms exhaustively.
    static FiniteGroup from_table(int n, std::vector<int> table);

    int order() const { return n_; }
    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inv(Elem a) const;
    Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
    Elem pow(Elem a, long k) const;
    int elem_order(Elem a) const;
    int exponent() const;
    bool is_commutative() const;

    std::span<const int> table() const { return table_; }
    const AbelianData* abelian() const;

    // Abelian provenance only: index of a coordinate vector, or -1.
    Elem find_coords(std::span<const int> v) const;

    std::string format_elem(Elem e) const;

    // Identity of the underlying storage; equal handles share all data.
    const void* id() const { return impl_.get(); }
    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl;
    friend FiniteGroup abelian_from_columns(int, const std::vector<std::vector<int>>&);
    static FiniteGroup make(int n, std::vector<int> table, std::optional<AbelianData> ab);

    std::shared_ptr<const Impl> impl_;
    int n_ = 0;
    std::span<const int> table_;
};

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<Elem> image;

    Elem operator()(Elem x) const { return image[x]; }
};

// Span of the columns of the m x r matrix A (given as m rows) in (Z/N)^m.
FiniteGroup abelian_from_columns(int N, const std::vector<std::vector<int>>& A);

// "order n" header followed by n rows of n indices.
FiniteGroup parse_cayley(std::istream& in);
FiniteGroup read_cayley_file(const std::string& path);
void write_cayley(std::ostream& out, const FiniteGroup& G);

std::vector<Elem> subgroup_closure(const FiniteGroup& G, std::span<const Elem> gens);
bool generates(const FiniteGroup& G, std::span<const Elem> gens);
std::vector<Elem> centre(const FiniteGroup& G);
std::vector<Elem> derived_subgroup(const FiniteGroup& G);

std::pair<FiniteGroup, GroupHom> quotient_by_subgroup(const FiniteGroup& G, std::span<const Elem> H);

std::vector<Elem> central_involutions(const FiniteGroup& G);

// Automorphisms fixing s. s = 0 gives the full automorphism group.
std::vector<GroupHom> automorphisms_fixing(const FiniteGroup& G, Elem s,
                                           int max_order = kMaxOrder,
                                           std::size_t max_count = 2'000'000);

// Unit scalings and transvections on the diagonal basis of a group built by
// abelian_group. They generate the full automorphism group without listing
// it. nullopt for groups of any other shape.
std::optional<std::vector<GroupHom>> elementary_automorphisms(const FiniteGroup& G);

// Small generating set of the group of automorphisms in `auts`.
std::vector<GroupHom> automorphism_generators(const std::vector<GroupHom>& auts);

// Elements in an order that makes the greedy generating set small.
std::vector<Elem> small_generating_set(const FiniteGroup& G);

// Relabels G by the permutation perm (new index of element e is perm[e]);
// perm[0] must be 0.
FiniteGroup relabel(const FiniteGroup& G, std::span<const int> perm);

// Isomorphism-invariant summary used for small-group identification.
struct GroupFingerprint {
    int order = 0;
    std::vector<int> abelian_invariants;              // of G/G', prime powers ascending
    std::vector<std::pair<int, int>> order_counts;    // (element order, count)
    int centre_size = 0;
    int derived_size = 0;

    bool operator==(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const FiniteGroup& G);

struct SmallGroupId {
    int order = 0;
    int number = 0;

    bool operator==(const SmallGroupId&) const = default;
    auto operator<=>(const SmallGroupId&) const = default;
};

std::string format_id(const std::optional<SmallGroupId>& id);

// Lookup in the embedded fingerprint table; nullopt means "unknown".
std::optional<SmallGroupId> identify_small_group(const FiniteGroup& G);

// Conventional name of a catalogued group, e.g. "C2xC4".
std::string small_group_name(const SmallGroupId& id);
bool small_group_is_abelian(const SmallGroupId& id);

struct CatalogEntry {
    SmallGroupId id;
    const char* name;
    bool abelian;
    GroupFingerprint fp;
};
const std::vector<CatalogEntry>& small_group_catalog();

// Invariant factors d_1 | d_2 | ... of an abelian group of the given order.
std::vector<std::vector<int>> invariant_factor_lists(int order);

// The abelian group with the given invariant factors, embedded in (Z/N)^k
// with N the exponent.
FiniteGroup abelian_group(const std::vector<int>& invariants);

}  // namespace prym
