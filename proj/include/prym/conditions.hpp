#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "prym/abelian.hpp"
#include "prym/characters.hpp"
#include "prym/datum.hpp"

namespace prym {

enum class BStatus {
    not_applicable,  // condition A fails
    certified_by_B1,
    certified_by_b6,
    certified_by_rank,
    refuted_generic,
    inconclusive,
};

std::string to_string(BStatus s);
std::optional<BStatus> parse_bstatus(const std::string& s);
inline bool is_certified(BStatus s) {
    return s == BStatus::certified_by_B1 || s == BStatus::certified_by_b6 || s == BStatus::certified_by_rank;
}

struct ClassifyOptions {
    std::uint64_t seed = 1;
    int trials = 3;
    bool allow_symbolic = false;
};

struct ConditionReport {
    long dim_s2 = 0;
    bool cond_A = false;
    bool cond_B1 = false;
    std::optional<int> b1_witness;  // character index
    bool b_ge_6 = false;
    BStatus status = BStatus::not_applicable;

    // Rank data, filled when the rank test ran.
    std::optional<int> sampled_rank;
    std::vector<mpz_class> sample_point;
    std::optional<int> symbolic_rank;
    std::vector<std::string> kernel;
};

struct ConditionA {
    long dim = 0;
    bool holds = false;
};

ConditionA check_A(const PrymDatum& d, const RepDecomposition& V);

struct ConditionB1 {
    bool holds = false;
    std::optional<int> witness;
};

ConditionB1 check_B1(const PrymDatum& d, const RepDecomposition& V, long dim_s2);

ConditionReport classify_B(const PrymDatum& d, const RepDecomposition& V, const ClassifyOptions& opt);
ConditionReport classify_B(const PrymDatum& d, const ClassifyOptions& opt);

}  // namespace prym
