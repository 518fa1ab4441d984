#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace prym {

// Sparse polynomial over Z in at most kMaxVars variables, lex order with
// variable 0 most significant. Terms are kept sorted in decreasing order.
class MPoly {
public:
    static constexpr int kMaxVars = 16;
    using Monomial = std::array<std::uint8_t, kMaxVars>;
    using Term = std::pair<Monomial, mpz_class>;

    MPoly() = default;
    explicit MPoly(long c);
    explicit MPoly(const mpz_class& c);
    static MPoly var(int v, int power = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const { return terms_.front(); }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const mpz_class& c) const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    // Exact quotient; throws InternalError if b does not divide *this.
    MPoly div_exact(const MPoly& b) const;
    // Quotient if b divides *this exactly, otherwise nullopt.
    std::optional<MPoly> try_div(const MPoly& b) const;

    int degree_in(int v) const;
    bool contains_var(int v) const { return degree_in(v) > 0; }
    // Coefficient of var_v^k, a polynomial free of var_v.
    MPoly coeff_in(int v, int k) const;

    // Evaluation at integer points for all variables.
    mpz_class evaluate(const std::vector<mpz_class>& point) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    static MPoly from_terms(std::vector<Term> terms);  // sorts and combines
    std::vector<Term> terms_;
};

MPoly gcd(const MPoly& a, const MPoly& b);

// Makes the leading coefficient positive.
MPoly normalize_sign(const MPoly& a);

}  // namespace prym
