#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace prym {

// Reduction data for Z[zeta_e] = Z[x]/Phi_e(x).
struct CycloContext {
    int e = 1;
    int phi = 1;
    std::vector<std::int64_t> minpoly;             // Phi_e, monic, degree phi
    std::vector<std::vector<std::int64_t>> power;  // zeta^k in the power basis, 0 <= k < e
};

// Shared per-e context; thread-safe.
std::shared_ptr<const CycloContext> cyclo_context(int e);

std::vector<std::int64_t> cyclotomic_polynomial(int e);

// Element of Z[zeta_e] in the power basis 1, zeta, ..., zeta^(phi-1).
class Cyclo {
public:
    Cyclo() = default;
    explicit Cyclo(std::shared_ptr<const CycloContext> ctx);

    static Cyclo integer(std::shared_ptr<const CycloContext> ctx, std::int64_t v);
    static Cyclo zeta(std::shared_ptr<const CycloContext> ctx, long k);

    const CycloContext& ctx() const { return *ctx_; }
    const std::shared_ptr<const CycloContext>& ctx_ptr() const { return ctx_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(std::int64_t k);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(Cyclo a, std::int64_t k) { return a *= k; }
    bool operator==(const Cyclo& o) const { return c_ == o.c_; }

    // zeta -> zeta^k for k coprime to e; k = -1 is complex conjugation.
    Cyclo galois(long k) const;
    Cyclo conj() const { return galois(-1); }

    // Exact division by an integer; throws InternalError if not exact.
    Cyclo div_exact(std::int64_t k) const;

    bool is_zero() const;
    bool is_integer() const;
    std::int64_t to_integer() const;  // throws unless is_integer()

    std::string str() const;

private:
    std::shared_ptr<const CycloContext> ctx_;
    std::vector<std::int64_t> c_;
};

}  // namespace prym
