#include "prym/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "prym/error.hpp"

namespace prym {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of a by the monic polynomial b.
Poly divide_monic(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        std::int64_t c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw InternalError("cyclotomic division left a remainder");
    return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int e) {
    if (e < 1) throw InputError("cyclotomic index must be positive");
    Poly p(e + 1, 0);
    p[0] = -1;
    p[e] = 1;
    for (int d = 1; d < e; ++d)
        if (e % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    return p;
}

std::shared_ptr<const CycloContext> cyclo_context(int e) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycloContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    auto ctx = std::make_shared<CycloContext>();
    ctx->e = e;
    ctx->minpoly = cyclotomic_polynomial(e);
    ctx->phi = static_cast<int>(ctx->minpoly.size()) - 1;
    const int phi = ctx->phi;
    Poly cur(phi, 0);
    cur[0] = 1;
    for (int k = 0; k < e; ++k) {
        ctx->power.push_back(cur);
        // multiply by x and reduce
        std::int64_t top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (phi == 0) continue;
        for (int i = 0; i < phi; ++i) cur[i] -= top * ctx->minpoly[i];
    }
    cache.emplace(e, ctx);
    return ctx;
}

Cyclo::Cyclo(std::shared_ptr<const CycloContext> ctx) : ctx_(std::move(ctx)), c_(ctx_->phi, 0) {}

Cyclo Cyclo::integer(std::shared_ptr<const CycloContext> ctx, std::int64_t v) {
    Cyclo r(std::move(ctx));
    r.c_[0] = v;
    return r;
}

Cyclo Cyclo::zeta(std::shared_ptr<const CycloContext> ctx, long k) {
    Cyclo r(ctx);
    long e = ctx->e;
    r.c_ = ctx->power[((k % e) + e) % e];
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(std::int64_t k) {
    for (auto& x : c_) x *= k;
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const CycloContext& ctx = *a.ctx_;
    const int phi = ctx.phi;
    std::vector<std::int64_t> prod(2 * phi, 0);
    for (int i = 0; i < phi; ++i) {
        if (!a.c_[i]) continue;
        for (int j = 0; j < phi; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    Cyclo r(a.ctx_);
    for (int k = 0; k < 2 * phi; ++k) {
        if (!prod[k]) continue;
        const auto& pk = ctx.power[k % ctx.e];
        for (int i = 0; i < phi; ++i) r.c_[i] += prod[k] * pk[i];
    }
    return r;
}

Cyclo Cyclo::galois(long k) const {
    const long e = ctx_->e;
    Cyclo r(ctx_);
    for (int i = 0; i < ctx_->phi; ++i) {
        if (!c_[i]) continue;
        const auto& p = ctx_->power[(((i * k) % e) + e) % e];
        for (int j = 0; j < ctx_->phi; ++j) r.c_[j] += c_[i] * p[j];
    }
    return r;
}

Cyclo Cyclo::div_exact(std::int64_t k) const {
    Cyclo r(*this);
    for (auto& x : r.c_) {
        if (x % k != 0) throw InternalError("inexact division in cyclotomic ring");
        x /= k;
    }
    return r;
}

bool Cyclo::is_zero() const {
    for (auto x : c_)
        if (x) return false;
    return true;
}

bool Cyclo::is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

std::int64_t Cyclo::to_integer() const {
    if (!is_integer()) throw InternalError("cyclotomic value is not an integer: " + str());
    return c_.empty() ? 0 : c_[0];
}

std::string Cyclo::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s + "]";
}

}  // namespace prym
