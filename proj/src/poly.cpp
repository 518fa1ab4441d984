#include "prym/poly.hpp"

#include <algorithm>

#include "prym/error.hpp"

namespace prym {

namespace {

bool divides(const MPoly::Monomial& a, const MPoly::Monomial& b) {
    for (int i = 0; i < MPoly::kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MPoly::Monomial mono_mul(const MPoly::Monomial& a, const MPoly::Monomial& b) {
    MPoly::Monomial c{};
    for (int i = 0; i < MPoly::kMaxVars; ++i) {
        int s = a[i] + b[i];
        if (s > 255) throw InternalError("monomial exponent overflow");
        c[i] = static_cast<std::uint8_t>(s);
    }
    return c;
}

MPoly::Monomial mono_div(const MPoly::Monomial& a, const MPoly::Monomial& b) {
    MPoly::Monomial c{};
    for (int i = 0; i < MPoly::kMaxVars; ++i) c[i] = static_cast<std::uint8_t>(a[i] - b[i]);
    return c;
}

}  // namespace

MPoly::MPoly(long c) {
    if (c) terms_.emplace_back(Monomial{}, mpz_class(c));
}

MPoly::MPoly(const mpz_class& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MPoly MPoly::var(int v, int power) {
    if (v < 0 || v >= kMaxVars) throw InputError("too many polynomial variables");
    MPoly p;
    Monomial m{};
    m[v] = static_cast<std::uint8_t>(power);
    p.terms_.emplace_back(m, mpz_class(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    MPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (t.second != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

MPoly MPoly::operator-() const {
    MPoly p(*this);
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
            out.push_back(o.terms_[j++]);
        } else {
            mpz_class c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    std::vector<MPoly::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) terms.emplace_back(mono_mul(x.first, y.first), x.second * y.second);
    return MPoly::from_terms(std::move(terms));
}

MPoly MPoly::scaled(const mpz_class& c) const {
    if (c == 0) return MPoly();
    MPoly p(*this);
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

MPoly MPoly::div_exact(const MPoly& b) const {
    auto q = try_div(b);
    if (!q) throw InternalError("inexact polynomial division");
    return std::move(*q);
}

std::optional<MPoly> MPoly::try_div(const MPoly& b) const {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    MPoly r(*this);
    std::vector<Term> q;
    const Term& lb = b.leading();
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!divides(lb.first, lr.first) || !mpz_divisible_p(lr.second.get_mpz_t(), lb.second.get_mpz_t()))
            return std::nullopt;
        MPoly t;
        t.terms_.emplace_back(mono_div(lr.first, lb.first), mpz_class(lr.second / lb.second));
        q.push_back(t.terms_[0]);
        r -= t * b;
    }
    return from_terms(std::move(q));
}

int MPoly::degree_in(int v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.first[v]);
    return d;
}

MPoly MPoly::coeff_in(int v, int k) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.first[v] == k) {
            Term u = t;
            u.first[v] = 0;
            out.push_back(std::move(u));
        }
    return from_terms(std::move(out));
}

mpz_class MPoly::evaluate(const std::vector<mpz_class>& point) const {
    mpz_class total = 0;
    for (const auto& t : terms_) {
        mpz_class v = t.second;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!t.first[i]) continue;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), point.at(i).get_mpz_t(), t.first[i]);
            v *= pw;
        }
        total += v;
    }
    return total;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        mpz_class a = abs(c);
        std::string mono;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += i < static_cast<int>(names.size()) ? names[i] : "v" + std::to_string(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mono.empty()) s += a.get_str();
        else if (a == 1) s += mono;
        else s += a.get_str() + "*" + mono;
        first = false;
    }
    return s;
}

MPoly normalize_sign(const MPoly& a) {
    if (!a.is_zero() && a.leading().second < 0) return -a;
    return a;
}

namespace {

int first_var(const MPoly& a, const MPoly& b) {
    for (int v = 0; v < MPoly::kMaxVars; ++v)
        if (a.contains_var(v) || b.contains_var(v)) return v;
    return -1;
}

MPoly content_in(const MPoly& a, int v) {
    MPoly c;
    for (int k = a.degree_in(v); k >= 0; --k) {
        MPoly ck = a.coeff_in(v, k);
        if (!ck.is_zero()) c = gcd(c, ck);
    }
    return c;
}

MPoly primitive_in(const MPoly& a, int v) {
    if (a.is_zero()) return a;
    return a.div_exact(content_in(a, v));
}

MPoly pseudo_rem(MPoly a, const MPoly& b, int v) {
    const int db = b.degree_in(v);
    const MPoly lb = b.coeff_in(v, db);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        const int da = a.degree_in(v);
        MPoly la = a.coeff_in(v, da);
        a = a * lb - la * MPoly::var(v, da - db) * b;
    }
    return a;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    const int v = first_var(a, b);
    if (v < 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.leading().second.get_mpz_t(), b.leading().second.get_mpz_t());
        return MPoly(g);
    }
    MPoly c = gcd(content_in(a, v), content_in(b, v));
    MPoly pa = primitive_in(a, v);
    MPoly pb = primitive_in(b, v);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree_in(v) > 0) {
        MPoly r = pseudo_rem(pa, pb, v);
        pa = std::move(pb);
        pb = primitive_in(r, v);
    }
    MPoly g = pb.is_zero() ? primitive_in(pa, v) : MPoly(1);
    return normalize_sign(c * g);
}

}  // namespace prym
