#include "posetcomp/scalar.hpp"

#include <ostream>

#include "posetcomp/error.hpp"

namespace posetcomp {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::antisymmetry_violation: return "antisymmetry-violation";
        case ErrorKind::unknown_name: return "unknown-name";
        case ErrorKind::not_t0: return "not-T0";
        case ErrorKind::index_out_of_range: return "index-out-of-range";
        case ErrorKind::degree_mismatch: return "degree-mismatch";
        case ErrorKind::degree_underflow: return "degree-underflow";
        case ErrorKind::arity_mismatch: return "arity-mismatch";
        case ErrorKind::composite_nonzero: return "composite-nonzero";
        case ErrorKind::factorization_violation: return "factorization-violation";
        case ErrorKind::resource_limit: return "resource-limit";
        case ErrorKind::field_mismatch: return "field-mismatch";
        case ErrorKind::invalid_field: return "invalid-field";
        case ErrorKind::division_by_zero: return "division-by-zero";
        case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

namespace {

std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

Scalar Scalar::modular(std::int64_t v, std::uint64_t p) {
    Scalar s;
    s.p_ = p;
    s.r_ = reduce(v, p);
    return s;
}

void Scalar::coerce_to(std::uint64_t p) {
    if (p_ == p) return;
    if (p_ != 0) throw Error(ErrorKind::field_mismatch, "scalars from different prime fields");
    std::uint64_t num = reduce_mpz(q_.get_num(), p);
    std::uint64_t den = reduce_mpz(q_.get_den(), p);
    if (den == 0) throw Error(ErrorKind::division_by_zero, "rational denominator vanishes mod " + std::to_string(p));
    r_ = mulmod(num, powmod(den, p - 2, p), p);
    p_ = p;
    q_ = 0;
}

void Scalar::unify(Scalar& o) {
    if (p_ == o.p_) return;
    if (p_ == 0) coerce_to(o.p_);
    else o.coerce_to(p_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero");
    Scalar s = *this;
    if (p_ == 0) s.q_ = 1 / q_;
    else s.r_ = powmod(r_, p_ - 2, p_);
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Scalar b = o;
    unify(b);
    if (p_ == 0) q_ += b.q_;
    else r_ = (r_ + b.r_) % p_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    Scalar b = o;
    unify(b);
    if (p_ == 0) q_ *= b.q_;
    else r_ = mulmod(r_, b.r_, p_);
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ == 0) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : p_ - r_;
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
    Scalar x = a, y = b;
    x.unify(y);
    return x.r_ == y.r_;
}

std::string Scalar::to_string() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

Scalar FieldSpec::from_int(std::int64_t v) const {
    return prime == 0 ? Scalar(static_cast<long>(v)) : Scalar::modular(v, prime);
}

std::string FieldSpec::name() const { return prime == 0 ? "q" : "gf:" + std::to_string(prime); }

FieldSpec FieldSpec::gf(std::uint64_t p) {
    if (!is_prime(p) || p >= (1ULL << 62))
        throw Error(ErrorKind::invalid_field, "not a usable prime: " + std::to_string(p));
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rational();
    if (text.rfind("gf:", 0) == 0 && text.size() > 3) {
        const std::string digits = text.substr(3);
        if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
            throw Error(ErrorKind::invalid_field, "bad field spec: " + text);
        return gf(std::stoull(digits));
    }
    throw Error(ErrorKind::invalid_field, "bad field spec: " + text + " (expected q or gf:<prime>)");
}

}  // namespace posetcomp
