#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace posetcomp {

/// Exact element of Q or of GF(p).
///
/// A scalar carries its own modulus (0 means rational). Integer-valued
/// rationals are coerced into GF(p) on first contact with a modular value,
/// so literals such as Scalar(1) work in either field.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Scalar modular(std::int64_t v, std::uint64_t p);

    bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }
    std::uint64_t modulus() const { return p_; }
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

    /// Reduces a rational into GF(p); throws when the denominator vanishes.
    void coerce_to(std::uint64_t p);

private:
    void unify(Scalar& o);

    mpq_class q_{0};
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Runtime field choice: Q (prime == 0) or GF(prime).
struct FieldSpec {
    std::uint64_t prime = 0;

    bool is_rational() const { return prime == 0; }
    Scalar from_int(std::int64_t v) const;
    std::string name() const;

    /// Accepts "q" or "gf:<p>" with p prime.
    static FieldSpec parse(const std::string& text);
    static FieldSpec rational() { return {}; }
    static FieldSpec gf(std::uint64_t p);
};

bool is_prime(std::uint64_t n);

}  // namespace posetcomp
