#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace corank {

using Int = boost::multiprecision::cpp_int;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RingKind { integers, rationals, prime_field };

/// Coefficient domain descriptor. `p` is only meaningful for prime fields.
struct Ring {
    RingKind kind = RingKind::integers;
    std::int64_t p = 0;

    static Ring integers() { return {RingKind::integers, 0}; }
    static Ring rationals() { return {RingKind::rationals, 0}; }
    static Ring prime_field(std::int64_t p);

    bool is_field() const { return kind != RingKind::integers; }
    bool is_integers() const { return kind == RingKind::integers; }
    bool is_rationals() const { return kind == RingKind::rationals; }
    bool is_prime_field() const { return kind == RingKind::prime_field; }
    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Ring& o) const { return !(*this == o); }
    std::string to_string() const;
};

/// Exact ring element. Integers and prime-field residues keep den == 1;
/// rationals are stored reduced with positive denominator; residues are
/// canonical in [0, p).
class Scalar {
  public:
    Scalar() = default;
    Scalar(Ring ring, Int value);
    Scalar(Ring ring, Int num, Int den);

    static Scalar zero(Ring ring) { return Scalar(ring, 0); }
    static Scalar one(Ring ring) { return Scalar(ring, 1); }

    const Ring& ring() const { return ring_; }
    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws over the integers unless +-1.
    Scalar inverse() const;
    /// Exact quotient; throws if `o` does not divide exactly.
    Scalar div_exact(const Scalar& o) const;
    bool divides(const Scalar& o) const;
    /// True for elements with a multiplicative inverse.
    bool is_unit() const;

    std::string to_string() const;

  private:
    void canonicalize();

    Ring ring_{};
    Int num_ = 0;
    Int den_ = 1;
};

Scalar scalar_from_string(Ring ring, const std::string& text);

} // namespace corank
