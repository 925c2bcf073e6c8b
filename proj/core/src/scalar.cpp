#include "corank/scalar.hpp"

namespace corank {

namespace {

bool probable_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for n < 3.3e24 with these bases
    auto mulmod = [](Int a, Int b, Int m) { return (a * b) % m; };
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, Int(n));
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Int mod_positive(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

} // namespace

Ring Ring::prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !probable_prime(p))
        throw domain_error("prime_field modulus must be a prime below 2^31");
    return {RingKind::prime_field, p};
}

std::string Ring::to_string() const {
    switch (kind) {
        case RingKind::integers: return "Z";
        case RingKind::rationals: return "Q";
        case RingKind::prime_field: return "F" + std::to_string(p);
    }
    return "?";
}

Scalar::Scalar(Ring ring, Int value) : ring_(ring), num_(std::move(value)) {
    canonicalize();
}

Scalar::Scalar(Ring ring, Int num, Int den)
    : ring_(ring), num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw domain_error("zero denominator");
    if (ring_.kind != RingKind::rationals && den_ != 1) {
        if (ring_.kind == RingKind::prime_field) {
            // interpret a/b as a * b^-1 mod p
            Scalar b(ring_, den_);
            den_ = 1;
            canonicalize();
            *this = *this * b.inverse();
            return;
        }
        throw domain_error("fractional value outside the rationals");
    }
    canonicalize();
}

void Scalar::canonicalize() {
    switch (ring_.kind) {
        case RingKind::integers:
            den_ = 1;
            break;
        case RingKind::rationals: {
            if (den_ < 0) { num_ = -num_; den_ = -den_; }
            Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
            if (g > 1) { num_ /= g; den_ /= g; }
            if (num_ == 0) den_ = 1;
            break;
        }
        case RingKind::prime_field:
            num_ = mod_positive(num_, ring_.p);
            den_ = 1;
            break;
    }
}

static void check_same(const Ring& a, const Ring& b) {
    if (a != b) throw domain_error("mixed coefficient rings");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(ring_, o.ring_);
    return Scalar(ring_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(ring_, o.ring_);
    return Scalar(ring_, num_ * o.num_, den_ * o.den_);
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(ring_, o.ring_);
    return num_ == o.num_ && den_ == o.den_;
}

bool Scalar::is_unit() const {
    if (is_zero()) return false;
    if (ring_.kind == RingKind::integers) return num_ == 1 || num_ == -1;
    return true;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    switch (ring_.kind) {
        case RingKind::integers:
            if (num_ == 1 || num_ == -1) return *this;
            throw domain_error("non-unit integer has no inverse");
        case RingKind::rationals:
            return Scalar(ring_, den_, num_);
        case RingKind::prime_field: {
            // extended Euclid
            Int a = num_, b = ring_.p, x0 = 1, x1 = 0;
            while (b != 0) {
                Int q = a / b;
                Int t = a - q * b; a = b; b = t;
                t = x0 - q * x1; x0 = x1; x1 = t;
            }
            return Scalar(ring_, x0);
        }
    }
    throw domain_error("bad ring");
}

bool Scalar::divides(const Scalar& o) const {
    check_same(ring_, o.ring_);
    if (is_zero()) return o.is_zero();
    if (ring_.kind != RingKind::integers) return true;
    return o.num_ % num_ == 0;
}

Scalar Scalar::div_exact(const Scalar& o) const {
    check_same(ring_, o.ring_);
    if (o.is_zero()) throw domain_error("division by zero");
    if (ring_.kind != RingKind::integers) return *this * o.inverse();
    if (num_ % o.num_ != 0) throw domain_error("inexact integer division");
    return Scalar(ring_, num_ / o.num_);
}

std::string Scalar::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Scalar scalar_from_string(Ring ring, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(ring, Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (ring.kind == RingKind::integers)
            throw domain_error("fractional value outside the rationals");
        if (den <= 0) throw domain_error("denominator must be positive");
        return Scalar(ring, num, den);
    } catch (const std::exception& e) {
        throw domain_error("bad scalar literal '" + text + "': " + e.what());
    }
}

} // namespace corank
