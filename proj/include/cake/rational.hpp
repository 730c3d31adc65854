#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cake {

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct protocol_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational, always in lowest terms with positive denominator.
/// Thin wrapper over GMP's mpq_class; every constructor canonicalizes.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long n, long d) : q_(n, d) { canon(); }
    explicit Rat(const mpq_class& q) : q_(q) { canon(); }
    explicit Rat(const mpz_class& n) : q_(n) {}

    /// Parses "p/q" or "p". Throws domain_error on malformed input or q = 0.
    static Rat parse(const std::string& s);

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Decimal rendering with 15 significant digits (for CSV output).
    std::string decimal() const;

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (sgn(b.q_) == 0) throw domain_error("division by zero rational");
        return Rat(mpq_class(a.q_ / b.q_));
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

    double to_double() const { return q_.get_d(); }

private:
    void canon() {
        if (q_.get_den() == 0) throw domain_error("zero denominator");
        q_.canonicalize();
    }
    mpq_class q_;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

} // namespace cake
