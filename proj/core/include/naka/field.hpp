#ifndef NAKA_FIELD_HPP
#define NAKA_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace naka {

/// Exact coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint64_t characteristic = 0;  // the prime p, 0 for the rationals

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
    static FieldSpec prime_field(std::uint64_t p);

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;
};

bool is_prime(std::uint64_t n);

/// A value in a fixed FieldSpec: an arbitrary-precision rational in lowest
/// terms with positive denominator, or a residue in [0, p).
class Scalar {
  public:
    Scalar() = default;  // zero over the rationals

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long n);
    static Scalar rational(mpq_class q);
    static Scalar residue(std::uint64_t v, std::uint64_t p);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero
    Scalar& operator+=(const Scalar& o);

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "p/q" for rationals (or "p" when q = 1), decimal residue for F_p.
    std::string str() const;

    const mpq_class& rat() const { return rat_; }
    std::uint64_t res() const { return val_; }

  private:
    FieldSpec field_ = FieldSpec::rationals();
    mpq_class rat_ = 0;      // used when kind = rationals
    std::uint64_t val_ = 0;  // used when kind = prime_field

    void require_same_field(const Scalar& o) const;
};

/// Parses "a" or "a/b" (rationals) or a decimal residue (F_p).
Scalar parse_scalar(const FieldSpec& f, const std::string& text);

}  // namespace naka

#endif
