#include "naka/field.hpp"

namespace naka {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32))
        throw std::invalid_argument("prime field characteristic must fit in 32 bits");
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
    return FieldSpec{Kind::prime_field, p};
}

std::string FieldSpec::str() const {
    return kind == Kind::rationals ? "Q" : "F_" + std::to_string(characteristic);
}

namespace {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long n) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldSpec::Kind::rationals) {
        s.rat_ = n;
    } else {
        long long p = static_cast<long long>(f.characteristic);
        long long r = n % p;
        if (r < 0) r += p;
        s.val_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::rational(mpq_class q) {
    Scalar s;
    q.canonicalize();
    s.rat_ = std::move(q);
    return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
    Scalar s;
    s.field_ = FieldSpec::prime_field(p);
    s.val_ = v % p;
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldSpec::Kind::rationals ? rat_.get_num() == 0 : val_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldSpec::Kind::rationals ? rat_ == 1 : val_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar s = *this;
    if (field_.kind == FieldSpec::Kind::rationals) {
        s.rat_ += o.rat_;
    } else {
        std::uint64_t v = val_ + o.val_;
        if (v >= field_.characteristic) v -= field_.characteristic;
        s.val_ = v;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    if (field_.kind == FieldSpec::Kind::rationals) {
        rat_ += o.rat_;
    } else {
        val_ += o.val_;
        if (val_ >= field_.characteristic) val_ -= field_.characteristic;
    }
    return *this;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    Scalar s = *this;
    if (field_.kind == FieldSpec::Kind::rationals) {
        s.rat_ -= o.rat_;
    } else {
        s.val_ = (val_ + field_.characteristic - o.val_) % field_.characteristic;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar s = *this;
    if (field_.kind == FieldSpec::Kind::rationals) {
        if (rat_.get_num() == 0 || o.rat_.get_num() == 0)
            s.rat_ = 0;
        else
            s.rat_ *= o.rat_;
    } else {
        s.val_ = mod_mul(val_, o.val_, field_.characteristic);
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.kind == FieldSpec::Kind::rationals) {
        s.rat_ = -rat_;
    } else if (val_ != 0) {
        s.val_ = field_.characteristic - val_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (field_.kind == FieldSpec::Kind::rationals) {
        s.rat_ = 1 / rat_;
    } else {
        s.val_ = mod_pow(val_, field_.characteristic - 2, field_.characteristic);
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldSpec::Kind::rationals ? rat_ == o.rat_ : val_ == o.val_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldSpec::Kind::prime_field) return std::to_string(val_);
    return rat_.get_str();
}

Scalar parse_scalar(const FieldSpec& f, const std::string& text) {
    if (f.kind == FieldSpec::Kind::prime_field) {
        long long v = std::stoll(text);
        long long p = static_cast<long long>(f.characteristic);
        long long r = v % p;
        if (r < 0) r += p;
        return Scalar::residue(static_cast<std::uint64_t>(r), f.characteristic);
    }
    mpq_class q(text);
    q.canonicalize();
    return Scalar::rational(q);
}

}  // namespace naka
