#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gaussdioph {

/**
 * GaussianInt: exact element a + bi of Z[i] with unbounded integer
 * coordinates. All arithmetic is exact; nothing in this library rounds.
 */
class GaussianInt {
public:
    GaussianInt() : re_(0), im_(0) {}
    GaussianInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianInt(long re, long im) : re_(re), im_(im) {}
    explicit GaussianInt(long re) : re_(re), im_(0) {}

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    // N(z) = re^2 + im^2; multiplicative and zero only at z = 0.
    mpz_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianInt conj() const { return {re_, -im_}; }

    GaussianInt operator-() const { return {-re_, -im_}; }

    GaussianInt operator+(const GaussianInt& w) const { return {re_ + w.re_, im_ + w.im_}; }
    GaussianInt operator-(const GaussianInt& w) const { return {re_ - w.re_, im_ - w.im_}; }
    GaussianInt operator*(const GaussianInt& w) const {
        return {re_ * w.re_ - im_ * w.im_, re_ * w.im_ + im_ * w.re_};
    }

    GaussianInt& operator+=(const GaussianInt& w) { re_ += w.re_; im_ += w.im_; return *this; }
    GaussianInt& operator-=(const GaussianInt& w) { re_ -= w.re_; im_ -= w.im_; return *this; }
    GaussianInt& operator*=(const GaussianInt& w) { *this = *this * w; return *this; }

    bool operator==(const GaussianInt& w) const { return re_ == w.re_ && im_ == w.im_; }
    bool operator!=(const GaussianInt& w) const { return !(*this == w); }

    GaussianInt times_i() const { return {-im_, re_}; }

    // i^k * z for any integer k.
    GaussianInt times_i_pow(long k) const;

    GaussianInt square() const { return *this * *this; }

private:
    mpz_class re_, im_;
};

// Lexicographic (re, im) order; used only for deterministic sorting.
int cmp(const GaussianInt& a, const GaussianInt& b);
inline bool operator<(const GaussianInt& a, const GaussianInt& b) { return cmp(a, b) < 0; }

inline const GaussianInt& one_plus_i() {
    static const GaussianInt v(1, 1);
    return v;
}

/**
 * UnitPower: exponent n of the unit i^n, reduced mod 4.
 */
class UnitPower {
public:
    explicit UnitPower(long n = 0) : n_(static_cast<int>(((n % 4) + 4) % 4)) {}

    int value() const { return n_; }
    UnitPower inverse() const { return UnitPower(-n_); }
    UnitPower operator+(UnitPower o) const { return UnitPower(n_ + o.n_); }
    UnitPower operator-(UnitPower o) const { return UnitPower(n_ - o.n_); }
    bool operator==(UnitPower o) const { return n_ == o.n_; }
    bool operator!=(UnitPower o) const { return n_ != o.n_; }

    // i^n as an element of Z[i].
    GaussianInt to_gaussian() const;

    // i^n * z.
    GaussianInt apply(const GaussianInt& z) const { return z.times_i_pow(n_); }

private:
    int n_;
};

// ---- ring operations ----

// Euclidean division: z = q*w + r with N(r) <= N(w)/2. Each coordinate of
// z/w is rounded to the nearest integer, ties toward -infinity, so the
// quotient (and every gcd built on it) is deterministic.
std::pair<GaussianInt, GaussianInt> divrem(const GaussianInt& z, const GaussianInt& w);

// ---- parity classes ----

// The four-way partition of nonzero elements by (re+im mod 2, re mod 2).
enum class ParityClass { E0, EI, O0, OI };

const char* to_string(ParityClass c);

bool is_even(const GaussianInt& z);  // divisible by 1+i
bool is_odd(const GaussianInt& z);

// Throws std::domain_error on z = 0: the classes partition nonzero elements.
ParityClass classify(const GaussianInt& z);

// Odd with re = 1 mod 4; the multiplicative submonoid holding one associate
// of every odd element.
bool is_OI(const GaussianInt& z);

// E0 refinement: gcd(re, im) = 2 over Z.
bool is_E0_prime(const GaussianInt& z);

// E0 refinement: z = (1+i)^2 * beta with beta odd.
bool is_E0_dblprime(const GaussianInt& z);

// (R(z^2) mod 4, I(z^2) mod 4). By class: E0->(0,0), EI->(0,2),
// O0->(3,0), OI->(1,0).
std::pair<int, int> square_residues(const GaussianInt& z);

// ---- unit normalization ----

// z = i^n * z' with z' in the fundamental sector re > 0, -re < im <= re.
// The pair is unique; throws on z = 0.
std::pair<UnitPower, GaussianInt> normalize_to_D(const GaussianInt& z);

// z = i^n * beta with beta odd and re(beta) = 1 mod 4; unique for odd z.
// Throws on even or zero input.
std::pair<UnitPower, GaussianInt> normalize_odd_to_OI(const GaussianInt& z);

// ---- text form ----

// Canonical text form is always "a+bi" / "a-bi" with no spaces and an
// explicit imaginary coefficient ("-2-1i", "3+0i"). Parsing additionally
// accepts "a", "bi", an omitted unit coefficient ("5+i", "-i") and a
// Unicode minus sign.
std::string to_string(const GaussianInt& z);
GaussianInt parse_gaussian(std::string_view text);  // throws std::invalid_argument

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

}  // namespace gaussdioph
