#include "gaussdioph/gaussian_int.hpp"

#include <cctype>
#include <ostream>

namespace gaussdioph {

namespace {

// Non-negative residue of v mod m (m small and positive).
int residue(const mpz_class& v, unsigned long m) {
    return static_cast<int>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

// Nearest integer to a/n with ties toward -infinity; n > 0.
mpz_class round_half_down(const mpz_class& a, const mpz_class& n) {
    mpz_class num = 2 * a + n - 1;
    mpz_class den = 2 * n;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

GaussianInt GaussianInt::times_i_pow(long k) const {
    switch (((k % 4) + 4) % 4) {
        case 0: return *this;
        case 1: return {-im_, re_};
        case 2: return {-re_, -im_};
        default: return {im_, -re_};
    }
}

int cmp(const GaussianInt& a, const GaussianInt& b) {
    int c = ::cmp(a.re(), b.re());
    if (c != 0) return c;
    return ::cmp(a.im(), b.im());
}

GaussianInt UnitPower::to_gaussian() const {
    return GaussianInt(1, 0).times_i_pow(n_);
}

std::pair<GaussianInt, GaussianInt> divrem(const GaussianInt& z, const GaussianInt& w) {
    if (w.is_zero()) throw std::domain_error("divrem: division by zero");
    const mpz_class n = w.norm();
    const GaussianInt p = z * w.conj();
    GaussianInt q(round_half_down(p.re(), n), round_half_down(p.im(), n));
    return {q, z - q * w};
}

const char* to_string(ParityClass c) {
    switch (c) {
        case ParityClass::E0: return "E0";
        case ParityClass::EI: return "EI";
        case ParityClass::O0: return "O0";
        default: return "OI";
    }
}

bool is_even(const GaussianInt& z) {
    return residue(z.re() + z.im(), 2) == 0;
}

bool is_odd(const GaussianInt& z) {
    return !is_even(z);
}

ParityClass classify(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("classify: zero is unclassified");
    const bool even = is_even(z);
    const bool re_even = residue(z.re(), 2) == 0;
    if (even) return re_even ? ParityClass::E0 : ParityClass::EI;
    return re_even ? ParityClass::O0 : ParityClass::OI;
}

bool is_OI(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("is_OI: zero input");
    return is_odd(z) && residue(z.re(), 4) == 1;
}

bool is_E0_prime(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("is_E0_prime: zero input");
    if (classify(z) != ParityClass::E0) return false;
    // gcd(re, im) exactly divisible by 2. Reading the defining condition as
    // literal equality would falsify the class multiplication laws
    // ((1+i)(3+3i) = 6i has gcd 6); the even part is what the laws constrain.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), z.re().get_mpz_t(), z.im().get_mpz_t());
    return residue(g, 4) == 2;
}

bool is_E0_dblprime(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("is_E0_dblprime: zero input");
    // (1+i)^2 = 2i, so z = 2i*beta with beta = (im/2) - (re/2)i.
    if (residue(z.re(), 2) != 0 || residue(z.im(), 2) != 0) return false;
    GaussianInt beta(z.im() / 2, -z.re() / 2);
    return is_odd(beta);
}

std::pair<int, int> square_residues(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("square_residues: zero input");
    const GaussianInt s = z.square();
    return {residue(s.re(), 4), residue(s.im(), 4)};
}

std::pair<UnitPower, GaussianInt> normalize_to_D(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("normalize_to_D: zero input");
    for (long n = 0; n < 4; ++n) {
        GaussianInt cand = z.times_i_pow(-n);
        if (cand.re() > 0 && -cand.re() < cand.im() && cand.im() <= cand.re())
            return {UnitPower(n), cand};
    }
    throw std::logic_error("normalize_to_D: no associate in D");  // unreachable
}

std::pair<UnitPower, GaussianInt> normalize_odd_to_OI(const GaussianInt& z) {
    if (z.is_zero() || is_even(z))
        throw std::domain_error("normalize_odd_to_OI: input must be odd");
    for (long n = 0; n < 4; ++n) {
        GaussianInt cand = z.times_i_pow(-n);
        if (residue(cand.re(), 4) == 1) return {UnitPower(n), cand};
    }
    throw std::logic_error("normalize_odd_to_OI: no associate in O^I");  // unreachable
}

std::string to_string(const GaussianInt& z) {
    std::string out = z.re().get_str();
    if (z.im() >= 0) {
        out += '+';
        out += z.im().get_str();
    } else {
        mpz_class a = -z.im();
        out += '-';
        out += a.get_str();
    }
    out += 'i';
    return out;
}

namespace {

// Replaces the Unicode minus sign (U+2212) with '-'.
std::string ascii_minus(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (size_t i = 0; i < text.size();) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 3;
        } else {
            s += text[i++];
        }
    }
    return s;
}

// Scans an optional sign plus digits; the digits may be omitted after an
// explicit sign or before a trailing 'i' ("+i", "i"), meaning 1.
bool scan_int(const std::string& s, size_t& pos, bool digits_optional, mpz_class& out) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_begin) {
        if (!digits_optional) {
            pos = start;
            return false;
        }
        out = neg ? -1 : 1;
        return true;
    }
    out = mpz_class(s.substr(digits_begin, pos - digits_begin), 10);
    if (neg) out = -out;
    return true;
}

}  // namespace

GaussianInt parse_gaussian(std::string_view text) {
    std::string s = ascii_minus(text);
    // trim outer whitespace
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("parse_gaussian: empty input");
    s = s.substr(b, e - b + 1);

    size_t pos = 0;
    mpz_class first;
    if (!scan_int(s, pos, /*digits_optional=*/true, first))
        throw std::invalid_argument("parse_gaussian: malformed input '" + s + "'");

    if (pos == s.size()) {
        // pure real; the digits were mandatory here
        if (s.find_first_of("0123456789") == std::string::npos)
            throw std::invalid_argument("parse_gaussian: malformed input '" + s + "'");
        return GaussianInt(first, 0);
    }
    if (s[pos] == 'i' && pos + 1 == s.size()) return GaussianInt(0, first);

    mpz_class second;
    if (!scan_int(s, pos, /*digits_optional=*/true, second) || pos >= s.size() ||
        s[pos] != 'i' || pos + 1 != s.size())
        throw std::invalid_argument("parse_gaussian: malformed input '" + s + "'");
    return GaussianInt(first, second);
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
    return os << to_string(z);
}

}  // namespace gaussdioph
