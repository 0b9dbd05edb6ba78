#pragma once

#include <cassert>
#include <numeric>
#include <optional>
#include <variant>

#include "permutiple/digits.hpp"

namespace permutiple {

// Carries c_0..c_k of a single-digit multiplication by `multiplier`.
// Always c_0 = 0 and 0 <= c_j <= multiplier-1.
class CarryVector {
public:
    CarryVector(int multiplier, std::vector<int> carries)
        : multiplier_(multiplier), carries_(std::move(carries)) {
        if (multiplier_ < 2) throw std::invalid_argument("multiplier must be > 1");
        if (carries_.empty()) throw std::invalid_argument("carry vector must be nonempty");
        if (carries_.front() != 0) throw std::invalid_argument("c_0 must be 0");
        for (int c : carries_)
            if (c < 0 || c > multiplier_ - 1)
                throw std::invalid_argument("carry out of range [0, n-1]");
    }

    int multiplier() const { return multiplier_; }
    int size() const { return static_cast<int>(carries_.size()); }
    int operator[](int j) const { return carries_[j]; }
    const std::vector<int>& carries() const { return carries_; }

    std::vector<int> display() const {
        return std::vector<int>(carries_.rbegin(), carries_.rend());
    }

    friend bool operator==(const CarryVector&, const CarryVector&) = default;

private:
    int multiplier_;
    std::vector<int> carries_;
};

// A verified (n, b, sigma)-permutiple: digits = n * (digits permuted by
// sigma) as base-b values, with the carries of that multiplication.
struct PermutipleWitness {
    int n;
    DigitTuple digits;
    Perm sigma;
    CarryVector carries;

    int base() const { return digits.base(); }
    int length() const { return digits.length(); }

    friend bool operator==(const PermutipleWitness&, const PermutipleWitness&) = default;
};

struct Multiplication {
    DigitTuple product;
    CarryVector carries;
};

// Schoolbook single-digit multiplication of q by n in q's base. Returns
// nullopt when the product needs k+2 digits (a legitimate outcome search
// code branches on, not an error).
inline std::optional<Multiplication> multiply_with_carries(const DigitTuple& q, int n) {
    if (n <= 1 || n >= q.base()) throw precondition_error("multiplier must satisfy 1 < n < b");
    const int b = q.base();
    std::vector<int> product(q.length());
    std::vector<int> carries(q.length());
    long long carry = 0;
    for (int j = 0; j < q.length(); ++j) {
        carries[j] = static_cast<int>(carry);
        long long t = static_cast<long long>(n) * q.digit(j) + carry;
        product[j] = static_cast<int>(t % b);
        carry = t / b;
    }
    if (carry != 0) return std::nullopt;
    return Multiplication{DigitTuple(b, std::move(product)), CarryVector(n, std::move(carries))};
}

// Why a candidate (digits, n, sigma) is not a permutiple.
struct NotPermutiple {
    bool overflow = false;   // n * permuted digits needs an extra digit
    int mismatch_index = -1; // lowest j where the product digit differs
};

using VerifyResult = std::variant<PermutipleWitness, NotPermutiple>;

inline bool is_witness(const VerifyResult& r) {
    return std::holds_alternative<PermutipleWitness>(r);
}

inline const PermutipleWitness& witness(const VerifyResult& r) {
    return std::get<PermutipleWitness>(r);
}

inline const NotPermutiple& failure(const VerifyResult& r) {
    return std::get<NotPermutiple>(r);
}

// Checks digits = n * apply_perm(digits, sigma) by doing the multiplication.
inline VerifyResult verify(const DigitTuple& digits, int n, const Perm& sigma) {
    if (sigma.size() != digits.length()) throw size_mismatch("verify: sigma size != tuple length");
    auto mul = multiply_with_carries(apply_perm(digits, sigma), n);
    if (!mul) return NotPermutiple{true, -1};
    for (int j = 0; j < digits.length(); ++j)
        if (mul->product.digit(j) != digits.digit(j)) return NotPermutiple{false, j};
    return PermutipleWitness{n, digits, sigma, std::move(mul->carries)};
}

// The digit/carry relation b*c_{j+1} - c_j = n*d_{sigma(j)} - d_j at every
// index, with index k+1 identified with 0 (both carries are zero there, so
// the relation is uniformly cyclic).
inline bool check_fundamental(const DigitTuple& digits, const Perm& sigma,
                              const CarryVector& carries, int n) {
    const int len = digits.length();
    if (sigma.size() != len || carries.size() != len)
        throw size_mismatch("check_fundamental: sizes differ");
    const long long b = digits.base();
    for (int j = 0; j < len; ++j) {
        long long lhs = b * carries[(j + 1) % len] - carries[j];
        long long rhs = static_cast<long long>(n) * digits.digit(sigma(j)) - digits.digit(j);
        if (lhs != rhs) return false;
    }
    return true;
}

// Builds a witness from the relation alone, without re-running the
// multiplication; the relation with c_0 = 0 and carries < n already forces
// digits = n * permuted digits.
inline std::optional<PermutipleWitness> witness_from_relation(const DigitTuple& digits,
                                                              const Perm& sigma,
                                                              const CarryVector& carries,
                                                              int n) {
    if (carries.multiplier() != n)
        throw precondition_error("carry vector multiplier does not match n");
    if (n <= 1 || n >= digits.base()) throw precondition_error("multiplier must satisfy 1 < n < b");
    if (!check_fundamental(digits, sigma, carries, n)) return std::nullopt;
    PermutipleWitness w{n, digits, sigma, carries};
#ifndef NDEBUG
    auto direct = verify(digits, n, sigma);
    assert(is_witness(direct) && witness(direct).carries == carries);
#endif
    return w;
}

namespace detail {

inline Int pow_int(long base, int exp) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

}  // namespace detail

// Closed form for the digits in terms of the carries:
//   d_j = (1/(n^m - 1)) * sum_{l=0}^{m-1} (b*c_{psi sigma^l(j)} - c_{sigma^l(j)}) n^l
// with m the order of sigma. Returns nullopt when any d_j is not an integer
// in [0, b) — no permutiple has these carries under sigma.
inline std::optional<DigitTuple> digits_from_carries(const CarryVector& carries,
                                                     const Perm& sigma, int base) {
    const int len = carries.size();
    if (sigma.size() != len) throw size_mismatch("digits_from_carries: sizes differ");
    const int n = carries.multiplier();
    if (n >= base) throw precondition_error("multiplier must satisfy 1 < n < b");
    const int m = order(sigma);
    const Int denom = detail::pow_int(n, m) - 1;
    std::vector<int> digits(len);
    for (int j = 0; j < len; ++j) {
        Int num = 0;
        Int npow = 1;
        int idx = j;  // sigma^l(j)
        for (int l = 0; l < m; ++l) {
            int shifted = (idx + 1) % len;  // psi sigma^l(j)
            num += (Int(base) * carries[shifted] - carries[idx]) * npow;
            npow *= n;
            idx = sigma(idx);
        }
        if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t())) return std::nullopt;
        Int d = num / denom;
        if (d < 0 || d >= base) return std::nullopt;
        digits[j] = static_cast<int>(d.get_si());
    }
    return DigitTuple(base, std::move(digits));
}

// Mirror image of digits_from_carries:
//   c_j = (1/(b^{k+1} - 1)) * sum_{l=0}^{k} (n*d_{sigma psi^l(j)} - d_{psi^l(j)}) b^l
// Returns nullopt when any c_j is not an integer in [0, n) or c_0 != 0.
inline std::optional<CarryVector> carries_from_digits(const DigitTuple& digits,
                                                      const Perm& sigma, int n) {
    const int len = digits.length();
    if (sigma.size() != len) throw size_mismatch("carries_from_digits: sizes differ");
    if (n <= 1 || n >= digits.base()) throw precondition_error("multiplier must satisfy 1 < n < b");
    const int b = digits.base();
    const Int denom = detail::pow_int(b, len) - 1;
    std::vector<int> carries(len);
    for (int j = 0; j < len; ++j) {
        Int num = 0;
        Int bpow = 1;
        int idx = j;  // psi^l(j)
        for (int l = 0; l < len; ++l) {
            num += (Int(n) * digits.digit(sigma(idx)) - digits.digit(idx)) * bpow;
            bpow *= b;
            idx = (idx + 1) % len;
        }
        if (!mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t())) return std::nullopt;
        Int c = num / denom;
        if (c < 0 || c >= n) return std::nullopt;
        carries[j] = static_cast<int>(c.get_si());
    }
    if (carries.front() != 0) return std::nullopt;
    return CarryVector(n, std::move(carries));
}

// gcd(n, b) divides the first digit of every permutiple; used as a pruning
// filter in searches.
inline bool first_digit_admissible(int d0, int n, int b) {
    return d0 % std::gcd(n, b) == 0;
}

}  // namespace permutiple
