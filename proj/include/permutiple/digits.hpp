#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permutiple/errors.hpp"
#include "permutiple/perm.hpp"

namespace permutiple {

// Exact unbounded integer used for all positional values and closed forms.
using Int = mpz_class;

// An ordered tuple of base-b digits, index 0 least significant. Leading
// zeros (a zero top digit) are allowed. Base 2 is excluded: the only
// multiplier it admits is trivial.
class DigitTuple {
public:
    DigitTuple(int base, std::vector<int> digits_lsd)
        : base_(base), digits_(std::move(digits_lsd)) {
        if (base_ < 3) throw std::invalid_argument("base must be >= 3");
        if (digits_.empty()) throw std::invalid_argument("digit tuple must be nonempty");
        for (int d : digits_)
            if (d < 0 || d >= base_)
                throw std::invalid_argument("digit out of range for base");
    }

    // Construct from the written order (d_k, ..., d_0).
    static DigitTuple from_display(int base, std::vector<int> msd_first) {
        std::reverse(msd_first.begin(), msd_first.end());
        return DigitTuple(base, std::move(msd_first));
    }

    int base() const { return base_; }
    int length() const { return static_cast<int>(digits_.size()); }
    int digit(int j) const { return digits_[j]; }
    const std::vector<int>& digits() const { return digits_; }

    std::vector<int> display() const {
        return std::vector<int>(digits_.rbegin(), digits_.rend());
    }

    friend bool operator==(const DigitTuple&, const DigitTuple&) = default;

private:
    int base_;
    std::vector<int> digits_;
};

// Value order for same-length tuples; ties broken by base.
inline bool arrangement_less(const DigitTuple& a, const DigitTuple& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    auto da = a.display(), db = b.display();
    if (da != db) return da < db;
    return a.base() < b.base();
}

inline Int to_integer(const DigitTuple& t) {
    Int v = 0;
    for (int j = t.length() - 1; j >= 0; --j) {
        v *= t.base();
        v += t.digit(j);
    }
    return v;
}

inline DigitTuple from_integer(const Int& value, int base, int width) {
    if (base < 3) throw std::invalid_argument("base must be >= 3");
    if (width < 1) throw std::invalid_argument("width must be >= 1");
    if (value < 0) throw std::invalid_argument("value must be nonnegative");
    Int rest = value;
    std::vector<int> digits(width);
    for (int j = 0; j < width; ++j) {
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), base);
        digits[j] = static_cast<int>(r.get_ui());
        rest = q;
    }
    if (rest != 0) throw value_overflow("value does not fit in the requested width");
    return DigitTuple(base, std::move(digits));
}

// Result digit j is t's digit at p(j).
inline DigitTuple apply_perm(const DigitTuple& t, const Perm& p) {
    if (p.size() != t.length()) throw size_mismatch("apply_perm: sizes differ");
    std::vector<int> out(t.length());
    for (int j = 0; j < t.length(); ++j) out[j] = t.digit(p(j));
    return DigitTuple(t.base(), std::move(out));
}

// Digit value -> multiplicity.
using DigitMultiset = std::map<int, int>;

inline DigitMultiset digit_multiset(const std::vector<int>& digits) {
    DigitMultiset m;
    for (int d : digits) ++m[d];
    return m;
}

inline DigitMultiset digit_multiset(const DigitTuple& t) {
    return digit_multiset(t.digits());
}

// All permutations p with source.digit(p(j)) == target.digit(j) for every j,
// sorted by image. Empty when the two tuples do not share a digit multiset.
// The count is the product of the multiplicities' factorials.
inline std::vector<Perm> position_matchings(const DigitTuple& source, const DigitTuple& target) {
    if (source.length() != target.length() || source.base() != target.base()) return {};
    if (digit_multiset(source) != digit_multiset(target)) return {};
    const int len = source.length();

    std::map<int, std::vector<int>> src_pos, tgt_pos;
    for (int i = 0; i < len; ++i) src_pos[source.digit(i)].push_back(i);
    for (int j = 0; j < len; ++j) tgt_pos[target.digit(j)].push_back(j);

    std::vector<std::vector<int>> images{std::vector<int>(len, -1)};
    for (auto& [value, targets] : tgt_pos) {
        std::vector<int> sources = src_pos[value];  // ascending, so the loop below is exhaustive
        std::vector<std::vector<int>> next;
        do {
            for (const auto& img : images) {
                std::vector<int> ext = img;
                for (std::size_t t = 0; t < targets.size(); ++t) ext[targets[t]] = sources[t];
                next.push_back(std::move(ext));
            }
        } while (std::next_permutation(sources.begin(), sources.end()));
        images = std::move(next);
    }

    std::sort(images.begin(), images.end());
    std::vector<Perm> out;
    out.reserve(images.size());
    for (auto& img : images) out.emplace_back(std::move(img));
    return out;
}

// The lexicographically smallest matching, without enumerating the rest.
inline std::optional<Perm> first_position_matching(const DigitTuple& source,
                                                   const DigitTuple& target) {
    if (source.length() != target.length() || source.base() != target.base()) return std::nullopt;
    if (digit_multiset(source) != digit_multiset(target)) return std::nullopt;
    const int len = source.length();
    std::map<int, std::vector<int>> src_pos;
    for (int i = len - 1; i >= 0; --i) src_pos[source.digit(i)].push_back(i);  // descending, pop smallest
    std::vector<int> img(len);
    for (int j = 0; j < len; ++j) {
        auto& avail = src_pos[target.digit(j)];
        img[j] = avail.back();
        avail.pop_back();
    }
    return Perm(std::move(img));
}

// --- text formats ------------------------------------------------------
//
// Digit tuples are written most significant first, "(5,1,8,6,10,3)_12".
// Plain tuples (carry vectors) use the same layout without a base suffix.

inline std::string format_plain_tuple(const std::vector<int>& msd_first) {
    std::string out = "(";
    for (std::size_t i = 0; i < msd_first.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(msd_first[i]);
    }
    out += ')';
    return out;
}

inline std::string to_string(const DigitTuple& t) {
    return format_plain_tuple(t.display()) + "_" + std::to_string(t.base());
}

// Parses "(a,b,...,z)" and returns the entries in written order.
inline std::vector<int> parse_plain_tuple(std::string_view text) {
    detail::Cursor cur{text};
    cur.expect('(', "tuple");
    std::vector<int> entries;
    if (!cur.consume(')')) {
        do {
            long v = cur.integer("tuple");
            if (v < 0) throw parse_error("tuple entries must be nonnegative", cur.pos);
            entries.push_back(static_cast<int>(v));
        } while (cur.consume(','));
        cur.expect(')', "tuple");
    }
    if (!cur.at_end()) throw parse_error("trailing characters after tuple", cur.pos);
    if (entries.empty()) throw parse_error("tuple must have at least one entry", 0);
    return entries;
}

// Parses "(d_k,...,d_0)_b"; the base suffix may be omitted when a default
// base is supplied.
inline DigitTuple parse_digit_tuple(std::string_view text,
                                    std::optional<int> default_base = std::nullopt) {
    detail::Cursor cur{text};
    cur.expect('(', "digit tuple");
    std::vector<int> msd;
    if (!cur.consume(')')) {
        do {
            long v = cur.integer("digit tuple");
            if (v < 0) throw parse_error("digits must be nonnegative", cur.pos);
            msd.push_back(static_cast<int>(v));
        } while (cur.consume(','));
        cur.expect(')', "digit tuple");
    }
    if (msd.empty()) throw parse_error("digit tuple must have at least one digit", 0);
    int base;
    if (cur.consume('_')) {
        long b = cur.integer("base");
        if (b < 3) throw parse_error("base must be >= 3", cur.pos);
        base = static_cast<int>(b);
    } else if (default_base) {
        base = *default_base;
    } else {
        throw parse_error("missing base suffix (_b)", cur.pos);
    }
    if (!cur.at_end()) throw parse_error("trailing characters after digit tuple", cur.pos);
    for (std::size_t i = 0; i < msd.size(); ++i)
        if (msd[i] >= base) throw parse_error("digit exceeds base", 0);
    return DigitTuple::from_display(base, std::move(msd));
}

}  // namespace permutiple
