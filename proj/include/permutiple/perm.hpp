#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "permutiple/errors.hpp"

namespace permutiple {

// A permutation of {0,...,k} in one-line form: image()[j] is the image of j.
// Values are immutable after construction.
class Perm {
public:
    explicit Perm(std::vector<int> image) : image_(std::move(image)) {
        if (image_.empty())
            throw std::invalid_argument("permutation must be nonempty");
        std::vector<bool> seen(image_.size(), false);
        for (int v : image_) {
            if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
                throw std::invalid_argument("image is not a bijection of {0,...,k}");
            seen[v] = true;
        }
    }

    static Perm identity(int size) {
        std::vector<int> img(size);
        std::iota(img.begin(), img.end(), 0);
        return Perm(std::move(img));
    }

    // psi: the (k+1)-cycle j -> j+1 mod size, so that a vector permuted by
    // psi reads its successor entry: (x o psi)[j] = x[j+1 mod size].
    static Perm cycle_shift(int size) {
        std::vector<int> img(size);
        for (int j = 0; j < size; ++j) img[j] = (j + 1) % size;
        return Perm(std::move(img));
    }

    // rho: the reversal j -> k-j.
    static Perm reversal(int size) {
        std::vector<int> img(size);
        for (int j = 0; j < size; ++j) img[j] = size - 1 - j;
        return Perm(std::move(img));
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int j) const { return image_[j]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const {
        for (int j = 0; j < size(); ++j)
            if (image_[j] != j) return false;
        return true;
    }

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> image_;
};

// compose(p, q)(j) = p(q(j)).
inline Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw size_mismatch("compose: sizes differ");
    std::vector<int> img(p.size());
    for (int j = 0; j < p.size(); ++j) img[j] = p(q(j));
    return Perm(std::move(img));
}

inline Perm inverse(const Perm& p) {
    std::vector<int> img(p.size());
    for (int j = 0; j < p.size(); ++j) img[p(j)] = j;
    return Perm(std::move(img));
}

// p^e for any integer e (negative exponents use the inverse).
inline Perm power(const Perm& p, long e) {
    Perm base = e < 0 ? inverse(p) : p;
    if (e < 0) e = -e;
    Perm acc = Perm::identity(p.size());
    while (e > 0) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

inline int order(const Perm& p) {
    Perm acc = p;
    int m = 1;
    while (!acc.is_identity()) {
        acc = compose(acc, p);
        ++m;
    }
    return m;
}

// conjugate(tau, by) = by o tau o by^-1.
inline Perm conjugate(const Perm& tau, const Perm& by) {
    return compose(compose(by, tau), inverse(by));
}

// Cycles of p, each rotated to start at its smallest element, sorted by that
// element. Fixed points appear as singleton cycles.
inline std::vector<std::vector<int>> cycles(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.size(), false);
    for (int start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int j = start; !seen[j]; j = p(j)) {
            seen[j] = true;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> lens;
    for (const auto& c : cycles(p)) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end());
    return lens;
}

inline bool is_full_cycle(const Perm& p) {
    return cycles(p).size() == 1;
}

inline std::string to_cycle_string(const Perm& p) {
    std::string out;
    for (const auto& c : cycles(p)) {
        if (c.size() < 2) continue;
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c[i]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

inline std::string to_oneline_string(const Perm& p) {
    std::string out = "[";
    for (int j = 0; j < p.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(p(j));
    }
    out += ']';
    return out;
}

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!consume(c)) throw parse_error(std::string("expected '") + c + "' in " + what, pos);
    }
    long integer(const char* what) {
        skip_ws();
        std::size_t start = pos;
        bool neg = pos < text.size() && text[pos] == '-';
        if (neg) ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error(std::string("expected integer in ") + what, start);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000'000L) throw parse_error("integer too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }
};

}  // namespace detail

// Accepts cycle notation "(0,4)(1,3)" (fixed points implicit, "()" is the
// identity), one-line notation "[4,3,2,1,0]", and the named shorthands
// "rho", "psi" and "psi^j". Cycles need not be disjoint; juxtaposition
// composes right-to-left as usual.
inline Perm parse_perm(std::string_view text, int size) {
    if (size < 1) throw std::invalid_argument("permutation size must be >= 1");
    detail::Cursor cur{text};
    cur.skip_ws();

    if (cur.peek() == '[') {
        cur.expect('[', "one-line permutation");
        std::vector<int> img;
        if (!cur.consume(']')) {
            do {
                img.push_back(static_cast<int>(cur.integer("one-line permutation")));
            } while (cur.consume(','));
            cur.expect(']', "one-line permutation");
        }
        if (!cur.at_end()) throw parse_error("trailing characters after permutation", cur.pos);
        if (static_cast<int>(img.size()) != size)
            throw parse_error("one-line permutation has wrong length", 0);
        return Perm(std::move(img));
    }

    if (cur.peek() == '(') {
        std::vector<std::vector<int>> cycs;
        while (cur.consume('(')) {
            std::vector<int> cyc;
            if (!cur.consume(')')) {
                do {
                    long v = cur.integer("cycle");
                    if (v < 0 || v >= size) throw parse_error("cycle entry out of range", cur.pos);
                    if (std::find(cyc.begin(), cyc.end(), static_cast<int>(v)) != cyc.end())
                        throw parse_error("repeated entry within a cycle", cur.pos);
                    cyc.push_back(static_cast<int>(v));
                } while (cur.consume(','));
                cur.expect(')', "cycle");
            }
            cycs.push_back(std::move(cyc));
        }
        if (!cur.at_end()) throw parse_error("trailing characters after permutation", cur.pos);
        // Apply cycles right-to-left so that "(1,2)(0,1)" composes as functions.
        Perm result = Perm::identity(size);
        for (auto it = cycs.rbegin(); it != cycs.rend(); ++it) {
            const auto& cyc = *it;
            if (cyc.size() < 2) continue;
            std::vector<int> img(size);
            std::iota(img.begin(), img.end(), 0);
            for (std::size_t i = 0; i < cyc.size(); ++i)
                img[cyc[i]] = cyc[(i + 1) % cyc.size()];
            result = compose(Perm(std::move(img)), result);
        }
        return result;
    }

    // Named shorthands.
    std::size_t start = cur.pos;
    std::string name;
    while (cur.pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[cur.pos]))))
        name += text[cur.pos++];
    if (name == "rho") {
        if (!cur.at_end()) throw parse_error("trailing characters after permutation", cur.pos);
        return Perm::reversal(size);
    }
    if (name == "psi") {
        long exp = 1;
        if (cur.consume('^')) exp = cur.integer("psi exponent");
        if (!cur.at_end()) throw parse_error("trailing characters after permutation", cur.pos);
        return power(Perm::cycle_shift(size), exp);
    }
    if (name == "e" || name == "id" || name == "identity") {
        if (!cur.at_end()) throw parse_error("trailing characters after permutation", cur.pos);
        return Perm::identity(size);
    }
    throw parse_error("unrecognized permutation syntax", start);
}

}  // namespace permutiple
