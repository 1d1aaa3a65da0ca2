#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "systolic/errors.hpp"
#include "systolic/isometry.hpp"

namespace systolic {

// Letters of the rank-2 free group in enumeration order A < A^-1 < B < B^-1.
// The inverse of a letter is its pair under x ^ 1.
using Letter = std::uint8_t;
inline constexpr Letter kLetterA = 0;
inline constexpr Letter kLetterAInv = 1;
inline constexpr Letter kLetterB = 2;
inline constexpr Letter kLetterBInv = 3;

// Depth guard: 16 letters is ~86M freely reduced words, enumerated as a
// stream with no materialization.
inline constexpr int kMaxWordDepth = 16;

inline Letter inverse_letter(Letter x) { return static_cast<Letter>(x ^ 1u); }
inline char letter_char(Letter x) { return "AaBb"[x]; }

// Freely reduced word over {A, A^-1, B, B^-1}.
struct Word {
    std::vector<Letter> letters;

    std::string str() const {
        std::string s;
        s.reserve(letters.size());
        for (Letter l : letters) s.push_back(letter_char(l));
        return s;
    }

    bool operator==(const Word& o) const = default;
};

inline bool freely_reduced(const Letter* w, std::size_t n) {
    for (std::size_t i = 1; i < n; ++i)
        if (w[i] == inverse_letter(w[i - 1])) return false;
    return true;
}

inline bool cyclically_reduced(const Letter* w, std::size_t n) {
    if (!freely_reduced(w, n)) return false;
    return n <= 1 || w[0] != inverse_letter(w[n - 1]);
}

inline void check_depth(int depth) {
    if (depth < 1 || depth > kMaxWordDepth)
        throw std::domain_error("depth must lie in [1, 16], got " + std::to_string(depth));
}

namespace detail {

template <class Fn>
void visit_from(const std::array<Isometry, 4>& gens, Letter* buf, Isometry* mats, int len,
                int max_len, Fn&& fn) {
    if (len == max_len) return;
    const Letter forbidden = len > 0 ? inverse_letter(buf[len - 1]) : Letter{4};
    for (Letter l = 0; l < 4; ++l) {
        if (l == forbidden) continue;
        buf[len] = l;
        mats[len + 1] = compose(mats[len], gens[l]);
        fn(static_cast<const Letter*>(buf), len + 1, mats[len + 1]);
        visit_from(gens, buf, mats, len + 1, max_len, fn);
    }
}

}  // namespace detail

// Visits exactly the freely reduced words of length 1..max_len in
// lexicographic order (each word before its extensions), paired with the
// matrix of the corresponding group element. fn(letters, len, isometry).
template <class Fn>
void visit_reduced_words(const std::array<Isometry, 4>& gens, int max_len, Fn&& fn) {
    check_depth(max_len);
    std::array<Letter, kMaxWordDepth> buf{};
    std::array<Isometry, kMaxWordDepth + 1> mats{};
    mats[0] = identity_isometry();
    detail::visit_from(gens, buf.data(), mats.data(), 0, max_len, fn);
}

// The 12 two-letter reduced prefixes in lexicographic order: the canonical
// partition of the word tree for parallel workers (4-way by first letter,
// then 3-way).
inline std::array<std::array<Letter, 2>, 12> two_letter_prefixes() {
    std::array<std::array<Letter, 2>, 12> out{};
    int k = 0;
    for (Letter first = 0; first < 4; ++first)
        for (Letter second = 0; second < 4; ++second)
            if (second != inverse_letter(first)) out[k++] = {first, second};
    return out;
}

// Visits the given two-letter prefix word and then every reduced extension
// of it up to max_len, in lexicographic order.
template <class Fn>
void visit_prefix_subtree(const std::array<Isometry, 4>& gens, std::array<Letter, 2> prefix,
                          int max_len, Fn&& fn) {
    std::array<Letter, kMaxWordDepth> buf{};
    std::array<Isometry, kMaxWordDepth + 1> mats{};
    mats[0] = identity_isometry();
    buf[0] = prefix[0];
    mats[1] = compose(mats[0], gens[prefix[0]]);
    buf[1] = prefix[1];
    mats[2] = compose(mats[1], gens[prefix[1]]);
    fn(static_cast<const Letter*>(buf.data()), 2, mats[2]);
    detail::visit_from(gens, buf.data(), mats.data(), 2, max_len, fn);
}

}  // namespace systolic
