#include "hecke/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hecke {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = rank();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : window_) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[static_cast<size_t>(a - 1)])
            throw std::invalid_argument("SignedPermutation: invalid window");
        seen[static_cast<size_t>(a - 1)] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::simple_reflection(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("simple_reflection: index out of range");
    SignedPermutation s = identity(n);
    if (i < n) {
        std::swap(s.window_[static_cast<size_t>(i - 1)], s.window_[static_cast<size_t>(i)]);
    } else {
        s.window_[static_cast<size_t>(n - 1)] = -n;
    }
    return s;
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (window_[static_cast<size_t>(i)] != i + 1) return false;
    return true;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("SignedPermutation: rank mismatch");
    std::vector<int> w(window_.size());
    for (int i = 1; i <= rank(); ++i) {
        const int m = o.image(i);
        const int v = image(std::abs(m));
        w[static_cast<size_t>(i - 1)] = m < 0 ? -v : v;
    }
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> w(window_.size());
    for (int i = 1; i <= rank(); ++i) {
        const int m = image(i);
        w[static_cast<size_t>(std::abs(m) - 1)] = m < 0 ? -i : i;
    }
    return SignedPermutation(std::move(w));
}

int SignedPermutation::length(WeylType type) const {
    const int n = rank();
    int len = 0;
    // Roots e_i - e_j and (type C) e_i + e_j for i < j, plus 2e_i. The image
    // of a root is negative iff its lowest-index coordinate is negative.
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int wi = image(i);
            const int wj = image(j);
            // e_i - e_j maps to sign(wi) e_|wi| - sign(wj) e_|wj|.
            {
                int ca;
                if (std::abs(wi) < std::abs(wj)) {
                    ca = wi < 0 ? -1 : 1;
                } else {
                    ca = wj < 0 ? 1 : -1;
                }
                if (ca < 0) ++len;
            }
            if (type == WeylType::C) {
                // e_i + e_j
                int ca;
                if (std::abs(wi) < std::abs(wj)) {
                    ca = wi < 0 ? -1 : 1;
                } else {
                    ca = wj < 0 ? -1 : 1;
                }
                if (ca < 0) ++len;
            }
        }
        if (type == WeylType::C && image(i) < 0) ++len;  // 2e_i
    }
    return len;
}

std::vector<int> SignedPermutation::reduced_word(WeylType type) const {
    const int n = rank();
    const int gen_max = type == WeylType::C ? n : n - 1;
    std::vector<int> word;
    SignedPermutation w = *this;
    int len = w.length(type);
    while (len > 0) {
        bool moved = false;
        for (int i = 1; i <= gen_max; ++i) {
            SignedPermutation ws = w * simple_reflection(n, i);
            const int l2 = ws.length(type);
            if (l2 < len) {
                // w = ws * s_i, so s_i is the last letter.
                word.push_back(i);
                w = std::move(ws);
                len = l2;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("reduced_word: no descent found");
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string SignedPermutation::to_string() const {
    if (is_identity()) return "e";
    std::ostringstream out;
    out << "[";
    for (int i = 1; i <= rank(); ++i) {
        if (i > 1) out << ",";
        out << image(i);
    }
    out << "]";
    return out.str();
}

std::string SignedPermutation::word_string(WeylType type) const {
    if (is_identity()) return "e";
    std::ostringstream out;
    bool first = true;
    for (int i : reduced_word(type)) {
        if (!first) out << ".";
        out << "s" << i;
        first = false;
    }
    return out.str();
}

}  // namespace hecke
