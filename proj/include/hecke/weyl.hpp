#pragma once

#include <string>
#include <vector>

namespace hecke {

// Which finite Weyl group the words live in: S_n (generators s_1..s_{n-1})
// or the hyperoctahedral group W(C_n) (additionally s_n, the sign change in
// the last coordinate).
enum class WeylType { A, C };

// A signed permutation of {1..n} in window notation: window[i-1] = +-j means
// the element sends X_i to X_j^{+-1}. For WeylType::A all entries are
// positive. Elements compose as substitutions: (u*w) acts as u after w.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> window);

    static SignedPermutation identity(int n);
    // s_i for 1 <= i <= n-1 (swap), s_n (sign change at position n).
    static SignedPermutation simple_reflection(int n, int i);

    int rank() const { return static_cast<int>(window_.size()); }
    bool is_identity() const;
    // Signed image of i (1-based), in {+-1..+-n}.
    int image(int i) const { return window_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& window() const { return window_; }

    SignedPermutation operator*(const SignedPermutation& o) const;
    SignedPermutation inverse() const;
    bool operator==(const SignedPermutation& o) const { return window_ == o.window_; }
    bool operator!=(const SignedPermutation& o) const { return window_ != o.window_; }
    bool operator<(const SignedPermutation& o) const { return window_ < o.window_; }

    // Coxeter length: the number of positive roots mapped to negative ones
    // (inversions for type A).
    int length(WeylType type) const;
    // A reduced word (i_1, ..., i_k) with *this == s_{i_1} * ... * s_{i_k}.
    std::vector<int> reduced_word(WeylType type) const;

    // "[2,-1,3]" window form, "e" for the identity.
    std::string to_string() const;
    // "s1.s2" reduced-word form, "e" for the identity.
    std::string word_string(WeylType type) const;

private:
    std::vector<int> window_;
};

}  // namespace hecke
