#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace superdiv {

// Permutation of {1..g}, stored 0-based. Composition follows
// (sigma ∘ tau)(i) = sigma(tau(i)).
class Permutation {
public:
    explicit Permutation(std::size_t g);  // identity
    explicit Permutation(std::vector<std::size_t> images_zero_based);

    std::size_t size() const { return images_.size(); }
    std::size_t apply(std::size_t i) const { return images_.at(i); }  // 0-based
    const std::vector<std::size_t>& images() const { return images_; }

    Permutation inverse() const;
    int sign() const;

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }

    static Permutation transposition(std::size_t g, std::size_t i, std::size_t j);  // 0-based

    // Cycle notation with 1-based letters, e.g. "(1 2)(3)". Letters absent
    // from the input are fixed points.
    static Permutation parse_cycles(const std::string& text, std::size_t g);
    std::string to_cycles() const;

private:
    std::vector<std::size_t> images_;
};

Permutation compose(const Permutation& sigma, const Permutation& tau);

// All g! permutations in lexicographic order of their one-line images —
// the deterministic enumeration order used by Reynolds averaging.
std::vector<Permutation> all_permutations(std::size_t g);

// Largest letter mentioned in a cycle-notation string (0 when none), used to
// infer g for the CLI.
std::size_t max_cycle_letter(const std::string& text);

}  // namespace superdiv
