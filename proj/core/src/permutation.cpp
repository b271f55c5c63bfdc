#include "superdiv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superdiv {

Permutation::Permutation(std::size_t g) : images_(g) {
    std::iota(images_.begin(), images_.end(), std::size_t{0});
}

Permutation::Permutation(std::vector<std::size_t> images_zero_based)
    : images_(std::move(images_zero_based)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

int Permutation::sign() const {
    unsigned inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::transposition(std::size_t g, std::size_t i, std::size_t j) {
    Permutation p(g);
    if (i >= g || j >= g) throw std::invalid_argument("transposition letter out of range");
    std::swap(p.images_[i], p.images_[j]);
    return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("permutations act on different sets");
    std::vector<std::size_t> images(sigma.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = sigma.apply(tau.apply(i));
    return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(const std::string& text, std::size_t g) {
    std::vector<std::size_t> images(g);
    std::iota(images.begin(), images.end(), std::size_t{0});
    std::vector<bool> used(g, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("cycle notation: expected '(' in '" + text + "'");
        ++pos;
        std::vector<std::size_t> cycle;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == start)
                throw std::invalid_argument("cycle notation: expected a letter in '" + text +
                                            "'");
            unsigned long letter = std::stoul(text.substr(start, pos - start));
            if (letter < 1 || letter > g)
                throw std::invalid_argument("cycle letter out of range 1.." +
                                            std::to_string(g) + ": " + std::to_string(letter));
            if (used[letter - 1])
                throw std::invalid_argument("cycle letter repeated: " + std::to_string(letter));
            used[letter - 1] = true;
            cycle.push_back(letter - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;  // tolerate comma separators
        }
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k) images[cycle[k]] = cycle[k + 1];
        if (cycle.size() > 1) images[cycle.back()] = cycle.front();
        skip_ws();
    }
    return Permutation(std::move(images));
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<bool> seen(images_.size(), false);
    bool printed = false;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t i = start; !seen[i]; i = images_[i]) {
            seen[i] = true;
            cycle.push_back(i);
        }
        if (cycle.size() == 1) continue;
        out << '(';
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            if (k) out << ' ';
            out << cycle[k] + 1;
        }
        out << ')';
        printed = true;
    }
    if (!printed) return "()";
    return out.str();
}

std::vector<Permutation> all_permutations(std::size_t g) {
    std::vector<std::size_t> images(g);
    std::iota(images.begin(), images.end(), std::size_t{0});
    std::vector<Permutation> result;
    do {
        result.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
}

std::size_t max_cycle_letter(const std::string& text) {
    std::size_t best = 0, pos = 0;
    while (pos < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            best = std::max(best, static_cast<std::size_t>(
                                      std::stoul(text.substr(start, pos - start))));
        } else {
            ++pos;
        }
    }
    return best;
}

}  // namespace superdiv
