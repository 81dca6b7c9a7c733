#pragma once

// Permutations of {1..n}, stored 0-based, and generator-image homomorphisms.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace galcov {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : img_(n) {
        for (int i = 0; i < n; ++i) img_[i] = i;
    }
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}

    static Permutation transposition(int a, int b, int n) {
        Permutation p(n);
        std::swap(p.img_[a - 1], p.img_[b - 1]);
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    // 1-based application
    int operator()(int i) const { return img_[i - 1] + 1; }
    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }
    // "this then rhs" composition
    Permutation then(const Permutation& rhs) const {
        std::vector<int> out(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) out[i] = rhs.img_[img_[i]];
        return Permutation(out);
    }
    Permutation inverse() const {
        std::vector<int> out(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) out[img_[i]] = static_cast<int>(i);
        return Permutation(out);
    }
    std::set<int> support() const {  // 1-based moved points
        std::set<int> s;
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) s.insert(i + 1);
        return s;
    }
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

// Generator images of a presentation's generators in S_n.
struct PermutationHom {
    int degree = 0;
    std::vector<Permutation> images;  // images[g-1] for generator g

    const Permutation& image(int gen) const { return images.at(std::abs(gen) - 1); }

    Permutation word_image(const Word& w) const {
        Permutation acc(degree);
        for (int x : w) acc = x > 0 ? acc.then(image(x)) : acc.then(image(x).inverse());
        return acc;
    }
};

}  // namespace galcov
