#pragma once

// Finitely presented groups: generators with display names, relator words,
// and a per-relator provenance string. Relators are kept cyclically reduced.

#include <string>
#include <vector>

#include "word.hpp"

namespace galcov {

struct Presentation {
    std::vector<std::string> names;  // names[g-1] for generator g
    std::vector<Word> relators;
    std::vector<std::string> provenance;  // parallel to relators; may be empty

    int ngens() const { return static_cast<int>(names.size()); }

    void add_relator(Word w, std::string tag = {}) {
        relators.push_back(cyclic_reduce(std::move(w)));
        provenance.push_back(std::move(tag));
    }

    const std::string& name(int gen) const { return names.at(std::abs(gen) - 1); }
    std::string word_string(const Word& w) const;
};

// Default generator names g1..gN.
Presentation make_presentation(int ngens);

// p plus one relator g^2 per generator.
Presentation add_square_relators(const Presentation& p);

// Text dump: generators one per line, then relators one per line as words,
// with provenance emitted as comments. Stable across runs.
std::string dump_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

// Parse a word over p's generator names ("g3 g4p^-1 g1").
Word parse_word(const Presentation& p, const std::string& text);

}  // namespace galcov
